"""Hypergeometric functions of argument ``sin^2 x`` and their Fourier series.

Generalized hypergeometric series ``pFq`` by direct summation with a
ratio-based tail bound, the digamma function, and a family of
trigonometric-series identities: the elementary expansions of
``e^{inx}/(n+a)``, their one-sided truncations (``3F2``/``4F3`` forms),
Newton's ``2F1`` formulas, Gegenbauer-type and quadratic-transformation
expansions, Tricomi's series for ``K``, and a three-term ``3F2``
expansion.

Slowly convergent trigonometric series ``sum c(n) e^{i n theta}`` are
summed with :func:`identlab.numkernel.sum_oscillatory_power` (iterated
averaging with the known phase ratio).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import gamma as _gamma

from .numkernel import (
    EPS,
    ApproxComplex,
    CheckResult,
    ConvergenceFailure,
    Tolerance,
    count_evals,
    make_check,
    sum_blocks_richardson,
    sum_oscillatory_power,
)
from .qfun import elliptic_K

__all__ = [
    "PochhammerSymbol",
    "HypergeometricSpec",
    "poch",
    "poch_ratio_sequence",
    "hyp",
    "hyp2f1",
    "digamma",
    "gamma",
    "exp_series",
    "verify_fourier_f1_f2",
    "verify_3f2_expansion",
    "verify_4f3_expansion",
    "verify_entry16",
    "verify_newton",
    "verify_gegenbauer_family",
    "verify_12_32",
    "verify_trig_expansion",
    "verify_elliptic_fourier",
    "verify_hypergeometric1",
    "verify_quadratic_transformation",
]


# ---------------------------------------------------------------------------
# Pochhammer symbols, gamma, digamma
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PochhammerSymbol:
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)``."""

    a: complex
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError("n must be a non-negative integer")

    @property
    def value(self) -> complex:
        return poch(self.a, self.n)


def poch(a: complex, n: int) -> complex:
    """``(a)_n`` by the defining product."""
    out = 1.0 + 0j
    for j in range(int(n)):
        out *= a + j
    return out if isinstance(a, complex) or out.imag else out.real


def poch_ratio_sequence(upper: Sequence[complex], lower: Sequence[complex], n: np.ndarray) -> np.ndarray:
    """``prod (a_i)_m / prod (b_j)_m`` for ``m`` in the contiguous range ``n``.

    Built by a running product from ``m = 0`` (cheap and accurate to a few
    ulps times ``sqrt(m)``); ``n`` must be a contiguous ascending range.
    """
    n = np.asarray(n)
    if n.size == 0:
        return np.zeros(0, complex)
    top = int(n[-1])
    m = np.arange(top)
    r = np.ones(top, dtype=complex)
    for a in upper:
        r *= a + m
    for b in lower:
        r /= b + m
    seq = np.concatenate([[1.0 + 0j], np.cumprod(r)])
    return seq[n]


def gamma(z: complex) -> complex:
    """Gamma function (complex capable)."""
    g = complex(_gamma(complex(z)))
    if not cmath.isfinite(g):
        raise ValueError(f"gamma pole at {z}")
    return g


_B2K = [1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510, 43867 / 798]


def digamma(z: complex) -> ApproxComplex:
    """``psi(z)``: upward recurrence to ``Re z >= 12``, then the asymptotic series.

    Reflection ``psi(1-z) - psi(z) = pi cot(pi z)`` is used for ``Re z < 1/2``.
    """
    z = complex(z)
    if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
        raise ValueError("digamma pole at a non-positive integer")
    if z.real < 0.5:
        r = digamma(1 - z)
        return ApproxComplex(r.value - math.pi / cmath.tan(math.pi * z), r.err + 4 * EPS * abs(r.value))
    acc = 0j
    while z.real < 12:
        acc -= 1 / z
        z += 1
    w = 1 / (z * z)
    s = 0j
    p = w
    for k, b in enumerate(_B2K, start=1):
        s += b / (2 * k) * p
        p *= w
    v = cmath.log(z) - 0.5 / z - s + acc
    count_evals(1)
    return ApproxComplex(v, 16 * EPS * max(1.0, abs(v)))


# ---------------------------------------------------------------------------
# Generalized hypergeometric series
# ---------------------------------------------------------------------------


def _is_nonpos_int(c: complex) -> bool:
    c = complex(c)
    return c.imag == 0 and c.real <= 0 and c.real == math.floor(c.real)


@dataclass(frozen=True)
class HypergeometricSpec:
    """``pFq(upper; lower; z)`` with ``|z| <= 1``."""

    upper: tuple
    lower: tuple
    z: complex

    def __post_init__(self):
        up = tuple(complex(a) for a in self.upper)
        lo = tuple(complex(b) for b in self.lower)
        z = complex(self.z)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "z", z)
        if any(_is_nonpos_int(b) for b in lo):
            raise ValueError("lower parameter is a non-positive integer")
        if self.terminating:
            return
        if abs(z) > 1 + 1e-15:
            raise ValueError("|z| must be <= 1")
        if abs(abs(z) - 1) <= 1e-15:
            if len(up) != len(lo) + 1:
                raise ValueError("series diverges on |z|=1 unless p = q+1")
            if (sum(lo) - sum(up)).real <= 0:
                raise ValueError("series diverges on |z|=1: need Re(sum lower - sum upper) > 0")

    @property
    def terminating(self) -> bool:
        return any(_is_nonpos_int(a) for a in self.upper)


def hyp(spec: HypergeometricSpec, tol: Tolerance = Tolerance(1e-16, 0.0), cap: int = 4_000_000) -> ApproxComplex:
    """Sum ``sum_n prod (a_i)_n / prod (b_j)_n z^n / n!`` directly.

    For ``|z| < 1`` the remainder after term ``t_N`` is bounded by
    ``|t_N| R/(1-R)`` with ``R = max(|t_{N+1}/t_N|, |z|)``; on ``|z| = 1``
    an integral-test bound ``|t_N| N / delta`` is used with
    ``delta = Re(sum lower - sum upper)``.
    """
    up, lo, z = spec.upper, spec.lower, spec.z
    if z == 0:
        return ApproxComplex(1.0)
    on_circle = abs(abs(z) - 1) <= 1e-15 and not spec.terminating
    delta = (sum(lo) - sum(up)).real if on_circle else 0.0
    total = 0j
    comp = 0j
    absum = 0.0
    t = 1.0 + 0j
    n0 = 0
    chunk = 256
    while n0 < cap:
        n = np.arange(n0, n0 + chunk, dtype=float)
        r = np.full(chunk, z, dtype=complex) / (n + 1)
        for a in up:
            r *= a + n
        for b in lo:
            r /= b + n
        terms = t * np.concatenate([[1.0], np.cumprod(r[:-1])])
        count_evals(chunk)
        # Neumaier across chunks
        s = complex(math.fsum(terms.real), math.fsum(terms.imag))
        y = total + s
        if abs(total) >= abs(s):
            comp += (total - y) + s
        else:
            comp += (s - y) + total
        total = y
        absum += float(np.abs(terms).sum())
        t = terms[-1] * r[-1]
        n0 += chunk
        if t == 0:
            return ApproxComplex(total + comp, 4 * EPS * absum)
        target = tol.target(abs(total + comp))
        if on_circle:
            tail = abs(t) * n0 / delta
        else:
            nn = float(n0)
            rn = complex(z) / (nn + 1)
            for a in up:
                rn *= a + nn
            for b in lo:
                rn /= b + nn
            R = max(abs(rn), abs(z))
            tail = abs(t) * R / (1 - R) if R < 1 else math.inf
        if tail <= target and abs(t) <= target:
            return ApproxComplex(total + comp, tail + 4 * EPS * absum)
        chunk = min(chunk * 2, 1 << 16)
    raise ConvergenceFailure("hypergeometric series did not converge within the cap", ApproxComplex(total + comp, abs(t) * cap))


def hyp2f1(a, b, c, z) -> ApproxComplex:
    """``2F1(a, b; c; z)`` for ``|z| <= 1``.

    At ``z = 1`` the series converges only like ``n^{a+b-c-1}``, so Gauss's
    summation ``G(c) G(c-a-b) / (G(c-a) G(c-b))`` is used instead.
    """
    spec = HypergeometricSpec((a, b), (c,), z)
    if spec.z == 1 and not spec.terminating:
        a, b, c = spec.upper[0], spec.upper[1], spec.lower[0]
        v = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
        return ApproxComplex(v, 16 * EPS * abs(v))
    return hyp(spec)


# ---------------------------------------------------------------------------
# Trigonometric series
# ---------------------------------------------------------------------------


def exp_series(coeff: Callable[[np.ndarray], np.ndarray], theta: float, *, n0: int = 0, tol: Tolerance = Tolerance(1e-13, 1e-16)) -> ApproxComplex:
    """``sum_{n >= n0} coeff(n) e^{i n theta}``.

    ``coeff`` is evaluated on contiguous ascending integer ranges.  For ``theta`` a multiple of ``2 pi`` the series must
    converge absolutely-like (smooth decaying coefficients) and is summed
    by extrapolation; otherwise by averaging with the ratio ``e^{i theta}``.
    """
    th = math.remainder(float(theta), 2 * math.pi)
    if abs(th) < 1e-12:
        return sum_blocks_richardson(coeff, 1, start=n0, tol=tol)
    return sum_oscillatory_power(coeff, cmath.exp(1j * th), n0=n0, tol=tol)


def _cos_series(coeff, omega: float, phase: float = 0.0, n0: int = 0, *, real_coeff: bool = True) -> ApproxComplex:
    """``sum c(n) cos(n omega + phase)``."""
    s = exp_series(coeff, omega, n0=n0)
    if real_coeff:
        return ApproxComplex((cmath.exp(1j * phase) * s.value).real, s.err)
    s2 = exp_series(coeff, -omega, n0=n0)
    v = 0.5 * (cmath.exp(1j * phase) * s.value + cmath.exp(-1j * phase) * s2.value)
    return ApproxComplex(v, s.err + s2.err)


def _sin_series(coeff, omega: float, phase: float = 0.0, n0: int = 0) -> ApproxComplex:
    """``sum c(n) sin(n omega + phase)`` for real coefficients."""
    s = exp_series(coeff, omega, n0=n0)
    return ApproxComplex((cmath.exp(1j * phase) * s.value).imag, s.err)


# ---------------------------------------------------------------------------
# Elementary expansions and their one-sided truncations
# ---------------------------------------------------------------------------


def _check_noninteger(a: float):
    if float(a) == math.floor(float(a)):
        raise ValueError("a must not be an integer")


def verify_fourier_f1_f2(a: float, x: float, which: str = "f1", tol: Tolerance = Tolerance(1e-10, 1e-13)) -> CheckResult:
    """``sum_{n>=1} [sin(n-a)x/(n-a) + sin(n+a)x/(n+a)] = pi - sin(ax)/a`` (``f1``, ``0<x<2pi``)
    or ``sum [cos(n+a)x/(n+a) - cos(n-a)x/(n-a)] = pi cot(pi a) - cos(ax)/a`` (``f2``, ``|x|<2pi``)."""
    _check_noninteger(a)
    a, x = float(a), float(x)
    ea, eb = cmath.exp(-1j * a * x), cmath.exp(1j * a * x)
    if which == "f1":
        if not 0 < x < 2 * math.pi:
            raise ValueError("f1 needs 0 < x < 2 pi")
        c = lambda n: ea / (n - a) + eb / (n + a)
        s = exp_series(c, x, n0=1)
        lhs = ApproxComplex(s.value.imag, s.err)
        rhs = math.pi - math.sin(a * x) / a
    elif which == "f2":
        if not abs(x) < 2 * math.pi:
            raise ValueError("f2 needs |x| < 2 pi")
        c = lambda n: eb / (n + a) - ea / (n - a)
        s = exp_series(c, x, n0=1)
        lhs = ApproxComplex(s.value.real, s.err)
        rhs = math.pi / math.tan(math.pi * a) - math.cos(a * x) / a
    else:
        raise ValueError("which must be f1 or f2")
    return make_check(lhs, rhs, tol, {"which": which, "a": a, "x": x})


def verify_3f2_expansion(a: float, x: float, tol: Tolerance = Tolerance(1e-10, 1e-13)) -> CheckResult:
    """One-sided sine series as ``4 a sin(x/2) 3F2(1/2, 1/2+a, 1/2-a; 3/2, 3/2; sin^2(x/2))``."""
    _check_noninteger(a)
    a, x = float(a), float(x)
    if not 0 < x < math.pi:
        raise ValueError("need 0 < x < pi")
    ea, eb = cmath.exp(-1j * a * x), cmath.exp(1j * a * x)
    s = exp_series(lambda n: ea / (n - a) - eb / (n + a), x, n0=1)
    lhs = ApproxComplex(s.value.imag, s.err)
    h = math.sin(x / 2)
    rhs = hyp(HypergeometricSpec((0.5, 0.5 + a, 0.5 - a), (1.5, 1.5), h * h)) * (4 * a * h)
    return make_check(lhs, rhs, tol, {"a": a, "x": x})


def verify_4f3_expansion(a: float, x: float, tol: Tolerance = Tolerance(1e-10, 1e-13)) -> CheckResult:
    """One-sided cosine series as a ``4F3`` plus logarithm and digamma terms."""
    _check_noninteger(a)
    a, x = float(a), float(x)
    if not 0 < x < math.pi:
        raise ValueError("need 0 < x < pi")
    ea, eb = cmath.exp(-1j * a * x), cmath.exp(1j * a * x)
    s = exp_series(lambda n: eb / (n + a) + ea / (n - a), x, n0=1)
    lhs = ApproxComplex(s.value.real, s.err)
    h = math.sin(x / 2)
    F = hyp(HypergeometricSpec((1, 1, 1 + a, 1 - a), (2, 2, 1.5), h * h))
    rhs = F * (2 * a * a * h * h) - 2 * math.log(2 * h) + digamma(1) * 2 - digamma(1 - a) - digamma(1 + a)
    return make_check(ApproxComplex(lhs.value, lhs.err), ApproxComplex(rhs.value.real, rhs.err), tol, {"a": a, "x": x})


def verify_entry16(x: float, tol: Tolerance = Tolerance(1e-10, 1e-13)) -> CheckResult:
    """``sum binom(2n,n) sin^{2n+1}x / (4^n (2n+1)^2) = x log|2 sin x| + (1/2) sum sin(2nx)/n^2``."""
    x = float(x)
    if not 0 < x < math.pi / 2:
        raise ValueError("need 0 < x < pi/2")
    sx = math.sin(x)
    lhs = hyp(HypergeometricSpec((0.5, 0.5, 0.5), (1.5, 1.5), sx * sx)) * sx
    cl = _sin_series(lambda n: 1.0 / (n.astype(float) ** 2), 2 * x, n0=1)
    rhs = cl * 0.5 + x * math.log(abs(2 * sx))
    return make_check(lhs, rhs, tol, {"x": x})


def verify_newton(which: str, a: float, x: float, tol: Tolerance = Tolerance(1e-10, 1e-15)) -> CheckResult:
    """Newton's formulas ``nf1`` / ``nf2`` / ``nf3`` (``2F1`` at ``sin^2 x``)."""
    a, x = float(a), float(x)
    z = math.sin(x) ** 2
    if which == "nf1":
        lhs = hyp2f1(0.5 + a, 0.5 - a, 0.5, z) * math.cos(x)
        rhs = math.cos(2 * a * x)
    elif which == "nf2":
        lhs = hyp2f1(0.5 + a, 0.5 - a, 1.5, z) * math.sin(x)
        rhs = math.sin(2 * a * x) / (2 * a) if a != 0 else x
    elif which == "nf3":
        lhs = hyp2f1(a, -a, 0.5, z)
        rhs = math.cos(2 * a * x)
    else:
        raise ValueError("which must be nf1, nf2 or nf3")
    return make_check(lhs, rhs, tol, {"which": which, "a": a, "x": x})


# ---------------------------------------------------------------------------
# Gegenbauer-type expansions
# ---------------------------------------------------------------------------


def _gegenbauer_coeff(a: complex, b: complex):
    """``T(n) = G(a+n/2) G(b+n/2) / (G(1-a+n/2) G(1-b+n/2))`` by the two-step recurrence."""
    t0 = gamma(a) * gamma(b) / (gamma(1 - a) * gamma(1 - b))
    t1 = gamma(a + 0.5) * gamma(b + 0.5) / (gamma(1.5 - a) * gamma(1.5 - b))

    def T(n):
        n = np.asarray(n)
        top = int(n[-1])
        out = np.empty(top + 1, dtype=complex)
        out[0], out[1 if top >= 1 else 0] = t0, (t1 if top >= 1 else t0)
        # T(m+2)/T(m) = (a+m/2)(b+m/2) / ((1-a+m/2)(1-b+m/2))
        for start, first in ((0, t0), (1, t1)):
            m = np.arange(start, top - 1, 2, dtype=float)
            if m.size:
                r = (a + m / 2) * (b + m / 2) / ((1 - a + m / 2) * (1 - b + m / 2))
                out[start + 2 :: 2][: m.size] = first * np.cumprod(r)
        return out[n]

    return T, t0


def verify_gegenbauer_family(a: float, b: float, x: float, tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    """``2F1(2a, 2b; a+b+1/2; cos^2 x)`` against the bilateral gamma-ratio cosine series.

    The summand is symmetric, ``T(-n) = T(n)``, so the right side is
    ``T(0) + 2 sum_{n>=1} T(n) cos 2nx``.
    """
    a, b, x = float(a), float(b), float(x)
    pref = 4 ** (1 - a - b) * math.sqrt(math.pi) * gamma(2 * a) * gamma(2 * b) / (gamma(1 - a - b) * gamma(a + b + 0.5))
    lhs = hyp2f1(2 * a, 2 * b, a + b + 0.5, math.cos(x) ** 2) * pref
    T, t0 = _gegenbauer_coeff(a, b)
    s = exp_series(T, 2 * x, n0=1)
    rhs = ApproxComplex(t0.real + 2 * s.value.real, 2 * s.err)
    return make_check(ApproxComplex(lhs.value.real, lhs.err), rhs, tol, {"a": a, "b": b, "x": x})


def verify_12_32(which: str, a: float, b: float, x: float, form: str = "corrected", tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    """The ``1/2`` and ``3/2`` cosine expansions.

    ``which='12'``: ``G(1-a)G(1-b)/(2G(1-a-b)) 2F1(a,b;1/2;cos^2 x) = 1/2 + sum_{n>=1} r_n cos 2nx``.
    ``which='32'``: ``2F1(a,b;3/2;cos^2 x) cos x`` series; ``form='printed'``
    keeps the factor ``1/2`` in front of the gamma ratio, ``'corrected'``
    drops it (see the project notes).
    """
    a, b, x = float(a), float(b), float(x)
    z = math.cos(x) ** 2
    if which == "12":
        lhs = hyp2f1(a, b, 0.5, z) * (gamma(1 - a) * gamma(1 - b) / (2 * gamma(1 - a - b)))
        c = lambda n: poch_ratio_sequence((a, b), (1 - a, 1 - b), n)
        s = exp_series(c, 2 * x, n0=1)
        rhs = ApproxComplex(0.5 + s.value.real, s.err)
    elif which == "32":
        g = gamma(2 - a) * gamma(2 - b) / gamma(2 - a - b)
        if form == "printed":
            g = g / 2
        elif form != "corrected":
            raise ValueError("form must be printed or corrected")
        lhs = hyp2f1(a, b, 1.5, z) * (g * math.cos(x))
        c = lambda n: poch_ratio_sequence((a, b), (2 - a, 2 - b), n)
        rhs = _cos_series(c, 2 * x, x, n0=0)
    else:
        raise ValueError("which must be '12' or '32'")
    return make_check(ApproxComplex(lhs.value.real, lhs.err), rhs, tol, {"which": which, "a": a, "b": b, "x": x, "form": form})


def verify_trig_expansion(a: float, c: float, x: float, tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    """``2F1(a, 1-a; c; sin^2 x) (2 sin x)^{2c-2}`` as a sine series (``0 < x < pi/2``)."""
    a, c, x = float(a), float(c), float(x)
    if not 0 < x < math.pi / 2:
        raise ValueError("need 0 < x < pi/2")
    pref = math.sqrt(math.pi) * gamma(0.5 + a) / (2 * gamma(1 + a - c) * gamma(c))
    lhs = hyp2f1(a, 1 - a, c, math.sin(x) ** 2) * (pref * (2 * math.sin(x)) ** (2 * c - 2))
    coef = lambda k: poch_ratio_sequence((1 + a - c, 1.5 - c), (1.0, 0.5 + a), k)
    rhs = _sin_series(coef, 4 * x, 2 * (1 + a - c) * x, n0=0)
    return make_check(ApproxComplex(lhs.value.real, lhs.err), rhs, tol, {"a": a, "c": c, "x": x})


def verify_elliptic_fourier(x: float, tol: Tolerance = Tolerance(1e-5, 1e-12)) -> CheckResult:
    """``K(sin x) = pi sum ((1/2)_n / n!)^2 sin(4n+1)x`` against the AGM value of ``K``."""
    x = float(x)
    if not 0 < x < math.pi / 2:
        raise ValueError("need 0 < x < pi/2")
    lhs = elliptic_K(math.sin(x))
    coef = lambda n: poch_ratio_sequence((0.5, 0.5), (1.0, 1.0), n)
    rhs = _sin_series(coef, 4 * x, x, n0=0) * math.pi
    return make_check(lhs, rhs, tol, {"x": x})


def verify_hypergeometric1(a: complex, b: complex, x: float, tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    """Three-term expansion of ``3F2(1, a, b; (a+b)/2, (1+a+b)/2; sin^2 x) cos x``.

    Requires ``Re(a+b) <= 1`` (equality allowed: the first term then
    vanishes), ``b`` not a positive integer and ``0 < x < pi/2``.
    """
    a, b, x = complex(a), complex(b), float(x)
    if (a + b).real > 1 + 1e-15:
        raise ValueError("need Re(a+b) <= 1")
    if b.imag == 0 and b.real >= 1 and b.real == math.floor(b.real):
        raise ValueError("b must not be a positive integer")
    if not 0 < x < math.pi / 2:
        raise ValueError("need 0 < x < pi/2")
    sx = math.sin(x)
    lhs = hyp(HypergeometricSpec((1, a, b), ((a + b) / 2, (1 + a + b) / 2), sx * sx)) * math.cos(x)
    s = a + b
    if abs(s - 1) < 1e-15:
        first = ApproxComplex(0.0)
    else:
        coef = lambda n: poch_ratio_sequence((a,), (2 - b,), n)
        real = a.imag == 0 and b.imag == 0
        first = _cos_series(coef, 2 * x, x, n0=0, real_coeff=real) * ((s - 1) / (b - 1))
    second = gamma(s) * gamma(1 - b) / (gamma(a) * (2 * sx) ** (s - 1)) * cmath.sin(math.pi / 2 * s + x * (b - a))
    rhs = first + second
    params = {"a": [a.real, a.imag] if a.imag else a.real, "b": [b.real, b.imag] if b.imag else b.real, "x": x}
    return make_check(lhs, rhs, tol, params)


def verify_quadratic_transformation(a: float, b: float, x: float, form: str = "corrected", tol: Tolerance = Tolerance(1e-10, 1e-14)) -> CheckResult:
    """``2F1(2a, 2b; a+b+1/2; sin^2 x)`` versus a ``2F1`` of ``sin^2 2x`` (``|x| < pi/4``).

    ``form='printed'`` uses parameters ``(a-b+1/2, b-a+1/2)`` on the right;
    ``'corrected'`` uses Gauss's ``(a, b)``.
    """
    a, b, x = float(a), float(b), float(x)
    if not abs(x) < math.pi / 4:
        raise ValueError("need |x| < pi/4")
    lhs = hyp2f1(2 * a, 2 * b, a + b + 0.5, math.sin(x) ** 2)
    z2 = math.sin(2 * x) ** 2
    if form == "printed":
        rhs = hyp2f1(a - b + 0.5, b - a + 0.5, a + b + 0.5, z2)
    elif form == "corrected":
        rhs = hyp2f1(a, b, a + b + 0.5, z2)
    else:
        raise ValueError("form must be printed or corrected")
    return make_check(lhs, rhs, tol, {"a": a, "b": b, "x": x, "form": form})
