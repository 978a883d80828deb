"""Dilogarithms, character-twisted infinite products, and Gudermannian pairs.

* :func:`dilog`, :func:`clausen2`, :func:`ti2` -- the dilogarithm family.
* :func:`character_product` -- products ``prod f(n)^{n chi(n)}`` summed in
  logarithmic form over whole character periods and extrapolated.
* The finite partial-fraction lemma and its ``m -> infinity`` limit.
* Integral pairs tied by transcendental constraints such as
  ``cosh a cos b = 1`` and their one-parameter (``theta``) extensions.
* Generalized trigonometric and hyperbolic functions ``sin_p``,
  ``cos_p``, ``sinh_p``, ``cosh_p`` and the generalized Gudermannian
  ``gd_p`` with its inverse.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .charsum import PeriodicOddSequence, character
from .hyperfourier import exp_series
from .numkernel import (
    counted_cache,
    DEFAULT_BUDGET,
    EPS,
    ApproxComplex,
    CheckResult,
    IntegrationBudget,
    Tolerance,
    combine_checks,
    count_evals,
    integrate_interval,
    integrate_panels,
    make_check,
    neumaier_sum,
    sum_blocks_richardson,
)

__all__ = [
    "CharacterProductSpec",
    "ConstraintPair",
    "GeneralizedTrigParams",
    "dilog",
    "clausen2",
    "ti2",
    "verify_ti2_expansion",
    "solve_constraint",
    "product_spec",
    "log_character_product",
    "character_product",
    "product_closed_form",
    "verify_product_identity",
    "verify_symmetric_constraint",
    "verify_barnes_ratio",
    "lemma_sides",
    "verify_lemma_finite",
    "lemma_limit_errors",
    "verify_lemma_limit",
    "verify_partial_fraction",
    "verify_theta_pairs",
    "verify_sech_partial_fraction",
    "pi_p",
    "sin_p",
    "cos_p",
    "sinh_p",
    "cosh_p",
    "gd_p",
    "gd_p_inverse",
    "verify_gtf",
]

SQRT3 = math.sqrt(3.0)


# ---------------------------------------------------------------------------
# Dilogarithm family
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli(nmax: int = 60) -> tuple:
    """``B_0 .. B_nmax`` (``B_1 = -1/2``), exact via the Akiyama--Tanigawa recurrence."""
    out = []
    a = [Fraction(0)] * (nmax + 1)
    for m in range(nmax + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    out[1] = -out[1]  # the recurrence yields B_1 = +1/2
    return tuple(float(b) for b in out)


def _li2_series(z: complex) -> complex:
    """``sum z^n / n^2`` for ``|z| <= 1/2``."""
    s, p, n = 0j, z, 1
    while True:
        t = p / (n * n)
        s += t
        if abs(t) <= 1e-17 * max(abs(s), 1e-300):
            return s
        n += 1
        p *= z


def _li2_bernoulli(z: complex) -> complex:
    """``sum B_n u^{n+1} / (n+1)!`` with ``u = -log(1-z)``; needs ``|u| < 2 pi``."""
    u = -cmath.log(1 - z)
    B = _bernoulli()
    s = u - u * u / 4
    u2 = u * u
    p = u  # u^{2k+1} / (2k+1)!
    for k in range(1, len(B) // 2):
        p = p * u2 / ((2 * k) * (2 * k + 1))
        t = B[2 * k] * p
        s += t
        if abs(t) <= 1e-17 * abs(s):
            break
    return s


def dilog(z: complex) -> ApproxComplex:
    """``Li_2(z)`` (principal branch, cut along ``[1, inf)``).

    Power series for ``|z| <= 1/2``, the reflection formula
    ``Li2(z) = pi^2/6 - log z log(1-z) - Li2(1-z)`` for ``|1-z| <= 1/2``,
    and the Bernoulli series in ``-log(1-z)`` elsewhere on the unit disc.
    Outside the disc the inversion
    ``Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)`` applies; on the cut the
    value is the limit from below (``Im Li2(x) = -pi log x`` for ``x > 1``).
    """
    z = complex(z)
    if abs(z) > 1 + 1e-15:
        inner = dilog(1 / z)
        # on the cut take log(-z) = log z + i pi explicitly (signed zeros
        # would otherwise pick the side at random)
        lg = complex(math.log(z.real), math.pi) if z.imag == 0 and z.real > 0 else cmath.log(-z)
        v = -math.pi**2 / 6 - lg * lg / 2 - inner.value
        return ApproxComplex(v, inner.err + 8 * EPS * max(abs(v), 1.0))
    count_evals(1)
    if z == 1:
        v = math.pi**2 / 6
    elif abs(z) <= 0.5:
        v = _li2_series(z)
    elif abs(1 - z) <= 0.5:
        v = math.pi**2 / 6 - cmath.log(z) * cmath.log(1 - z) - _li2_series(1 - z)
    else:
        v = _li2_bernoulli(z)
    v = complex(v)
    return ApproxComplex(v, 8 * EPS * max(abs(v), 1.0))


def clausen2(theta: float) -> ApproxComplex:
    """``Cl_2(theta) = sum sin(n theta)/n^2 = Im Li_2(e^{i theta})``."""
    th = math.remainder(float(theta), 2 * math.pi)
    if th == 0.0:
        return ApproxComplex(0.0)
    d = dilog(cmath.exp(1j * th))
    return ApproxComplex(d.value.imag, d.err)


def ti2(z: float) -> ApproxComplex:
    """Inverse tangent integral ``Ti_2(z) = int_0^z arctan(t)/t dt`` (real ``z``)."""
    z = float(z)
    if z == 0.0:
        return ApproxComplex(0.0)
    if abs(z) <= 1:
        d = dilog(1j * z)
        return ApproxComplex(d.value.imag, d.err)
    inner = ti2(1 / z)
    return inner + math.copysign(math.pi / 2, z) * math.log(abs(z))


def verify_ti2_expansion(x: float, form: str = "corrected", tol: Tolerance = Tolerance(1e-10, 1e-14)) -> CheckResult:
    """``Ti_2(tan x) = x log|tan x| + c sum sin((4n+2)x)/(2n+1)^2`` for ``0 < |x| < pi/4``.

    ``form='corrected'`` uses ``c = 1``; ``form='printed'`` uses ``c = 1/2``
    (see the project notes).
    """
    x = float(x)
    if not 0 < abs(x) < math.pi / 4:
        raise ValueError("need 0 < |x| < pi/4")
    c = {"corrected": 1.0, "printed": 0.5}.get(form)
    if c is None:
        raise ValueError("form must be corrected or printed")
    lhs = ti2(math.tan(x))
    s = exp_series(lambda n: 1.0 / (2 * np.asarray(n, float) + 1) ** 2, 4 * x, n0=0)
    series = (cmath.exp(2j * x) * s.value).imag
    rhs = ApproxComplex(x * math.log(abs(math.tan(x))) + c * series, c * s.err)
    return make_check(lhs, rhs, tol, {"x": x, "form": form})


# ---------------------------------------------------------------------------
# Constraints
# ---------------------------------------------------------------------------

_CONSTRAINTS = {
    # kind: (residual(alpha, beta, extra), beta interval given extra)
    "inf_product": (lambda a, b, e: math.tanh(math.pi * a / 4) - math.tan(math.pi * b / 4), lambda e: (0.0, 1.0)),
    "P1": (lambda a, b, e: math.tanh(math.pi * a / 3) * math.tan(math.pi * b / 3) - SQRT3, lambda e: (1.0, 1.5)),
    "P2i": (lambda a, b, e: math.tanh(math.pi * a / 3) - SQRT3 * math.tan(math.pi * b / 3), lambda e: (0.0, 0.5)),
    "P2ii": (lambda a, b, e: math.tan(math.pi * b / 3) - SQRT3 * math.tanh(math.pi * a / 3), lambda e: (0.0, 1.0)),
    "P3": (lambda a, b, e: math.tanh(math.pi * a / 6) * math.tan(math.pi * b / 6) - 1 / SQRT3, lambda e: (1.0, 3.0)),
    "lemma": (lambda a, b, e: math.cosh(a) * math.cos(b) - 1, lambda e: (0.0, math.pi / 2)),
    "theta_i": (lambda a, b, e: math.tanh(a) - math.tan(b) / math.tan(e / 2), lambda e: (0.0, e / 2)),
    "theta_ii": (lambda a, b, e: math.tanh(a) * math.tan(b) - 1 / math.tan(e / 2), lambda e: ((math.pi - e) / 2, math.pi / 2)),
}


@dataclass(frozen=True)
class ConstraintPair:
    """``(alpha, beta)`` satisfying the constraint named by ``kind``."""

    alpha: float
    beta: float
    kind: str
    extra: float | None = None
    residual: float = 0.0

    def __post_init__(self):
        if self.kind not in _CONSTRAINTS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        lo, hi = _CONSTRAINTS[self.kind][1](self.extra)
        if not (self.alpha > 0 and lo < self.beta < hi):
            raise ValueError(f"beta={self.beta} outside ({lo}, {hi}) or alpha <= 0 for {self.kind}")
        r = _CONSTRAINTS[self.kind][0](self.alpha, self.beta, self.extra)
        object.__setattr__(self, "residual", abs(r))
        if abs(r) > 1e-12:
            raise ValueError(f"constraint {self.kind} violated: residual {r:.2e}")


def solve_constraint(kind: str, *, alpha: float | None = None, beta: float | None = None, extra: float | None = None) -> ConstraintPair:
    """Solve the named constraint for the missing one of ``alpha`` / ``beta``.

    Each residual is monotone in either variable on the admissible range,
    so a bracketing solver (Brent) is used: ``beta`` on its open interval,
    ``alpha`` on ``(0, A]`` with ``A`` doubled until the sign changes.
    """
    if kind not in _CONSTRAINTS:
        raise ValueError(f"unknown constraint kind {kind!r}")
    if (alpha is None) == (beta is None):
        raise ValueError("give exactly one of alpha, beta")
    res, interval = _CONSTRAINTS[kind]
    if kind.startswith("theta") and not (extra is not None and 0 < extra < math.pi):
        raise ValueError("theta must lie in (0, pi)")
    lo, hi = interval(extra)
    if beta is None:
        f = lambda b: res(alpha, b, extra)
        w = 1e-15 * max(1.0, hi)
        a0, b0 = lo + w, hi - w
        if f(a0) * f(b0) > 0:
            raise ValueError(f"{kind}: no root in beta interval for alpha={alpha}")
        beta = brentq(f, a0, b0, xtol=1e-15, rtol=4 * EPS, maxiter=200)
    else:
        if not lo < beta < hi:
            raise ValueError(f"beta={beta} outside ({lo}, {hi}) for {kind}")
        f = lambda a: res(a, beta, extra)
        A = 1.0
        while f(1e-300) * f(A) > 0:
            A *= 2
            if A > 1e3:
                raise ValueError(f"{kind}: could not bracket alpha for beta={beta}")
        alpha = brentq(f, 1e-300, A, xtol=1e-15, rtol=4 * EPS, maxiter=200)
    return ConstraintPair(float(alpha), float(beta), kind, extra)


# ---------------------------------------------------------------------------
# Character products
# ---------------------------------------------------------------------------

_SHAPES = {
    # shape: (character label, beta range, closed form coefficient of pi*alpha*beta)
    "inf_product": ("chi4", (0.0, 1.0), 0.5),
    "chi_product": (None, (0.0, 1.0), None),
    "P1": ("chi3", (1.0, 1.5), -2 / 3),
    "P2i": ("chi3", (0.0, 0.5), 4 / 3),
    "P2ii": ("chi3", (0.0, 1.0), -4 / 3),
    "P3": ("chi6", (1.0, 3.0), -1 / 3),
}


@dataclass(frozen=True)
class CharacterProductSpec:
    """``prod_n f_shape(n; alpha, beta)^{n chi(n)}``."""

    chi: PeriodicOddSequence
    alpha: float
    beta: float
    shape: str

    def __post_init__(self):
        if self.shape not in _SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        label, (lo, hi), _ = _SHAPES[self.shape]
        if not lo < self.beta < hi:
            raise ValueError(f"beta={self.beta} outside ({lo}, {hi}) for {self.shape}")
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")
        if label is not None and tuple(self.chi.values) != tuple(character(label).values):
            raise ValueError(f"shape {self.shape} needs character {label}")
        if self.shape == "P3" and self.chi(3) != 0:
            raise ValueError("the n=3 factor must be excluded")


def _log_factor(shape: str, n: np.ndarray, a: float, b: float) -> np.ndarray:
    """``log f(n)`` with every factor written as ``n^2 + c``.

    Numerator and denominator carry equally many factors, so the ``n^2``
    powers cancel and ``log f = sum +-log1p(c/n^2)`` without cancellation.
    """
    a2, b2 = a * a, b * b
    num, den = {
        "inf_product": ([a2], [-b2]),
        "chi_product": ([-b2], [0.0]),
        "P1": ([a2, -b2], [0.0, -9 / 4]),
        "P2i": ([0.0, a2, a2], [-b2, -b2, -4 * b2]),
        "P2ii": ([0.0, -b2, -b2], [a2, a2, 4 * a2]),
        "P3": ([a2, -b2], [0.0, -9.0]),
    }[shape]
    n2 = n * n
    sign = np.ones_like(n2)
    out = np.zeros_like(n2)
    for cs, sgn in ((num, 1.0), (den, -1.0)):
        for c in cs:
            r = c / n2
            sign *= np.sign(1 + r)
            out += sgn * np.log1p(np.where(r > -1, r, -2 - r))
    if np.any(sign <= 0):
        raise ValueError(f"non-positive factor in {shape} product")
    return out


def log_character_product(spec: CharacterProductSpec, tol: Tolerance = Tolerance(1e-13, 1e-16)) -> ApproxComplex:
    """``sum_n n chi(n) log f(n)`` grouped by whole periods and extrapolated in ``1/N``."""
    chi, a, b, shape = spec.chi, float(spec.alpha), float(spec.beta), spec.shape

    def term(n):
        n = np.asarray(n)
        c = chi(n)
        out = np.zeros(n.size)
        m = c != 0
        nm = n[m].astype(float)
        out[m] = nm * c[m] * _log_factor(shape, nm, a, b)
        return out

    return sum_blocks_richardson(term, chi.k, start=1, tol=tol)


def character_product(spec: CharacterProductSpec) -> ApproxComplex:
    """The infinite product itself, ``exp`` of :func:`log_character_product`."""
    return log_character_product(spec).exp()


def product_closed_form(spec: CharacterProductSpec, budget: IntegrationBudget = DEFAULT_BUDGET) -> ApproxComplex:
    """Logarithm of the right-hand side for ``spec.shape``.

    For ``chi_product`` this is ``-(pi/k) sum_j chi(j) int_0^beta x cot(pi(x+j)/k) dx``
    by quadrature; otherwise ``c pi alpha beta`` with the shape's constant.
    """
    if spec.shape == "chi_product":
        k, b = spec.chi.k, float(spec.beta)
        total = ApproxComplex(0.0)
        for j in range(1, k):
            cj = float(spec.chi(j))
            if cj == 0:
                continue
            if any(abs((x + j) / k - round((x + j) / k)) < 1e-12 for x in np.linspace(0, b, 64)) or j + b >= k:
                raise ValueError("cotangent pole inside the integration range")
            f = lambda x, j=j: x / np.tan(math.pi * (x + j) / k)
            total = total + integrate_interval(f, 0.0, b, budget) * cj
        return total * (-math.pi / k)
    c = _SHAPES[spec.shape][2]
    return ApproxComplex(c * math.pi * spec.alpha * spec.beta)


def product_spec(shape: str, beta: float, chi: PeriodicOddSequence | None = None) -> CharacterProductSpec:
    """Build a spec with ``alpha`` solved from the shape's constraint (``alpha = 0`` for ``chi_product``)."""
    label = _SHAPES[shape][0] if shape in _SHAPES else None
    if shape == "chi_product":
        if chi is None:
            raise ValueError("chi_product needs a character")
        return CharacterProductSpec(chi, 0.0, float(beta), shape)
    pair = solve_constraint(shape, beta=float(beta))
    return CharacterProductSpec(chi if chi is not None else character(label), pair.alpha, pair.beta, shape)


def verify_product_identity(spec: CharacterProductSpec, tol: Tolerance = Tolerance(1e-6, 1e-12)) -> CheckResult:
    """Product (block-extrapolated) against the exponential closed form."""
    if spec.shape != "chi_product":
        # re-validate the constraint the closed form relies on
        ConstraintPair(spec.alpha, spec.beta, spec.shape)
    lhs = character_product(spec)
    rhs = product_closed_form(spec).exp()
    return make_check(lhs, rhs, tol, {"shape": spec.shape, "alpha": spec.alpha, "beta": spec.beta, "k": spec.chi.k})


def verify_symmetric_constraint(beta: float, tol: Tolerance = Tolerance(1e-15, 1e-12)) -> CheckResult:
    """``tanh(pi a/4) = tan(pi b/4)`` is equivalent to ``cosh(pi a/2) cos(pi b/2) = 1``."""
    pair = solve_constraint("inf_product", beta=float(beta))
    lhs = math.cosh(math.pi * pair.alpha / 2) * math.cos(math.pi * pair.beta / 2)
    return make_check(lhs, 1.0, tol, {"alpha": pair.alpha, "beta": pair.beta})


def verify_barnes_ratio(z: float, tol: Tolerance = Tolerance(1e-10, 1e-14), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """``log G(1+z)/G(1-z) = z log 2 pi - int_0^z pi x cot(pi x) dx`` for ``|z| < 1``.

    The left side comes from the Weierstrass product of ``G``:
    ``z log 2 pi - z + sum_n [n log((n+z)/(n-z)) - 2z]``, an ``n``-weighted
    product of the same type as the character products, summed with the
    same block extrapolation.
    """
    z = float(z)
    if not 0 < abs(z) < 1:
        raise ValueError("need 0 < |z| < 1")
    s = sum_blocks_richardson(lambda n: 2 * n * np.arctanh(z / np.asarray(n, float)) - 2 * z, 1, start=1)
    lhs = s + (z * math.log(2 * math.pi) - z)

    def f(x):
        x = np.asarray(x, float)
        px = math.pi * x
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(px == 0, 1.0, px / np.tan(px))

    rhs = z * math.log(2 * math.pi) - integrate_interval(f, 0.0, z, budget)
    return make_check(lhs, rhs, tol, {"z": z})


# ---------------------------------------------------------------------------
# The finite lemma and partial fractions
# ---------------------------------------------------------------------------


def lemma_sides(m: int, alpha: float, beta: float, budget: IntegrationBudget = DEFAULT_BUDGET) -> tuple[ApproxComplex, ApproxComplex]:
    """Both sides of the finite lemma (quadrature, closed form)."""
    m = int(m)
    if m < 0 or not alpha > 0 or not 0 < beta < math.pi / 2:
        raise ValueError("need m >= 0, alpha > 0, 0 < beta < pi/2")
    M = 2 * m + 1
    I1 = integrate_interval(lambda x: np.sinh(x / M) / np.cosh(x), 0.0, alpha, budget)
    I2 = integrate_interval(lambda y: np.sin(y / M) / np.cos(y), 0.0, beta, budget)
    terms = [(-1) ** m * math.log(math.cosh(alpha / M) / math.cos(beta / M))]
    sa, sb = math.sinh(alpha / M) ** 2, math.sin(beta / M) ** 2
    for k in range(m):
        s = math.sin(math.pi * (2 * k + 1) / (2 * M))
        terms.append((-1) ** k * s * math.log((s * s + sa) / (s * s - sb)))
    v, e = neumaier_sum(terms)
    return I1 + I2, ApproxComplex(v, e + 4 * EPS * sum(abs(t) for t in terms))


def verify_lemma_finite(m: int, alpha: float, beta: float, tol: Tolerance = Tolerance(1e-12, 1e-15)) -> CheckResult:
    lhs, rhs = lemma_sides(m, alpha, beta)
    return make_check(lhs, rhs, tol, {"m": int(m), "alpha": float(alpha), "beta": float(beta)})


def lemma_limit_errors(alpha: float, ms=(10, 20, 40)) -> list[float]:
    """``(2m+1) * lemma - alpha beta`` under ``cosh alpha cos beta = 1``, for each ``m``."""
    beta = solve_constraint("lemma", alpha=float(alpha)).beta
    out = []
    for m in ms:
        _, rhs = lemma_sides(m, alpha, beta)
        out.append((2 * m + 1) * rhs.real - alpha * beta)
    return out


def verify_lemma_limit(alpha: float = 1.0, ms=(10, 20, 40), tol: Tolerance = Tolerance(1e-6, 1e-12)) -> CheckResult:
    """The scaled lemma approaches ``alpha beta`` with strictly decreasing error."""
    pair = solve_constraint("lemma", alpha=float(alpha))
    errs = lemma_limit_errors(alpha, ms)
    mono = all(abs(errs[i + 1]) < abs(errs[i]) for i in range(len(errs) - 1))
    M = 2 * ms[-1] + 1
    lhs, rhs = lemma_sides(ms[-1], pair.alpha, pair.beta)
    finite = make_check(lhs, rhs, Tolerance(1e-12, 1e-15))
    scaled = make_check(rhs * M, pair.alpha * pair.beta, tol)
    note = "errors " + ", ".join(f"m={m}:{e:.3e}" for m, e in zip(ms, errs))
    if not mono:
        note += "; not strictly decreasing"
    return CheckResult(scaled.lhs, scaled.rhs, scaled.abs_err, scaled.rel_err, scaled.passed and mono and finite.passed,
                       {"alpha": pair.alpha, "beta": pair.beta, "ms": list(ms)}, scaled.evals, note=note)


def verify_partial_fraction(m: int, x: float, kind: str = "cosh", form: str = "corrected", tol: Tolerance = Tolerance(1e-12, 1e-15)) -> CheckResult:
    """Finite partial fractions of ``(2m+1)/cosh((2m+1)x)`` (``kind='cosh'``)
    or its companion ``(2m+1)/cos((2m+1)y)`` (``kind='cos'``).

    For the companion, ``form='printed'`` uses ``cos^2(pi k/M) - cos^2 y`` in
    the denominators and ``'corrected'`` uses ``cos^2(pi k/M) - sin^2 y``.
    """
    m, x = int(m), float(x)
    M = 2 * m + 1
    k = np.arange(-m, m + 1)
    ck = np.cos(math.pi * k / M)
    sgn = (-1.0) ** (m - k)
    if kind == "cosh":
        lhs = M / math.cosh(M * x)
        terms = sgn * ck * math.cosh(x) / (math.sinh(x) ** 2 + ck**2)
    elif kind == "cos":
        if not abs(x) < math.pi / (2 * M):
            raise ValueError("need |y| < pi/(2(2m+1))")
        lhs = M / math.cos(M * x)
        other = {"corrected": math.sin(x) ** 2, "printed": math.cos(x) ** 2}.get(form)
        if other is None:
            raise ValueError("form must be corrected or printed")
        terms = sgn * ck * math.cos(x) / (ck**2 - other)
    else:
        raise ValueError("kind must be cosh or cos")
    v, e = neumaier_sum(terms)
    rhs = ApproxComplex(v, e + 8 * EPS * float(np.abs(terms).sum()))
    return make_check(lhs, rhs, tol, {"m": m, "x": x, "kind": kind, "form": form})


# ---------------------------------------------------------------------------
# theta-parameter pairs
# ---------------------------------------------------------------------------


def verify_theta_pairs(theta: float, alpha: float, branch: str = "i", tol: Tolerance = Tolerance(1e-10, 1e-13), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """``int_0^alpha x dx/(cosh 2x + cos theta)`` plus the trigonometric partner equals ``+-alpha beta / sin theta``."""
    theta, alpha = float(theta), float(alpha)
    if branch not in ("i", "ii"):
        raise ValueError("branch must be 'i' or 'ii'")
    pair = solve_constraint("theta_" + branch, alpha=alpha, extra=theta)
    beta = pair.beta
    ct = math.cos(theta)
    I1 = integrate_interval(lambda x: x / (np.cosh(2 * x) + ct), 0.0, alpha, budget)
    if branch == "i":
        I2 = integrate_interval(lambda y: y / (np.cos(2 * y) - ct), 0.0, beta, budget)
        rhs = alpha * beta / math.sin(theta)
    else:
        I2 = integrate_interval(lambda y: y / (np.cos(2 * y) + ct), beta, math.pi / 2, budget)
        rhs = -alpha * beta / math.sin(theta)
    return make_check(I1 + I2, rhs, tol, {"theta": theta, "alpha": alpha, "beta": beta, "branch": branch})


def verify_sech_partial_fraction(x: float, theta: float, tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    """``1/(cosh pi x + cos pi theta)`` against its partial-fraction series."""
    x, theta = float(x), float(theta)
    st = math.sin(math.pi * theta)
    if abs(st) < 1e-12:
        raise ValueError("theta must not be an integer")
    lhs = 1 / (math.cosh(math.pi * x) + math.cos(math.pi * theta))

    def term(n):
        a = 2 * np.asarray(n, float) + 1 - theta
        b = a + 2 * theta
        return a / (x * x + a * a) - b / (x * x + b * b)

    s = sum_blocks_richardson(term, 1, start=0, tol=Tolerance(1e-13, 1e-16))
    rhs = s * (2 / (math.pi * st))
    return make_check(lhs, ApproxComplex(rhs.real, rhs.err), tol, {"x": x, "theta": theta})


# ---------------------------------------------------------------------------
# Generalized trigonometric / hyperbolic functions
# ---------------------------------------------------------------------------

_TIGHT = IntegrationBudget(target_tol=Tolerance(1e-14, 1e-16))


@dataclass(frozen=True)
class GeneralizedTrigParams:
    """Exponent ``p > 1`` and the derived half-period constant ``pi_p``."""

    p: float

    def __post_init__(self):
        if not self.p > 1:
            raise ValueError("p must exceed 1")

    @property
    def pi_p(self) -> float:
        return pi_p(self.p)


def _cumulative(f, points: np.ndarray, start: float = 0.0) -> np.ndarray:
    """``int_start^{x} f`` at every ``x`` in ``points`` (all ``>= start``) in one adaptive pass."""
    pts = np.asarray(points, float)
    order = np.argsort(pts)
    edges = np.concatenate([[start], pts[order]])
    vals, _ = integrate_panels(f, edges, _TIGHT)
    cum = np.cumsum(vals.real)
    out = np.empty_like(pts)
    out[order] = cum
    return out


def _trig_pieces(p: float):
    """Quadrature pieces for ``F(s) = int_0^s (1-t^p)^{-1/p} dt``.

    Below ``t* = 2^{-1/p}`` the integrand is smooth.  Above it the
    substitution ``t^p + u^p = 1``, ``w = u^{p-1}`` gives
    ``int (1 - w^{p/(p-1)})^{1/p - 1} dw / (p-1)``, regular at ``w = 0``
    (``t = 1``).
    """
    ts = 2 ** (-1 / p)
    ws = ts ** (p - 1)
    f_t = lambda t: (1 - t**p) ** (-1 / p)
    g_w = lambda w: (1 - w ** (p / (p - 1))) ** (1 / p - 1) / (p - 1)
    return ts, ws, f_t, g_w


@counted_cache(maxsize=64)
def pi_p(p: float) -> float:
    """``pi_p = 2 int_0^1 (1-t^p)^{-1/p} dt`` by quadrature."""
    ts, ws, f_t, g_w = _trig_pieces(float(p))
    a = integrate_interval(f_t, 0.0, ts, _TIGHT)
    b = integrate_interval(g_w, 0.0, ws, _TIGHT)
    return 2 * (a.real + b.real)


def _F_trig(p: float, s: np.ndarray) -> np.ndarray:
    """``F(s) = int_0^s (1-t^p)^{-1/p} dt`` for ``s`` in ``[0, 1]``."""
    s = np.atleast_1d(np.asarray(s, float))
    ts, ws, f_t, g_w = _trig_pieces(p)
    out = np.empty_like(s)
    lo = s <= ts
    if lo.any():
        out[lo] = _cumulative(f_t, s[lo])
    if (~lo).any():
        u = (1 - s[~lo] ** p) ** (1 / p)
        out[~lo] = pi_p(p) / 2 - _cumulative(g_w, u ** (p - 1))
    return out


def _H_hyp(p: float, s: np.ndarray) -> np.ndarray:
    """``H(s) = int_0^s (1+t^p)^{-1/p} dt`` for ``s >= 0``."""
    return _cumulative(lambda t: (1 + t**p) ** (-1 / p), np.atleast_1d(np.asarray(s, float)))


def _sin_cos_p(p: float, x: float) -> tuple[float, float]:
    p, x = float(p), float(x)
    half = pi_p(p) / 2
    if not -1e-15 <= x <= half + 1e-15:
        raise ValueError(f"x must lie in [0, pi_p/2] = [0, {half}]")
    x = min(max(x, 0.0), half)
    ts, ws, f_t, g_w = _trig_pieces(p)
    F_ts = float(_F_trig(p, [ts])[0])
    if x <= F_ts:
        s = 0.0 if x == 0 else brentq(lambda s: _F_trig(p, [s])[0] - x, 0.0, ts, xtol=1e-16, rtol=4 * EPS)
        return s, (1 - s**p) ** (1 / p)
    target = half - x
    w = 0.0 if target <= 0 else brentq(lambda w: _cumulative(g_w, [w])[0] - target, 0.0, ws, xtol=1e-16, rtol=4 * EPS)
    u = w ** (1 / (p - 1))
    return (1 - u**p) ** (1 / p), u


def sin_p(p: float, x: float) -> ApproxComplex:
    """``sin_p x`` on ``[0, pi_p/2]``: inverse of ``int_0^s (1-t^p)^{-1/p} dt``."""
    return ApproxComplex(_sin_cos_p(p, x)[0], 1e-14)


def cos_p(p: float, x: float) -> ApproxComplex:
    """``cos_p x = (1 - sin_p^p x)^{1/p}``, computed directly near ``pi_p/2``."""
    return ApproxComplex(_sin_cos_p(p, x)[1], 1e-14)


def _sinh_p_value(p: float, x: float) -> float:
    p, x = float(p), float(x)
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return 0.0
    S = max(2 * x, 1.0)
    while _H_hyp(p, [S])[0] < x:
        S *= 4
    return brentq(lambda s: _H_hyp(p, [s])[0] - x, 0.0, S, xtol=1e-16, rtol=4 * EPS)


def sinh_p(p: float, x: float) -> ApproxComplex:
    """``sinh_p x`` for ``x >= 0``: inverse of ``int_0^s (1+t^p)^{-1/p} dt``."""
    return ApproxComplex(_sinh_p_value(p, x), 1e-14)


def cosh_p(p: float, x: float) -> ApproxComplex:
    """``cosh_p x = (1 + sinh_p^p x)^{1/p}``."""
    s = _sinh_p_value(p, x)
    return ApproxComplex((1 + s**p) ** (1 / p), 1e-14)


def gd_p(p: float, x: float) -> ApproxComplex:
    """Generalized Gudermannian ``int_0^x cosh_p^{1-p} t dt = int_0^{sinh_p x} ds/(1+s^p)``."""
    p = float(p)
    S = _sinh_p_value(p, x)
    return integrate_interval(lambda s: 1 / (1 + s**p), 0.0, S, _TIGHT)


def gd_p_inverse(p: float, y: float) -> ApproxComplex:
    """``int_0^y cos_p^{1-p} t dt = int_0^{sin_p y} ds/(1-s^p)`` for ``0 <= y < pi_p/2``."""
    p = float(p)
    if not 0 <= y < pi_p(p) / 2:
        raise ValueError("need 0 <= y < pi_p/2")
    s = _sin_cos_p(p, y)[0]
    return integrate_interval(lambda t: 1 / (1 - t**p), 0.0, s, _TIGHT)


def verify_gtf(p: float, alpha: float, tol: Tolerance = Tolerance(1e-15, 1e-8)) -> CheckResult:
    """``int_0^alpha x cosh_p^{1-p} x dx + int_0^beta y cos_p^{1-p} y dy = alpha beta`` with ``beta = gd_p(alpha)``.

    Both integrals are taken in the ``s = sinh_p x`` / ``s = sin_p y``
    variables: ``int_0^{S} H(s)/(1+s^p) ds`` and ``int_0^{s_b} F(s)/(1-s^p) ds``.
    The constraint ``cosh_p alpha cos_p beta = 1`` is checked alongside.
    """
    p, alpha = float(p), float(alpha)
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    beta = gd_p(p, alpha).real
    S = _sinh_p_value(p, alpha)
    sb, cb = _sin_cos_p(p, beta)
    ch = (1 + S**p) ** (1 / p)
    I1 = integrate_interval(lambda s: _H_hyp(p, s) / (1 + s**p), 0.0, S, IntegrationBudget(target_tol=Tolerance(1e-12, 1e-15)))
    I2 = integrate_interval(lambda s: _F_trig(p, s) / (1 - s**p), 0.0, sb, IntegrationBudget(target_tol=Tolerance(1e-12, 1e-15)))
    params = {"p": p, "alpha": alpha, "beta": beta}
    main = make_check(I1 + I2, alpha * beta, tol, params)
    constraint = make_check(ch * cb, 1.0, Tolerance(1e-15, 1e-12), params)
    res = combine_checks([main, constraint], params)
    return CheckResult(main.lhs, main.rhs, main.abs_err, main.rel_err, res.passed, params, res.evals, note=res.note)
