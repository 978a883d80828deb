"""Quadratic-exponential series and their finite reductions.

For a 1-periodic ``f(x) = sum_n c_n e^{2 pi i n x}`` and a positive integer
``a`` the series ``sum_n c_n e^{pi i n^2 / a}`` collapses to an ``a``-term
sum of samples of ``f``.  This module evaluates both sides, the Gauss sum
special case, the inverse-square example, the decoupling of Fresnel
integrals of periodic functions, a squared-modulus series identity, the
modulus identities of Owen type, and a theta/q-product identity together
with its integral (Mordell-type) analogue.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .numkernel import (
    counted_cache,
    DEFAULT_BUDGET,
    EPS,
    ApproxComplex,
    CheckResult,
    IntegrationBudget,
    Tolerance,
    count_evals,
    integrate_fresnel,
    integrate_half_line,
    make_check,
    neumaier_sum,
    sum_bilateral,
    sum_series,
)
from .qfun import log_qpoch, q_pochhammer, QProductSpec, theta_sum

__all__ = [
    "PeriodicFunctionSpec",
    "ReductionParams",
    "reduce_to_finite_sum",
    "quadratic_series",
    "verify_reduction",
    "gauss_normalized_sum",
    "verify_gauss_sum",
    "ramanujan_inverse_square_sum",
    "inverse_square_direct",
    "verify_inverse_square",
    "fresnel_line_integral",
    "verify_decoupling",
    "verify_1716",
    "verify_modulus_identity_discrete",
    "verify_modulus_identity_continuous",
    "elliptic_identity_sides",
    "verify_elliptic_identity",
    "verify_mordell_relation",
]

_E_PI4 = cmath.exp(1j * math.pi / 4)


# ---------------------------------------------------------------------------
# Periodic functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicFunctionSpec:
    """A 1-periodic function with known Fourier coefficients.

    Parameters
    ----------
    func : callable
        Vectorized ``f(x)``, 1-periodic.
    coeff : callable
        Vectorized ``c_n`` over integer arrays.
    modes : mapping, optional
        For trigonometric polynomials, the finite set ``{n: c_n}``.
    coeff_tail : callable, optional
        ``coeff_tail(N)`` bounds ``sum_{|n|>N} |c_n|``.
    name : str
    """

    func: Callable[[np.ndarray], np.ndarray]
    coeff: Callable[[np.ndarray], np.ndarray]
    modes: Mapping[int, complex] | None = None
    coeff_tail: Callable[[int], float] | None = None
    name: str = "f"

    @classmethod
    def from_modes(cls, modes: Mapping[int, complex], name: str = "trigpoly") -> "PeriodicFunctionSpec":
        items = {int(n): complex(c) for n, c in modes.items() if c != 0}
        ns = np.array(sorted(items), dtype=float)
        cs = np.array([items[int(n)] for n in ns], dtype=complex)

        def func(x):
            x = np.asarray(x, dtype=float)
            return (np.exp(2j * np.pi * x[..., None] * ns) * cs).sum(axis=-1)

        def coeff(n):
            n = np.asarray(n)
            out = np.zeros(n.shape, dtype=complex)
            for k, c in items.items():
                out = np.where(n == k, c, out)
            return out

        return cls(func, coeff, items, lambda N: 0.0 if N >= max(map(abs, items), default=0) else math.inf, name)

    @classmethod
    def constant(cls, c: complex = 1.0) -> "PeriodicFunctionSpec":
        return cls.from_modes({0: c}, name=f"const({c})")

    @classmethod
    def cosine(cls, m: int = 1) -> "PeriodicFunctionSpec":
        """``cos(2 pi m x)``."""
        return cls.from_modes({m: 0.5, -m: 0.5}, name=f"cos(2pi*{m}x)")

    @classmethod
    def bernoulli_quadratic(cls) -> "PeriodicFunctionSpec":
        """``pi^2 (1/6 - x + x^2)`` on ``[0,1]``, i.e. ``sum_{n>=1} cos(2 pi n x)/n^2``."""

        def func(x):
            t = np.mod(np.asarray(x, dtype=float), 1.0)
            return math.pi**2 * (1.0 / 6.0 - t + t * t)

        def coeff(n):
            n = np.asarray(n, dtype=float)
            with np.errstate(divide="ignore"):
                return np.where(n == 0, 0.0, 0.5 / np.where(n == 0, 1.0, n * n))

        return cls(func, coeff, None, lambda N: 1.0 / N, "bernoulli2")

    def is_periodic(self, grid=None, rtol: float = 1e-10) -> bool:
        """Check ``f(x+1) = f(x)`` on a grid."""
        x = np.linspace(-1.3, 1.7, 31) if grid is None else np.asarray(grid, dtype=float)
        a = np.asarray(self.func(x))
        b = np.asarray(self.func(x + 1.0))
        return bool(np.all(np.abs(a - b) <= rtol * np.maximum(1.0, np.abs(a))))


@dataclass(frozen=True)
class ReductionParams:
    """Modulus ``a`` of the quadratic series and the branch to use.

    ``even=True`` selects the variant valid only for even ``a`` (samples
    ``f(r/a)``); otherwise the general branch (samples ``f(r/a - 1/2)``).
    """

    a: int
    even: bool = False

    def __post_init__(self):
        if int(self.a) != self.a or self.a < 1:
            raise ValueError("a must be a positive integer")
        if self.even and self.a % 2:
            raise ValueError("the even-a branch requires even a")


def reduce_to_finite_sum(f: PeriodicFunctionSpec, p: ReductionParams) -> ApproxComplex:
    """Finite ``a``-term side of the reduction of ``sum_n c_n e^{pi i n^2/a}``."""
    a = int(p.a)
    r = np.arange(1, a + 1, dtype=float)
    if p.even:
        x = r / a
        # exact phase reduction: r^2/a mod 2
        ph = np.mod(r * r, 2 * a) / a
    else:
        x = r / a - 0.5
        ph = np.mod(a * (0.5 - r / a) ** 2, 2.0)
    vals = np.asarray(f.func(x), dtype=complex) * np.exp(-1j * np.pi * ph)
    count_evals(a)
    s, err = neumaier_sum(vals)
    v = _E_PI4 / math.sqrt(a) * s
    return ApproxComplex(v, (err + 4 * a * EPS * float(np.abs(vals).max())) / math.sqrt(a))


def quadratic_series(f: PeriodicFunctionSpec, a: float, *, cap: int = 1_000_000) -> ApproxComplex:
    """Direct (symmetric) summation of ``sum_n c_n e^{pi i n^2 / a}``."""
    if f.modes is not None:
        tot = ApproxComplex(0.0)
        for n, c in f.modes.items():
            tot = tot + c * cmath.exp(1j * math.pi * math.fmod(n * n / a, 2.0))
        return tot
    return theta_sum(1.0 / a, f.coeff, cap=cap, tail_bound=f.coeff_tail)


def verify_reduction(f: PeriodicFunctionSpec, a: int, even: bool = False, tol: Tolerance = Tolerance(1e-6)) -> CheckResult:
    """Series side against the finite side."""
    lhs = quadratic_series(f, a)
    rhs = reduce_to_finite_sum(f, ReductionParams(a, even))
    return make_check(lhs, rhs, tol, {"f": f.name, "a": a, "even": even})


def gauss_normalized_sum(a: int) -> ApproxComplex:
    """``(e^{pi i/4}/sqrt a) sum_{r=1}^a e^{-pi i r^2/a}`` for even ``a`` (equals 1)."""
    if int(a) != a or a < 2 or a % 2:
        raise ValueError("a must be an even positive integer")
    return reduce_to_finite_sum(PeriodicFunctionSpec.constant(1.0), ReductionParams(int(a), True))


def verify_gauss_sum(a: int, tol: Tolerance = Tolerance(1e-12, 1e-12)) -> CheckResult:
    return make_check(gauss_normalized_sum(a), 1.0, tol, {"a": a})


def ramanujan_inverse_square_sum(a: int) -> ApproxComplex:
    """Closed finite form of ``sum_{n>=1} e^{pi i n^2/a}/n^2`` for even ``a``."""
    if int(a) != a or a < 2 or a % 2:
        raise ValueError("a must be an even positive integer")
    a = int(a)
    r = np.arange(1, a + 1, dtype=float)
    w = (r / a) * (1 - r / a)
    ph = 0.25 - np.mod(r * r, 2 * a) / a
    s, err = neumaier_sum(w * np.exp(1j * np.pi * ph))
    count_evals(a)
    v = math.pi**2 / 6 - math.pi**2 / math.sqrt(a) * s
    return ApproxComplex(v, 8 * EPS * (math.pi**2) * (1 + a))


def inverse_square_direct(a: float, cap: int = 1_000_000) -> ApproxComplex:
    """Direct sum of ``e^{pi i n^2/a}/n^2`` over ``1 <= n <= cap`` with tail bound ``1/cap``."""
    n = np.arange(1, cap + 1, dtype=float)
    ph = np.mod(n * n, 2 * a) / a if float(a).is_integer() else np.mod(n * n / a, 2.0)
    vals = np.exp(1j * np.pi * ph) / (n * n)
    count_evals(cap)
    s, err = neumaier_sum(vals)
    return ApproxComplex(s, err + 1.0 / cap)


def verify_inverse_square(a: int, cap: int = 1_000_000, tol: Tolerance = Tolerance(1e-5)) -> CheckResult:
    return make_check(inverse_square_direct(a, cap), ramanujan_inverse_square_sum(a), tol, {"a": a, "cap": cap})


# ---------------------------------------------------------------------------
# Decoupling of Fresnel integrals of periodic functions
# ---------------------------------------------------------------------------


@counted_cache(maxsize=4)
def _fresnel_half(budget: IntegrationBudget) -> ApproxComplex:
    return integrate_fresnel(None, math.pi, budget)


def fresnel_line_integral(nu: float, budget: IntegrationBudget = DEFAULT_BUDGET) -> ApproxComplex:
    """``int_R exp(pi i x^2 + 2 pi i nu x) dx`` by lobe quadrature.

    The range is split at the stationary point ``x = -nu``; after the
    shift ``u = x + nu`` both halves are ``int_0^inf e^{pi i u^2} du``,
    evaluated numerically by :func:`integrate_fresnel`.
    """
    half = _fresnel_half(budget)
    ph = cmath.exp(-1j * math.pi * math.fmod(nu * nu, 2.0))
    return (half + half) * ph


def _line_integral_of_modes(terms, budget) -> ApproxComplex:
    tot = ApproxComplex(0.0)
    for nu, c in terms:
        tot = tot + c * fresnel_line_integral(nu, budget)
    return tot


def verify_decoupling(
    f: PeriodicFunctionSpec,
    g: PeriodicFunctionSpec,
    alpha: float,
    beta: float,
    tol: Tolerance = Tolerance(1e-9, 1e-12),
    budget: IntegrationBudget = DEFAULT_BUDGET,
    *,
    require_integer: bool = True,
) -> CheckResult:
    """``int f(ax)g(bx)e^{pi i x^2} = e^{-pi i/4} int f(ax)e^{pi i x^2} int g(bx)e^{pi i x^2}``.

    The identity is only claimed when ``alpha*beta`` is an integer;
    ``require_integer=False`` evaluates it anyway (negative control).
    """
    ab = alpha * beta
    if require_integer and abs(ab - round(ab)) > 1e-12:
        raise ValueError("alpha*beta must be an integer for the identity to hold")
    if f.modes is None or g.modes is None:
        raise ValueError("f and g must be given by finitely many Fourier modes")
    lhs = _line_integral_of_modes(
        [(alpha * r + beta * s, ar * bs) for r, ar in f.modes.items() for s, bs in g.modes.items()], budget
    )
    If = _line_integral_of_modes([(alpha * r, ar) for r, ar in f.modes.items()], budget)
    Ig = _line_integral_of_modes([(beta * s, bs) for s, bs in g.modes.items()], budget)
    rhs = (If * Ig) * cmath.exp(-1j * math.pi / 4)
    return make_check(lhs, rhs, tol, {"f": f.name, "g": g.name, "alpha": alpha, "beta": beta})


# ---------------------------------------------------------------------------
# Squared modulus of a quadratic-phase exponential series
# ---------------------------------------------------------------------------


def verify_1716(gamma: float, tol: Tolerance = Tolerance(1e-12)) -> CheckResult:
    """``|sum e^{i g n^2}/n!|^2 = sum 2^n cos(g n)^n / n!``."""
    g = float(gamma)

    def lt(n):
        return cmath.exp(1j * math.fmod(g * n * n, 2 * math.pi) - math.lgamma(n + 1))

    def rt(n):
        return math.exp(n * math.log(2.0) - math.lgamma(n + 1)) * math.cos(g * n) ** n

    stop = Tolerance(1e-17, 0.0)
    s = sum_series(lt, stop, cap=400).sum
    lhs = s.abs2()
    rhs = sum_series(rt, stop, cap=400).sum
    return make_check(lhs, rhs, tol, {"gamma": gamma})


# ---------------------------------------------------------------------------
# Modulus identities of Owen type
# ---------------------------------------------------------------------------


def verify_modulus_identity_discrete(gamma: float, p: float, tol: Tolerance = Tolerance(1e-6), cap: int = 1_000_000) -> CheckResult:
    """Discrete modulus identity, evaluated exactly as written (audit status).

    Both bilateral series decay like ``1/n^2``; they are summed directly
    to ``|n| <= cap`` with integral tail bounds.
    """
    g, p = float(gamma), float(p)
    if p <= 0:
        raise ValueError("p must be positive")
    pi = math.pi
    theta = theta_sum(
        g,
        lambda n: 1.0 / (p * p + 4 * pi * pi * np.asarray(n, float) ** 2),
        cap=cap,
        tail_bound=lambda N: 1.0 / (2 * pi * pi * N),
    )
    lhs = theta.abs2()
    n = np.arange(1, cap + 1, dtype=float)
    sh = math.sinh(p / 2)

    def side(nn):
        fr = np.mod(g * nn, 1.0)
        ph = np.mod(g * nn * nn, 2.0)
        return 2.0 / (p * p + pi * pi * nn * nn) * (
            np.cos(pi * ph) * np.cosh(p * fr - p / 2) - p / (pi * nn) * np.sin(pi * ph) * np.sinh(p * fr - p / 2)
        )

    vals = side(n) + side(-n)
    count_evals(2 * cap)
    s, err = neumaier_sum(vals)
    n0 = 2.0 * math.cosh(p / 2) / (p * p)  # n = 0 term as a limit
    tail = 4 * math.cosh(p / 2) / (pi * pi * cap) * (1 + p / (pi * cap))
    rhs = ApproxComplex(1 / (p * sh) + 8 * p * sh + n0 + s, err + tail)
    return make_check(lhs, rhs, tol, {"gamma": gamma, "p": p})


def verify_modulus_identity_continuous(alpha: float, tol: Tolerance = Tolerance(1e-9, 1e-12), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """``|int_0^inf e^{i a x^2}/(x^2+1)|^2 = pi int_0^inf e^{-2ax}/(x^2+4) (cos a x^2 + (2/x) sin a x^2)``."""
    a = float(alpha)
    if a < 0:
        raise ValueError("alpha must be non-negative")
    if a == 0:
        inner = integrate_half_line(lambda x: 1.0 / (1.0 + x * x), budget, tail_bound=lambda X: 1.0 / X)
        lhs = inner.abs2()
        rhs = math.pi * integrate_half_line(lambda x: 1.0 / (4.0 + x * x), budget, tail_bound=lambda X: 1.0 / X)
        return make_check(lhs, rhs, tol, {"alpha": alpha})
    inner = integrate_fresnel(lambda x: 1.0 / (1.0 + x * x), a, budget)
    lhs = inner.abs2()

    def r(x):
        ax2 = a * x * x
        return np.exp(-2 * a * x) / (x * x + 4) * (np.cos(ax2) + 2 * a * x * np.sinc(ax2 / math.pi))

    rhs = math.pi * integrate_half_line(r, budget, step=max(0.25, min(4.0, 1.0 / a)))
    return make_check(lhs, rhs, tol, {"alpha": alpha})


# ---------------------------------------------------------------------------
# Theta / q-product identity and the Mordell-type relation
# ---------------------------------------------------------------------------


def _elliptic_term(n: int, gamma: float, alpha: float) -> float:
    """One summand of the q-product side (with removable cases resolved)."""
    pi = math.pi
    beta = 1.0 / alpha
    q = math.exp(-pi * alpha)
    q2 = q * q
    x = n * gamma
    den_s = math.sinh(pi * alpha * gamma * n) * math.sinh(pi * beta * n)
    j = round(x)
    lq = math.log(q)
    if j >= 1 and abs(x - j) <= 1e-10 * max(1.0, x):
        # sin(pi g n^2) and the factor (1 - q^{2-2x+2(j-1)}) vanish together;
        # their ratio tends to -(-1)^{jn} n / (2 alpha)
        num = log_qpoch(np.array([math.exp((1 + 2 * j) * lq), math.exp((1 - 2 * j) * lq)]), q2).sum()
        den = log_qpoch(np.array([math.exp((2 + 2 * j) * lq)]), q2).sum()
        i = np.arange(0, max(j + 2, 60))
        i = i[i != j - 1]
        w = 1.0 - np.exp((2 - 2 * j + 2 * i) * lq)
        den_prod = np.log(np.abs(w)).sum() + 1j * pi * (np.count_nonzero(w < 0) % 2)
        ratio = complex(np.exp(num - den - den_prod)).real
        return ratio * (-((-1) ** ((j * n) % 2)) * n / (2 * alpha)) / den_s
    s = math.sin(pi * math.fmod(gamma * n * n, 2.0))
    num = log_qpoch(np.array([math.exp((1 + 2 * x) * lq), math.exp((1 - 2 * x) * lq)]), q2).sum()
    den = log_qpoch(np.array([math.exp((2 + 2 * x) * lq), math.exp((2 - 2 * x) * lq)]), q2).sum()
    with np.errstate(over="ignore", under="ignore"):
        ratio = complex(np.exp(num - den)).real
    return ratio * s / den_s


def elliptic_identity_sides(gamma: float, alpha: float) -> tuple[ApproxComplex, ApproxComplex]:
    """Both sides of the theta / q-product identity with ``alpha*beta = 1``."""
    pi = math.pi
    g, a = float(gamma), float(alpha)
    if a <= 0:
        raise ValueError("alpha must be positive")
    b = 1.0 / a
    stop = Tolerance(1e-17, 0.0)
    th = theta_sum(g, lambda n: 1.0 / np.cosh(pi * b * np.asarray(n, float)))

    def sh(n):
        n = np.asarray(n, float)
        with np.errstate(over="ignore"):
            return a * n / np.sinh(pi * a * n)

    ser = sum_series(sh, stop, cap=100_000, start=1, vectorized=True).sum
    lhs = th.abs2() * (1 / (2 * a)) - (ser * 2.0 + 1.0 / pi)
    q = math.exp(-pi * a)
    pref = q_pochhammer(QProductSpec(q * q, q * q)) ** 4 / q_pochhammer(QProductSpec(q, q)) ** 2 * 2.0
    res = sum_series(lambda n: _elliptic_term(n, g, a), stop, cap=10_000, start=1)
    rhs = pref * res.sum
    return lhs, rhs


def verify_elliptic_identity(gamma: float, alpha: float, tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    lhs, rhs = elliptic_identity_sides(gamma, alpha)
    return make_check(lhs, rhs, tol, {"gamma": gamma, "alpha": alpha})


def verify_mordell_relation(gamma: float, tol: Tolerance = Tolerance(1e-9, 1e-12), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """``int_0^inf sin(g x^2)/(sinh pi x sinh g x) dx = |int_0^inf e^{i g x^2} sech(pi x) dx|^2``."""
    g = float(gamma)
    if g <= 0:
        raise ValueError("gamma must be positive")

    def l(x):
        with np.errstate(over="ignore"):
            return np.sin(g * x * x) / (np.sinh(math.pi * x) * np.sinh(g * x))

    lhs = integrate_half_line(l, budget)
    f = integrate_fresnel(
        lambda x: 1.0 / np.cosh(math.pi * x), g, budget, envelope=lambda X: 2.0 * math.exp(-math.pi * X)
    )
    return make_check(lhs, f.abs2(), tol, {"gamma": gamma})
