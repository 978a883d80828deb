"""Character sums, band-limited sampling and step-function integrals.

Odd ``k``-periodic sequences ``chi`` (in particular odd Dirichlet
characters), the value ``L(1, chi)``, sampling identities for even
band-limited functions, summation formulas that turn ``sum chi(n)
f(alpha n)/n`` into a half-line integral of the cosine transform against a
step function, and self-reciprocal "step times chirp" functions.

Conventions
-----------
The cosine transform is ``F_c(y) = sqrt(2/pi) int_0^inf f(x) cos(xy) dx``.
``B_sigma`` denotes even functions whose ``F_c`` vanishes for ``y > sigma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import j0

from .numkernel import (
    DEFAULT_BUDGET,
    ApproxComplex,
    BreakLattice,
    CheckResult,
    IntegrationBudget,
    Tolerance,
    combine_checks,
    integrate_fresnel,
    integrate_half_line,
    integrate_half_line_step,
    integrate_panel_sequence,
    make_check,
    sum_blocks_oscillatory,
    sum_blocks_richardson,
    sum_series,
)

__all__ = [
    "PeriodicOddSequence",
    "DirichletCharacter",
    "StepWave",
    "SQUARE",
    "EPSILON",
    "CosinePair",
    "BandLimitedSpec",
    "character",
    "L1",
    "character_series",
    "sinc2_spec",
    "sinc_band_spec",
    "bessel_spec",
    "gaussian_spec",
    "sech_pair",
    "cosh3_pair",
    "gaussian_pair",
    "verify_cotangent_sampling",
    "verify_character_sampling",
    "verify_dirichlet3",
    "verify_gosper",
    "step_transform_sum",
    "example_integral",
    "closed_form_integral",
    "verify_example_pairs",
    "verify_closed_form",
    "self_reciprocal_chirp",
    "chirp_cosine_transform",
    "verify_chirp_eigen",
    "piecewise_fresnel",
    "verify_plancherel_pair",
    "verify_fresnel_closed_form",
]

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)
SQRT_2PI = math.sqrt(2 * math.pi)


# ---------------------------------------------------------------------------
# Periodic odd sequences and characters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicOddSequence:
    """``chi(n)`` given by its values on ``0..k-1``; odd and ``k``-periodic."""

    k: int
    values: tuple

    def __post_init__(self):
        k = int(self.k)
        if k < 1:
            raise ValueError("modulus must be positive")
        v = tuple(float(x) for x in self.values)
        if len(v) != k:
            raise ValueError(f"need {k} values, got {len(v)}")
        for n in range(k):
            if abs(v[(-n) % k] + v[n]) > 1e-15:
                raise ValueError(f"sequence is not odd: chi({n})={v[n]}, chi({-n})={v[(-n) % k]}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "values", v)

    def __call__(self, n):
        """Vectorized evaluation on integers."""
        return np.asarray(self.values)[np.mod(np.asarray(n, dtype=np.int64), self.k)]


@dataclass(frozen=True)
class DirichletCharacter(PeriodicOddSequence):
    """An odd Dirichlet character: completely multiplicative, zero off units."""

    label: str = ""

    def __post_init__(self):
        super().__post_init__()
        k, v = self.k, self.values
        for n in range(k):
            unit = math.gcd(n, k) == 1
            if unit and abs(abs(v[n]) - 1) > 1e-15:
                raise ValueError(f"chi({n}) must be a unit value for gcd(n,k)=1")
            if not unit and v[n] != 0:
                raise ValueError(f"chi({n}) must vanish for gcd(n,k)>1")
        for m in range(1, 3 * k + 1):
            for n in range(1, 3 * k + 1):
                if abs(v[(m * n) % k] - v[m % k] * v[n % k]) > 1e-15:
                    raise ValueError(f"not multiplicative at ({m}, {n})")
        if abs(sum(v)) > 1e-12:
            raise ValueError("character sum over a period must vanish")


_TABLES = {
    "chi4": (4, (0, 1, 0, -1)),
    "chi3": (3, (0, 1, -1)),
    "chi6": (6, (0, 1, 0, 0, 0, -1)),
}


def character(k_or_label, label: str | None = None, table: Sequence[float] | None = None) -> DirichletCharacter:
    """Return a validated odd character.

    ``character("chi4")``, ``character(3, "chi3")`` or
    ``character(5, table=(...))`` for an explicit table.
    """
    if isinstance(k_or_label, str):
        label = k_or_label
    if table is not None:
        return DirichletCharacter(int(k_or_label), tuple(table), label or "custom")
    if label not in _TABLES:
        raise ValueError(f"unknown character label {label!r}")
    k, t = _TABLES[label]
    if not isinstance(k_or_label, str) and int(k_or_label) != k:
        raise ValueError(f"{label} has modulus {k}")
    return DirichletCharacter(k, t, label)


def _sum_modulated(term, k: int, omegas: Sequence[float] = (), tol: Tolerance = Tolerance(1e-13, 1e-16)) -> ApproxComplex:
    """Sum ``term(n)``, ``n >= 1``, built from a ``k``-periodic weight times
    a smooth factor oscillating with angular frequencies ``omegas`` per index.

    When every frequency is commensurate with ``2 pi`` the block length is
    made a common period and block sums are extrapolated in ``1/N``;
    otherwise the block partial sums are averaged with the ratios
    ``exp(+- i omega k)``.
    """
    omegas = [abs(float(w)) for w in omegas if w != 0]
    block = k
    incommensurate = []
    for w in omegas:
        p = 2 * math.pi / w
        per = None
        for mult in range(1, 65):
            if abs(p * mult - round(p * mult)) < 1e-9 * max(1.0, p * mult):
                per = int(round(p * mult))
                break
        if per is None:
            incommensurate.append(w)
        else:
            block = block * per // math.gcd(block, per)
    if not incommensurate:
        return sum_blocks_richardson(term, block, tol=tol)
    ratios = []
    for w in incommensurate:
        z = complex(math.cos(w * block), math.sin(w * block))
        ratios += [z, z.conjugate()]
    return sum_blocks_oscillatory(term, block, ratios, tol=tol)


def character_series(chi: PeriodicOddSequence, g: Callable[[np.ndarray], np.ndarray], *, omegas: Sequence[float] = (), tol: Tolerance = Tolerance(1e-13, 1e-16)) -> ApproxComplex:
    """``sum_{n>=1} chi(n) g(n) / n`` by block acceleration.

    ``omegas`` lists the angular frequencies (per unit ``n``) of any
    oscillation of ``g``; see :func:`_sum_modulated`.
    """
    vals = np.asarray(chi.values)
    if not np.any(vals):
        return ApproxComplex(0.0)

    def term(n):
        c = vals[n % chi.k]
        out = np.zeros(n.shape, dtype=complex)
        nz = c != 0
        out[nz] = c[nz] * np.asarray(g(n[nz].astype(float)), dtype=complex) / n[nz]
        return out

    return _sum_modulated(term, chi.k, omegas, tol)


def L1(chi: PeriodicOddSequence) -> ApproxComplex:
    """``L(1, chi) = sum_{n>=1} chi(n)/n`` summed over whole periods."""
    return character_series(chi, lambda n: np.ones_like(n))


# ---------------------------------------------------------------------------
# Step waves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StepWave:
    """Piecewise-constant wave with jumps on an arithmetic lattice.

    ``kind='square'``: ``(-1)^floor(t+1/2)``, period 2, jumps at half
    integers.  ``kind='epsilon'``: ``-2`` on ``(n+1/3, n+2/3)``, ``1``
    elsewhere, period 1.  ``kind='general'``: user function ``func`` with
    ``S(-x)=S(x)``, ``S(1-x)=-S(x)`` and jumps at ``breaks``.
    """

    kind: str = "square"
    func: Callable[[np.ndarray], np.ndarray] | None = None
    breaks: BreakLattice | None = None

    def __post_init__(self):
        if self.kind not in ("square", "epsilon", "general"):
            raise ValueError("kind must be square, epsilon or general")
        if self.kind == "general" and (self.func is None or self.breaks is None):
            raise ValueError("a general wave needs func and breaks")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "square":
            return 1.0 - 2.0 * (np.mod(np.floor(t + 0.5), 2.0))
        if self.kind == "epsilon":
            fr = t - np.floor(t)
            return np.where((fr > 1 / 3) & (fr < 2 / 3), -2.0, 1.0)
        return np.asarray(self.func(t), dtype=float)

    @property
    def lattice(self) -> BreakLattice:
        if self.kind == "square":
            return BreakLattice(1.0, (0.5,))
        if self.kind == "epsilon":
            return BreakLattice(1.0, (1 / 3, 2 / 3))
        return self.breaks

    def fourier_partial(self, t, n_terms: int):
        """Partial sum of the character Fourier series of the wave."""
        t = np.asarray(t, dtype=float)
        n = np.arange(1, n_terms + 1)
        if self.kind == "square":
            c = np.array([0, 1, 0, -1])[n % 4] / n
            return 4 / math.pi * (c * np.cos(math.pi * np.multiply.outer(t, n))).sum(axis=-1)
        if self.kind == "epsilon":
            c = np.array([0, 1, -1])[n % 3] / n
            return 3 * math.sqrt(3) / math.pi * (c * np.cos(2 * math.pi * np.multiply.outer(t, n))).sum(axis=-1)
        raise ValueError("no built-in Fourier series for a general wave")

    def satisfies_chirp_symmetry(self, rng: np.random.Generator | None = None, n: int = 64) -> bool:
        """Check ``S(-x)=S(x)`` and ``S(1-x)=-S(x)`` at random non-lattice points."""
        rng = rng or np.random.default_rng(0)
        x = rng.uniform(-3, 3, n)
        return bool(np.allclose(self(-x), self(x)) and np.allclose(self(1 - x), -self(x)))


SQUARE = StepWave("square")
EPSILON = StepWave("epsilon")


# ---------------------------------------------------------------------------
# Cosine-transform pairs and band-limited functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CosinePair:
    """An even function and its cosine transform (both vectorized)."""

    f: Callable[[np.ndarray], np.ndarray]
    Fc: Callable[[np.ndarray], np.ndarray]
    name: str = "pair"


@dataclass(frozen=True)
class BandLimitedSpec:
    """Even ``f`` whose cosine transform vanishes beyond ``sigma``.

    ``Fc`` is an optional closed-form transform; without it the transform
    is computed by quadrature (``f`` must then decay rapidly).
    """

    f: Callable[[np.ndarray], np.ndarray]
    sigma: float
    Fc: Callable[[np.ndarray], np.ndarray] | None = None
    name: str = "f"
    freqs: tuple = ()  #: angular frequencies of the oscillation of f(x) for large x

    @property
    def f0(self) -> float:
        return float(np.real(np.asarray(self.f(np.array([0.0])))[0]))

    def transform(self, y: float, budget: IntegrationBudget = DEFAULT_BUDGET) -> float:
        if self.Fc is not None:
            return float(np.asarray(self.Fc(np.array([float(y)])))[0])
        r = integrate_half_line(lambda x: self.f(x) * np.cos(x * y), budget, step=0.5)
        return SQRT_2_OVER_PI * r.real

    def band_leak(self, n_grid: int = 13, budget: IntegrationBudget = DEFAULT_BUDGET) -> float:
        """``max |F_c(y)|`` for ``y`` on a grid in ``(sigma, sigma+3]``."""
        ys = self.sigma + np.linspace(0, 3, n_grid + 1)[1:]
        return max(abs(self.transform(float(y), budget)) for y in ys)


def sinc2_spec() -> BandLimitedSpec:
    """``(sin(pi x)/(pi x))^2`` in ``B_{2pi}`` with a triangular spectrum."""

    def f(x):
        return np.sinc(np.asarray(x, dtype=float)) ** 2

    def Fc(y):
        y = np.abs(np.asarray(y, dtype=float))
        return np.where(y < 2 * math.pi, 0.5 * SQRT_2_OVER_PI * (1 - y / (2 * math.pi)), 0.0)

    return BandLimitedSpec(f, 2 * math.pi, Fc, "sinc2", freqs=(2 * math.pi,))


def sinc_band_spec(sigma: float = 2 * math.pi) -> BandLimitedSpec:
    """``sin(sigma x)/(sigma x)``: constant spectrum on ``[0, sigma]``."""

    def f(x):
        return np.sinc(sigma * np.asarray(x, dtype=float) / math.pi)

    def Fc(y):
        y = np.abs(np.asarray(y, dtype=float))
        return np.where(y < sigma, math.sqrt(math.pi / 2) / sigma, 0.0)

    return BandLimitedSpec(f, sigma, Fc, f"sinc_band({sigma:.6g})", freqs=(sigma,))


def bessel_spec(b: float) -> BandLimitedSpec:
    """``sin(sqrt(b^2+x^2))/sqrt(b^2+x^2)``; spectrum ``(pi/2) J0(b sqrt(1-y^2))`` on ``[0,1]``."""
    b = float(b)

    def f(x):
        r = np.sqrt(b * b + np.asarray(x, dtype=float) ** 2)
        return np.sinc(r / math.pi)

    def Fc(y):
        y = np.abs(np.asarray(y, dtype=float))
        inside = y < 1
        arg = b * np.sqrt(np.where(inside, 1 - y * y, 0.0))
        return np.where(inside, SQRT_2_OVER_PI * (math.pi / 2) * j0(arg), 0.0)

    return BandLimitedSpec(f, 1.0, Fc, f"bessel(b={b})", freqs=(1.0,))


def gaussian_spec(c: float = 1.0) -> BandLimitedSpec:
    """``exp(-c x^2)`` declared (wrongly) as band limited -- a negative control."""

    def f(x):
        return np.exp(-c * np.asarray(x, dtype=float) ** 2)

    return BandLimitedSpec(f, 2 * math.pi, None, f"gaussian(c={c})")


def sech_pair() -> CosinePair:
    """``1/cosh(sqrt(pi/2) x)``, self-reciprocal."""
    s = math.sqrt(math.pi / 2)

    def f(x):
        return 1.0 / np.cosh(s * np.asarray(x, dtype=float))

    return CosinePair(f, f, "sech")


def cosh3_pair() -> CosinePair:
    """``1/(1 + 2 cosh(sqrt(2 pi/3) x))``, self-reciprocal."""
    s = math.sqrt(2 * math.pi / 3)

    def f(x):
        return 1.0 / (1.0 + 2.0 * np.cosh(s * np.asarray(x, dtype=float)))

    return CosinePair(f, f, "cosh3")


def gaussian_pair() -> CosinePair:
    """``exp(-x^2/2)``, self-reciprocal."""

    def f(x):
        return np.exp(-0.5 * np.asarray(x, dtype=float) ** 2)

    return CosinePair(f, f, "gaussian")


# ---------------------------------------------------------------------------
# Sampling identities
# ---------------------------------------------------------------------------


def _band_note(spec: BandLimitedSpec, a: float = 1.0, budget: IntegrationBudget = DEFAULT_BUDGET):
    """Validate the band limit; returns (ok, note)."""
    leak = spec.band_leak(budget=budget)
    if leak >= 1e-8:
        return False, f"not band limited: max |F_c| beyond sigma = {leak:.3e}"
    return True, ""


def verify_cotangent_sampling(
    spec: BandLimitedSpec,
    s: float,
    tol: Tolerance = Tolerance(1e-9, 1e-12),
    budget: IntegrationBudget = DEFAULT_BUDGET,
) -> CheckResult:
    """``sum_{n in Z} f(n+s)/(n+s) = pi cot(pi s) f(0)`` for ``f in B_{2pi}``.

    A failed band-limit validation is reported as a failed check (both
    sides are still evaluated so the discrepancy is visible).
    """
    s = float(s)
    if s == math.floor(s):
        raise ValueError("s must not be an integer")
    if spec.sigma > 2 * math.pi * (1 + 1e-12):
        raise ValueError("f must lie in B_{2 pi}")
    ok, note = _band_note(spec, budget=budget)
    f = spec.f

    # pair n >= 0 with -(n+1): f(n+s)/(n+s) - f(n+1-s)/(n+1-s)
    def term(n):
        n = np.asarray(n, dtype=float) - 1
        u, v = n + s, n + 1 - s
        return f(u) / u - f(v) / v

    lhs = _sum_modulated(term, 1, spec.freqs)
    rhs = math.pi / math.tan(math.pi * s) * spec.f0
    res = make_check(lhs, rhs, tol, {"f": spec.name, "s": s}, note)
    if not ok:
        res.passed = False
    return res


def verify_character_sampling(
    spec: BandLimitedSpec,
    chi: DirichletCharacter,
    a: float,
    tol: Tolerance = Tolerance(1e-9, 1e-12),
    budget: IntegrationBudget = DEFAULT_BUDGET,
) -> CheckResult:
    """``sum chi(n) f(a n/k)/n = L(1, chi) f(0)`` whenever ``a * sigma <= 2 pi``."""
    a = float(a)
    if a < 0 or a * spec.sigma > 2 * math.pi * (1 + 1e-12):
        raise ValueError("need 0 <= a and a*sigma <= 2 pi")
    ok, note = _band_note(spec, budget=budget)
    k = chi.k
    lhs = character_series(chi, lambda n: spec.f(a * n / k), omegas=[w * a / k for w in spec.freqs])
    rhs = L1(chi) * spec.f0
    res = make_check(lhs, rhs, tol, {"f": spec.name, "chi": getattr(chi, "label", ""), "a": a}, note)
    if not ok:
        res.passed = False
    return res


def verify_dirichlet3(chi: DirichletCharacter, a: float, b: float, tol: Tolerance = Tolerance(1e-9, 1e-12)) -> CheckResult:
    """Sampling of ``sin sqrt(b^2+x^2)/sqrt(b^2+x^2)`` (``0 <= a <= 2 pi``)."""
    r = verify_character_sampling(bessel_spec(b), chi, a, tol)
    r.params["b"] = b
    return r


def verify_gosper(b: float = 1.0, tol: Tolerance = Tolerance(1e-8, 1e-12)) -> CheckResult:
    """The ``k=4, a=2 pi`` case with the right side written as ``(pi/2) sin(b)/b``.

    The series itself is evaluated exactly as for :func:`verify_dirichlet3`.
    """
    chi = character("chi4")
    spec = bessel_spec(b)
    lhs = character_series(chi, lambda n: spec.f(2 * math.pi * n / 4), omegas=[2 * math.pi / 4])
    rhs = math.pi / 2 * math.sin(b) / b
    return make_check(lhs, rhs, tol, {"b": b})


# ---------------------------------------------------------------------------
# Step-function summation formulas
# ---------------------------------------------------------------------------

_STEP_RULES = {
    # label: (alpha*beta, wave, scale c in F_c(c beta t), prefactor)
    "chi4": (math.pi / 2, SQUARE, 2.0, math.sqrt(math.pi / 2)),
    "chi3": (2 * math.pi / 3, EPSILON, 3.0, math.sqrt(2 * math.pi / 3)),
}


def _decaying_series(chi: PeriodicOddSequence, g) -> ApproxComplex:
    vals = np.asarray(chi.values)

    def term(n):
        return vals[n % chi.k] * g(n.astype(float)) / n

    res = sum_series(term, Tolerance(1e-16, 1e-300), cap=2_000_000, start=1, vectorized=True)
    if not res.converged:
        return character_series(chi, g)
    return res.sum


def step_transform_sum(
    label: str,
    pair: CosinePair,
    alpha: float,
    beta: float,
    tol: Tolerance = Tolerance(1e-9, 1e-13),
    budget: IntegrationBudget = DEFAULT_BUDGET,
) -> CheckResult:
    """``sum chi(n) f(alpha n)/n`` against the step-weighted integral of ``F_c``.

    ``chi4`` needs ``alpha beta = pi/2`` and the square wave; ``chi3`` needs
    ``alpha beta = 2 pi/3`` and the three-level wave.
    """
    if label not in _STEP_RULES:
        raise ValueError("label must be chi4 or chi3")
    prod, wave, c, pref = _STEP_RULES[label]
    if abs(alpha * beta - prod) > 1e-12 * prod:
        raise ValueError(f"alpha*beta must equal {prod}")
    chi = character(label)
    lhs = _decaying_series(chi, lambda n: pair.f(alpha * n))
    integral = integrate_half_line_step(lambda t: wave(t) * pair.Fc(c * beta * t), wave.lattice, budget)
    rhs = integral * (beta * pref)
    return make_check(lhs, rhs, tol, {"chi": label, "f": pair.name, "alpha": alpha, "beta": beta})


# ---------------------------------------------------------------------------
# Worked examples and closed forms
# ---------------------------------------------------------------------------


def _env_exp(rate: float, amp: float = 2.0):
    """Envelope ``int_X^inf amp e^{-rate t} dt``."""
    return lambda X: amp * math.exp(-rate * X) / rate


def example_integral(which: int, alpha: float, budget: IntegrationBudget = DEFAULT_BUDGET) -> ApproxComplex:
    """Single step integrals of Examples 1--2 (``which`` = 1, 2)."""
    if which == 1:
        f = lambda t: SQUARE(t) / np.cosh(math.pi * alpha * t)
        return integrate_half_line_step(f, SQUARE.lattice, budget, envelope=_env_exp(math.pi * alpha))
    if which == 2:
        f = lambda t: EPSILON(t) / (1 + 2 * np.cosh(2 * math.pi * alpha * t))
        return integrate_half_line_step(f, EPSILON.lattice, budget, envelope=_env_exp(2 * math.pi * alpha, 2.0))
    raise ValueError("which must be 1 or 2")


def _example3_integral(alpha: float, beta: float, budget: IntegrationBudget) -> ApproxComplex:
    # arctan(e^{-u}) = pi/4 - arctan(tanh(u/2)); the difference avoids cancellation
    def f(t):
        t = np.asarray(t, dtype=float)
        d = np.arctan(np.tanh(math.pi * beta * t / 2)) - np.arctan(np.tanh(math.pi * alpha * t / 2))
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.where(t > 0, d / np.where(t > 0, t, 1.0), math.pi * (beta - alpha) / 2)
        return out * SQUARE(t)

    rate = math.pi * min(alpha, beta)
    return integrate_half_line_step(f, SQUARE.lattice, budget, envelope=lambda X: 2 * math.exp(-rate * X) / (rate * max(X, 1e-300)))


def verify_example_pairs(which: int, alpha: float, tol: Tolerance = Tolerance(1e-9, 1e-12), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """Examples 1--3 with ``beta = 1/alpha``."""
    alpha = float(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    beta = 1.0 / alpha
    if which == 1:
        lhs = example_integral(1, alpha, budget) * alpha + example_integral(1, beta, budget) * beta
        rhs = 0.5
    elif which == 2:
        lhs = example_integral(2, alpha, budget) * alpha + example_integral(2, beta, budget) * beta
        rhs = 1 / (6 * math.sqrt(3))
    elif which == 3:
        lhs = _example3_integral(alpha, beta, budget)
        rhs = math.pi / 8 * math.log(beta / alpha)
    else:
        raise ValueError("which must be 1, 2 or 3")
    return make_check(lhs, rhs, tol, {"which": which, "alpha": alpha})


def piecewise_fresnel(budget: IntegrationBudget = DEFAULT_BUDGET) -> ApproxComplex:
    """``int_0^inf (-1)^floor(t+1/2) sech(pi t) e^{i pi t^2} dt``."""
    h = lambda t: SQUARE(t) / np.cosh(math.pi * t)
    return integrate_fresnel(h, math.pi, budget, breaks=SQUARE.lattice, envelope=lambda X: 2 * math.exp(-math.pi * X))


def closed_form_integral(which: str, budget: IntegrationBudget = DEFAULT_BUDGET) -> tuple[ApproxComplex, float]:
    """``(computed, exact)`` for ``'sech'`` (1/4), ``'epsilon'`` (1/(12 sqrt 3)), ``'fresnel'`` (1/(2 sqrt 2))."""
    if which == "sech":
        return example_integral(1, 1.0, budget), 0.25
    if which == "epsilon":
        return example_integral(2, 1.0, budget), 1 / (12 * math.sqrt(3))
    if which == "fresnel":
        return piecewise_fresnel(budget), 1 / (2 * math.sqrt(2))
    raise ValueError("which must be sech, epsilon or fresnel")


def verify_closed_form(which: str, tol: Tolerance | None = None, budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    if tol is None:
        tol = Tolerance(1e-15, 1e-5 if which == "fresnel" else 1e-8)
    lhs, rhs = closed_form_integral(which, budget)
    return make_check(lhs, rhs, tol, {"which": which})


def verify_fresnel_closed_form(tol: Tolerance = Tolerance(1e-15, 1e-9), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """Real part ``1/(2 sqrt 2)`` and vanishing imaginary part."""
    return verify_closed_form("fresnel", tol, budget)


# ---------------------------------------------------------------------------
# Self-reciprocal step x chirp functions
# ---------------------------------------------------------------------------


def self_reciprocal_chirp(S: StepWave = SQUARE, parity: str = "cos") -> Callable[[np.ndarray], np.ndarray]:
    """``S(x/sqrt(2 pi)) cos(x^2/2)`` (eigenvalue 1) or ``... sin(x^2/2)`` (eigenvalue -1)."""
    if parity not in ("cos", "sin"):
        raise ValueError("parity must be cos or sin")
    trig = np.cos if parity == "cos" else np.sin

    def f(x):
        x = np.asarray(x, dtype=float)
        return S(x / SQRT_2PI) * trig(0.5 * x * x)

    f.eigenvalue = 1.0 if parity == "cos" else -1.0  # type: ignore[attr-defined]
    f.wave = S  # type: ignore[attr-defined]
    return f


def chirp_cosine_transform(f, y: float, budget: IntegrationBudget = DEFAULT_BUDGET) -> ApproxComplex:
    """Cosine transform of a step x chirp function at ``y``.

    The half line is cut at the wave's jumps (scaled by ``sqrt(2 pi)``);
    panel sums then carry the oscillations ``(-e^{+- i sqrt(2 pi) y})^j``,
    which are removed by iterated averaging.
    """
    S: StepWave = f.wave
    lat = S.lattice
    if lat.period != 1.0:
        raise ValueError("wave lattice must have unit period")
    offs = sorted(o % 1.0 for o in lat.offsets)
    if len(offs) != 1:
        raise ValueError("chirp transform expects one jump per unit period")
    o = offs[0]

    def edge_fn(j):
        e = SQRT_2PI * (j - 1 + o)
        return np.where(j == 0, 0.0, e)

    th = SQRT_2PI * y
    ratios = [r for r in (-np.exp(1j * th), -np.exp(-1j * th)) if abs(1 - r) > 1e-6]
    if not ratios:
        ratios = [-1.0]
    # the panel count (and work per panel) grows quickly, while the phase
    # x^2/2 loses absolute accuracy ~ x^2 eps; convergence of the averaging
    # slows as exp(i sqrt(2 pi) y) approaches -1, so the target is 1e-8
    b = budget.with_tol(rel=max(budget.target_tol.rel, 1e-8), abs=max(budget.target_tol.abs, 1e-10))
    r = integrate_panel_sequence(lambda x: f(x) * np.cos(x * y), edge_fn, b, ratios=ratios, start_panels=32, max_panels=512)
    return r * SQRT_2_OVER_PI


def verify_chirp_eigen(
    S: StepWave = SQUARE,
    parity: str = "cos",
    grid: Sequence[float] = (0.3, 1.0, 2.2),
    tol: Tolerance = Tolerance(1e-7, 1e-9),
    budget: IntegrationBudget = DEFAULT_BUDGET,
) -> CheckResult:
    """``F_c f = +-f`` on a grid for the step x chirp functions."""
    f = self_reciprocal_chirp(S, parity)
    checks = []
    for y in grid:
        lhs = chirp_cosine_transform(f, float(y), budget)
        rhs = f.eigenvalue * float(f(np.array([float(y)]))[0])
        checks.append(make_check(lhs, rhs, tol, {"y": float(y)}))
    return combine_checks(checks, {"wave": S.kind, "parity": parity, "grid": [float(g) for g in grid]})


def _plancherel_integral(a: float, budget: IntegrationBudget) -> ApproxComplex:
    h = lambda x: SQUARE(x) / np.cosh(a * x)
    return integrate_fresnel(h, math.pi, budget, breaks=SQUARE.lattice, envelope=lambda X: 2 * math.exp(-a * X))


def verify_plancherel_pair(alpha: float, tol: Tolerance = Tolerance(1e-9, 1e-12), budget: IntegrationBudget = DEFAULT_BUDGET) -> CheckResult:
    """Even: the two cosine-chirp integrals agree; odd: the sine-chirp ones cancel (``alpha beta = pi^2``)."""
    alpha = float(alpha)
    beta = math.pi**2 / alpha
    ia = _plancherel_integral(alpha, budget)
    ib = _plancherel_integral(beta, budget)
    sa, sb = math.sqrt(alpha), math.sqrt(beta)
    params = {"alpha": alpha, "beta": beta}
    even = make_check(ApproxComplex(ia.real, ia.err) * sa, ApproxComplex(ib.real, ib.err) * sb, tol, params)
    odd = make_check(ApproxComplex(ia.imag, ia.err) * sa, ApproxComplex(-ib.imag, ib.err) * sb, tol, params)
    return combine_checks([even, odd], params)
