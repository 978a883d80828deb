"""Foundational numerics: error-tracked values, summation, quadrature.

Everything here works in binary64 (complex128).  Integrands are always
called with a one-dimensional ``numpy`` array of abscissae and must return
an array of the same shape; that keeps the Gauss--Kronrod rule vectorized
over many panels at once.

The main entry points are

* :func:`sum_series` -- compensated summation with a windowed stopping rule,
* :func:`integrate_interval` / :func:`integrate_panels` -- adaptive
  Gauss--Kronrod (7/15) quadrature over a set of initial panels,
* :func:`integrate_real_line`, :func:`integrate_half_line`,
  :func:`integrate_half_line_step` -- infinite ranges with tail control,
* :func:`integrate_fresnel` -- ``int_0^inf h(x) exp(i g x^2) dx`` by lobe
  splitting and iterated averaging,
* :func:`euler_average`, :func:`richardson_limit` -- sequence acceleration,
* :func:`compare` -- tolerance-aware comparison of two approximations.
"""

from __future__ import annotations

import contextlib
import contextvars
import functools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

EPS = float(np.finfo(float).eps)

__all__ = [
    "ApproxComplex",
    "Tolerance",
    "IntegrationBudget",
    "SeriesResult",
    "Verdict",
    "CheckResult",
    "BreakLattice",
    "NumericalError",
    "BudgetExhausted",
    "ConvergenceFailure",
    "count_evals",
    "eval_counter",
    "counted_cache",
    "neumaier_sum",
    "sum_series",
    "sum_bilateral",
    "euler_average",
    "richardson_limit",
    "sum_oscillatory_power",
    "sum_blocks_richardson",
    "sum_blocks_oscillatory",
    "integrate_panels",
    "integrate_interval",
    "integrate_real_line",
    "integrate_half_line",
    "integrate_half_line_step",
    "integrate_panel_sequence",
    "integrate_fresnel",
    "compare",
    "make_check",
    "combine_checks",
]


# ---------------------------------------------------------------------------
# Errors and small value types
# ---------------------------------------------------------------------------


class NumericalError(ArithmeticError):
    """Base class for failures that must be reported, never hidden."""


class BudgetExhausted(NumericalError):
    """Raised when an evaluator would exceed its evaluation budget."""

    def __init__(self, message: str, partial: "ApproxComplex | None" = None):
        super().__init__(message)
        self.partial = partial


class ConvergenceFailure(NumericalError):
    """Raised when a tail bound or acceleration cannot meet the tolerance."""

    def __init__(self, message: str, partial: "ApproxComplex | None" = None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class ApproxComplex:
    """A complex number together with an absolute error estimate.

    Parameters
    ----------
    value : complex
        Best estimate.
    err : float
        Non-negative estimate of ``|value - exact|``.

    Notes
    -----
    Arithmetic propagates errors to first order and adds a rounding term,
    so that composed evaluators keep an honest (if slightly pessimistic)
    error.  Non-finite values are rejected at construction.
    """

    value: complex
    err: float = 0.0

    def __post_init__(self):
        v = complex(self.value)
        e = float(self.err)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise NumericalError(f"non-finite value {v!r}")
        if not math.isfinite(e) or e < 0:
            raise NumericalError(f"invalid error estimate {e!r}")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "err", e)

    # -- convenience ------------------------------------------------------
    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    def __abs__(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value

    @staticmethod
    def coerce(x) -> "ApproxComplex":
        if isinstance(x, ApproxComplex):
            return x
        return ApproxComplex(complex(x), 0.0)

    def _round(self, v: complex) -> float:
        return 2 * EPS * abs(v)

    def __add__(self, other):
        o = ApproxComplex.coerce(other)
        v = self.value + o.value
        return ApproxComplex(v, self.err + o.err + self._round(v))

    __radd__ = __add__

    def __neg__(self):
        return ApproxComplex(-self.value, self.err)

    def __sub__(self, other):
        return self + (-ApproxComplex.coerce(other))

    def __rsub__(self, other):
        return ApproxComplex.coerce(other) - self

    def __mul__(self, other):
        o = ApproxComplex.coerce(other)
        v = self.value * o.value
        e = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return ApproxComplex(v, e + self._round(v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ApproxComplex.coerce(other)
        if o.value == 0:
            raise NumericalError("division by zero")
        v = self.value / o.value
        den = abs(o.value)
        e = (self.err + abs(v) * o.err) / den
        return ApproxComplex(v, e + self._round(v))

    def __rtruediv__(self, other):
        return ApproxComplex.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise TypeError("only non-negative integer powers are supported")
        out = ApproxComplex(1.0)
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> "ApproxComplex":
        return ApproxComplex(self.value.conjugate(), self.err)

    def abs2(self) -> "ApproxComplex":
        """``|z|^2`` with propagated error."""
        v = abs(self.value) ** 2
        return ApproxComplex(v, 2 * abs(self.value) * self.err + self.err**2 + 2 * EPS * v)

    def exp(self) -> "ApproxComplex":
        v = complex(np.exp(self.value))
        return ApproxComplex(v, abs(v) * (math.expm1(self.err) if self.err < 700 else 1e300) + 2 * EPS * abs(v))

    def __repr__(self) -> str:
        return f"ApproxComplex({self.value!r} ± {self.err:.3g})"


@dataclass(frozen=True)
class Tolerance:
    """Mixed tolerance: pass iff ``|l-r| <= abs + rel * max(|l|, |r|)``."""

    rel: float = 1e-10
    abs: float = 0.0

    def __post_init__(self):
        if not self.rel > 0:
            raise ValueError("rel tolerance must be positive")
        if not self.abs >= 0:
            raise ValueError("abs tolerance must be non-negative")

    def target(self, scale: float) -> float:
        return self.abs + self.rel * abs(scale)


@dataclass(frozen=True)
class IntegrationBudget:
    """Resource limits and accuracy target for one evaluation."""

    max_evals: int = 4_000_000
    target_tol: Tolerance = field(default_factory=lambda: Tolerance(1e-12, 1e-15))
    max_subdivisions: int = 200_000

    def __post_init__(self):
        if self.max_evals <= 0 or self.max_subdivisions <= 0:
            raise ValueError("budget limits must be positive")

    def with_tol(self, rel: float | None = None, abs: float | None = None) -> "IntegrationBudget":
        t = Tolerance(
            self.target_tol.rel if rel is None else rel,
            self.target_tol.abs if abs is None else abs,
        )
        return IntegrationBudget(self.max_evals, t, self.max_subdivisions)


DEFAULT_BUDGET = IntegrationBudget()


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of :func:`sum_series`."""

    sum: ApproxComplex
    terms_used: int
    converged: bool


@dataclass(frozen=True)
class Verdict:
    """Pure-data comparison outcome (see :func:`compare`)."""

    abs_err: float
    rel_err: float
    passed: bool


@dataclass
class CheckResult:
    """Outcome of verifying one identity instance.

    ``lhs`` and ``rhs`` are the two independently evaluated sides.  The
    harness fills ``id``, ``status`` and ``ms``.
    """

    lhs: ApproxComplex
    rhs: ApproxComplex
    abs_err: float
    rel_err: float
    passed: bool
    params: dict = field(default_factory=dict)
    evals: int = 0
    id: str = ""
    status: str = "normal"
    ms: float | None = None
    note: str = ""


@dataclass(frozen=True)
class BreakLattice:
    """Arithmetic break lattice ``{offset + n*period : n >= 0}`` for each offset."""

    period: float
    offsets: tuple = (0.0,)

    def points(self, lo: float, hi: float) -> np.ndarray:
        pts = []
        for off in self.offsets:
            n0 = math.ceil((lo - off) / self.period)
            n1 = math.floor((hi - off) / self.period)
            if n1 >= n0:
                pts.append(off + self.period * np.arange(n0, n1 + 1))
        if not pts:
            return np.empty(0)
        p = np.unique(np.concatenate(pts))
        return p[(p > lo) & (p < hi)]


# ---------------------------------------------------------------------------
# Evaluation counting (context local, so concurrent use is safe)
# ---------------------------------------------------------------------------

_COUNTER: contextvars.ContextVar[list | None] = contextvars.ContextVar("_COUNTER", default=None)


def count_evals(n: int) -> None:
    """Add ``n`` function evaluations / series terms to the active counter."""
    c = _COUNTER.get()
    if c is not None:
        c[0] += int(n)


@contextlib.contextmanager
def eval_counter():
    """Context manager yielding a one-element list that accumulates counts."""
    box = [0]
    token = _COUNTER.set(box)
    try:
        yield box
    finally:
        _COUNTER.reset(token)


def counted_cache(maxsize: int | None = 128):
    """``functools.lru_cache`` that replays the evaluation count on a hit.

    A cached result reports the same number of evaluations as the call
    that computed it, so counts do not depend on what ran earlier in the
    process (and serial and multi-process runs agree).
    """

    def decorate(fn):
        @functools.lru_cache(maxsize=maxsize)
        def inner(*args, **kwargs):
            with eval_counter() as box:
                value = fn(*args, **kwargs)
            return value, box[0]

        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            value, n = inner(*args, **kwargs)
            count_evals(n)
            return value

        wrapper.cache_clear = inner.cache_clear
        return wrapper

    return decorate


# ---------------------------------------------------------------------------
# Summation
# ---------------------------------------------------------------------------


def neumaier_sum(values: Iterable[complex]) -> tuple[complex, float]:
    """Compensated (Neumaier) sum of real or complex values.

    Returns
    -------
    total : complex
    err : float
        A bound on the rounding error of the compensated sum.
    """
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
    if arr.size == 0:
        return 0j, 0.0
    re = math.fsum(arr.real.tolist())
    im = math.fsum(arr.imag.tolist()) if np.iscomplexobj(arr) else 0.0
    total = complex(re, im)
    return total, 2 * EPS * abs(total)


def _window_ok(terms: np.ndarray, partial: complex, tol: Tolerance, window: int) -> bool:
    if terms.size < window:
        return False
    thresh = (tol.rel * abs(partial) + tol.abs) / 16.0
    return bool(np.all(np.abs(terms[-window:]) <= thresh))


def sum_series(
    term: Callable,
    stop: Tolerance = Tolerance(1e-15, 0.0),
    cap: int = 1_000_000,
    *,
    start: int = 0,
    window: int = 8,
    chunk: int = 64,
    vectorized: bool = False,
    tail_bound: Callable[[int], float] | None = None,
) -> SeriesResult:
    """Sum ``term(n)`` for ``n = start, start+1, ...``.

    Parameters
    ----------
    term : callable
        Scalar function of an integer index, or (``vectorized=True``) a
        function accepting an integer array.
    stop : Tolerance
        The series stops once ``window`` consecutive terms satisfy
        ``|t| <= (stop.rel*|S| + stop.abs)/16``.
    cap : int
        Maximum number of terms.
    tail_bound : callable, optional
        ``tail_bound(N)`` bounds the remainder after ``N`` terms; used both
        as an alternative stopping test and as the error estimate.

    Returns
    -------
    SeriesResult
        ``converged`` is False if the cap was reached first; the partial
        sum is retained.
    """
    parts: list[np.ndarray] = []
    n = start
    used = 0
    partial = 0j
    last = np.empty(0)
    converged = False
    while used < cap:
        m = min(chunk, cap - used)
        idx = np.arange(n, n + m)
        if vectorized:
            vals = np.asarray(term(idx), dtype=complex)
        else:
            vals = np.array([term(int(i)) for i in idx], dtype=complex)
        count_evals(m)
        parts.append(vals)
        partial += vals.sum()
        n += m
        used += m
        last = np.concatenate([last[-window:], vals])
        # find the first index inside this chunk at which the window test holds
        if _window_ok(last, partial, stop, window):
            converged = True
            break
        if tail_bound is not None and tail_bound(used) <= (stop.rel * abs(partial) + stop.abs) / 16:
            converged = True
            break
        chunk = min(chunk * 2, 1 << 16)
    allv = np.concatenate(parts) if parts else np.zeros(0, complex)
    total, rerr = neumaier_sum(allv)
    if tail_bound is not None:
        terr = float(tail_bound(used))
    else:
        # window terms are all tiny; bound the remainder by a generous multiple
        terr = float(np.abs(allv[-window:]).sum()) if allv.size else 0.0
    return SeriesResult(ApproxComplex(total, rerr + terr), used, converged)


def sum_bilateral(
    term: Callable,
    stop: Tolerance = Tolerance(1e-15, 0.0),
    cap: int = 1_000_000,
    *,
    vectorized: bool = False,
    tail_bound: Callable[[int], float] | None = None,
) -> SeriesResult:
    """Symmetric sum over all integers, pairing ``n`` with ``-n``.

    ``tail_bound(N)`` (optional) bounds the two-sided remainder beyond
    ``|n| > N``.
    """
    if vectorized:
        t0 = complex(np.asarray(term(np.array([0])), dtype=complex)[0])

        def pair(idx):
            return np.asarray(term(idx), dtype=complex) + np.asarray(term(-idx), dtype=complex)

    else:
        t0 = complex(term(0))

        def pair(i):
            return complex(term(i)) + complex(term(-i))

    count_evals(1)
    res = sum_series(pair, stop, cap, start=1, vectorized=vectorized, tail_bound=tail_bound)
    total = res.sum + t0
    return SeriesResult(total, 2 * res.terms_used + 1, res.converged)


# ---------------------------------------------------------------------------
# Sequence acceleration
# ---------------------------------------------------------------------------


def euler_average(partials: Sequence[complex], ratios: Sequence[complex] = (-1.0,)) -> tuple[complex, float]:
    """Iterated weighted averaging of a sequence of partial sums.

    If ``S_N = L + z**N * A(N)`` with ``A`` slowly varying, the transform
    ``(S_{N+1} - z S_N) / (1 - z)`` removes the leading oscillation; with
    ``z = -1`` it is the classical average of neighbouring partial sums.
    Several ratios (for several superposed oscillations) are applied in
    rotation.

    Returns
    -------
    value, err : complex, float
        The best level's last entry and the difference to its neighbour.
    """
    t = np.asarray(partials, dtype=complex)
    if t.size < 3:
        raise ValueError("need at least three partial sums")
    best = t[-1]
    err = abs(t[-1] - t[-2])
    ratios = [complex(r) for r in ratios]
    level = 0
    worse = 0
    while t.size > 3:
        z = ratios[level % len(ratios)]
        t = (t[1:] - z * t[:-1]) / (1 - z)
        level += 1
        e = abs(t[-1] - t[-2])
        if e < err:
            best, err = t[-1], e
            worse = 0
        else:
            worse += 1
            if worse >= 3:
                break
    # rounding amplification floor
    return complex(best), float(err + 8 * EPS * abs(best))


def richardson_limit(partials: Sequence[complex], ns: Sequence[float], order: int = 1) -> tuple[complex, float]:
    """Richardson extrapolation assuming ``S(N) = L + c1/N^p + c2/N^(2p) + ...``.

    Parameters
    ----------
    partials : sequence
        ``S(N_j)`` for increasing ``N_j``.
    ns : sequence
        The ``N_j``.
    order : int
        Power ``p`` of the expansion variable ``1/N``.

    Returns
    -------
    value, err
        Extrapolated limit and the difference between the two most refined
        tableau entries.
    """
    s = [complex(v) for v in partials]
    h = [1.0 / float(n) for n in ns]
    m = len(s)
    if m < 2:
        raise ValueError("need at least two partial sums")
    table = [s]
    best, err = s[-1], abs(s[-1] - s[-2])
    for j in range(1, m):
        prev = table[-1]
        cur = []
        for i in range(len(prev) - 1):
            # Neville form: eliminates successive powers h^order, h^(2 order), ...
            r = (h[i] / h[i + j]) ** order
            cur.append((r * prev[i + 1] - prev[i]) / (r - 1))
        table.append(cur)
        if len(cur) >= 2:
            e = abs(cur[-1] - cur[-2])
            if e < err:
                best, err = cur[-1], e
        elif len(cur) == 1:
            e = abs(cur[-1] - prev[-1])
            if e < err:
                best, err = cur[-1], e
    return complex(best), float(err + 8 * EPS * abs(best))


def sum_oscillatory_power(
    coeff: Callable[[np.ndarray], np.ndarray],
    z: complex,
    *,
    n0: int = 0,
    tol: Tolerance = Tolerance(1e-13, 1e-15),
    start_terms: int = 256,
    max_terms: int = 1 << 20,
) -> ApproxComplex:
    """Sum ``sum_{n>=n0} coeff(n) z^n`` for ``|z| = 1``, ``z != 1``.

    ``coeff`` should be smooth in ``n`` with at most algebraic growth of
    its decay rate (e.g. ``~ n^-s`` with ``s > 0``).  Partial sums are
    accelerated by :func:`euler_average` with ratio ``z``; the number of
    terms is doubled until the estimate meets ``tol``.
    """
    z = complex(z)
    if abs(1 - z) < 1e-12:
        raise ValueError("ratio z must stay away from 1")
    n_terms = start_terms
    prev = None
    while True:
        idx = np.arange(n0, n0 + n_terms)
        c = np.asarray(coeff(idx), dtype=complex)
        count_evals(n_terms)
        terms = c * np.exp(1j * np.angle(z) * idx) * (abs(z) ** idx)
        partials = np.cumsum(terms)
        # accelerate on the final stretch, where A(N) is smoothest
        m = min(64, n_terms // 2)
        val, err = euler_average(partials[-m:], (z,))
        if prev is not None:
            err = max(err, 0.1 * abs(val - prev))
        scale = max(abs(val), float(np.abs(terms).max(initial=0.0)) * 1e-3)
        if err <= tol.target(scale):
            return ApproxComplex(val, err)
        if 2 * n_terms > max_terms:
            raise ConvergenceFailure(
                f"oscillatory series not converged (err {err:.2e})", ApproxComplex(val, err)
            )
        prev = val
        n_terms *= 2



def sum_blocks_richardson(
    term: Callable[[np.ndarray], np.ndarray],
    block: int,
    *,
    start: int = 1,
    tol: Tolerance = Tolerance(1e-13, 1e-16),
    base_blocks: int = 16,
    max_levels: int = 14,
) -> ApproxComplex:
    """Sum ``sum_{n>=start} term(n)`` through partial sums over whole blocks.

    The partial sums ``S(N)`` after ``N`` blocks of ``block`` consecutive
    terms are extrapolated in ``1/N`` (:func:`richardson_limit`) along
    ``N = base_blocks * 2^j``.  This suits character-weighted or
    periodically modulated series whose block sums are smooth in the
    block index, e.g. conditionally convergent ``sum chi(n)/n``.
    """
    if block < 1:
        raise ValueError("block must be positive")
    vals = np.zeros(0, complex)
    partials: list[complex] = []
    ns: list[int] = []
    prev = None
    N = base_blocks
    for level in range(max_levels + 1):
        need = N * block
        if vals.size < need:
            idx = np.arange(start + vals.size, start + need)
            vals = np.concatenate([vals, np.asarray(term(idx), dtype=complex)])
            count_evals(idx.size)
        s, _ = neumaier_sum(vals[:need])
        partials.append(s)
        ns.append(N)
        if len(partials) >= 3:
            m = min(len(partials), 8)
            val, err = richardson_limit(partials[-m:], ns[-m:], order=1)
            if prev is not None:
                err = max(err, abs(val - prev))
            if err <= tol.target(abs(val)):
                return ApproxComplex(val, err)
            prev = val
        N *= 2
    last = partials[-1]
    raise ConvergenceFailure(
        "block extrapolation did not converge",
        ApproxComplex(prev if prev is not None else last, abs(partials[-1] - partials[-2])),
    )


def sum_blocks_oscillatory(
    term: Callable[[np.ndarray], np.ndarray],
    block: int,
    ratios: Sequence[complex],
    *,
    start: int = 1,
    tol: Tolerance = Tolerance(1e-13, 1e-16),
    start_blocks: int = 256,
    max_blocks: int = 1 << 20,
) -> ApproxComplex:
    """Sum a series whose block partial sums oscillate with known ratios.

    If ``S(N) = L + sum_z z^N A_z(N)`` over the supplied ratios (``|z|=1``,
    ``z != 1``) with slowly varying ``A_z``, the block partial sums are
    accelerated by :func:`euler_average`; the number of blocks is doubled
    until successive estimates agree to ``tol``.
    """
    ratios = [complex(z) for z in ratios]
    if not ratios or any(abs(1 - z) < 1e-9 for z in ratios):
        raise ValueError("ratios must be non-empty and stay away from 1")
    vals = np.zeros(0, complex)
    nb = start_blocks
    prev = None
    while True:
        need = nb * block
        idx = np.arange(start + vals.size, start + need)
        if idx.size:
            vals = np.concatenate([vals, np.asarray(term(idx), dtype=complex)])
            count_evals(idx.size)
        partials = np.cumsum(vals[:need].reshape(nb, block).sum(axis=1))
        m = min(nb, 64)
        val, err = euler_average(partials[-m:], ratios)
        if prev is not None:
            err = max(err, abs(val - prev))
            if err <= tol.target(abs(val)):
                return ApproxComplex(val, err)
        if 2 * nb > max_blocks:
            raise ConvergenceFailure("oscillatory block sum did not converge", ApproxComplex(val, err))
        prev = val
        nb *= 2

# ---------------------------------------------------------------------------
# Gauss--Kronrod 7/15
# ---------------------------------------------------------------------------

_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# full symmetric node set (15) and the embedded Gauss weights on it
NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[:-1][::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[:-1][::-1]])
GAUSS_WEIGHTS = np.zeros(15)
for _i, _w in enumerate(_WG[:-1]):
    _node = 2 * _i + 1  # xgk[1], xgk[3], xgk[5]
    GAUSS_WEIGHTS[_node] = _w
    GAUSS_WEIGHTS[14 - _node] = _w
GAUSS_WEIGHTS[7] = _WG[-1]


def _call(f, x: np.ndarray) -> np.ndarray:
    y = np.asarray(f(x.ravel()))
    if y.shape != (x.size,):
        y = np.broadcast_to(y, (x.size,))
    count_evals(x.size)
    return y.reshape(x.shape)


def _gk15(f, a: np.ndarray, b: np.ndarray):
    """Apply the 7/15 pair on each panel ``[a_i, b_i]``."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    x = c[:, None] + h[:, None] * NODES[None, :]
    with np.errstate(all="ignore"):
        fx = _call(f, x)
    if not np.all(np.isfinite(fx)):
        raise NumericalError("integrand returned non-finite values")
    k = h * (fx @ KRONROD_WEIGHTS)
    g = h * (fx @ GAUSS_WEIGHTS)
    ah = np.abs(h)
    resabs = ah * (np.abs(fx) @ KRONROD_WEIGHTS)
    mean = fx @ KRONROD_WEIGHTS * 0.5
    resasc = ah * (np.abs(fx - mean[:, None]) @ KRONROD_WEIGHTS)
    err = np.abs(k - g)
    with np.errstate(all="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / np.where(resasc > 0, resasc, 1.0)) ** 1.5)
    err = np.where((resasc > 0) & (err > 0), scaled, err)
    floor = 50 * EPS * resabs
    err = np.maximum(err, floor)
    return k, err, floor


def integrate_panels(
    f: Callable[[np.ndarray], np.ndarray],
    edges: np.ndarray,
    budget: IntegrationBudget = DEFAULT_BUDGET,
    *,
    tol: Tolerance | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Adaptive quadrature over consecutive panels ``[edges[i], edges[i+1]]``.

    Every initial panel is refined by bisection until the global error
    estimate meets the tolerance.  Panels whose error exceeds their
    length-proportional share of the target are bisected, all in one
    vectorized batch per round.

    Returns
    -------
    values, errs : ndarray
        Integral and error estimate for each *initial* panel.
    """
    tol = tol or budget.target_tol
    edges = np.asarray(edges, dtype=float)
    if edges.ndim != 1 or edges.size < 2:
        raise ValueError("need at least two edges")
    if np.any(np.diff(edges) < 0):
        raise ValueError("edges must be non-decreasing")
    npan = edges.size - 1
    a = edges[:-1].copy()
    b = edges[1:].copy()
    origin = np.arange(npan)
    keep = b > a
    a, b, origin = a[keep], b[keep], origin[keep]
    out_v = np.zeros(npan, dtype=complex)
    out_e = np.zeros(npan)
    if a.size == 0:
        return out_v, out_e
    total_len = float(np.sum(b - a))
    vals, errs, floors = _gk15(f, a, b)
    evals = 15 * a.size
    nsub = a.size
    # frozen panels are done (converged or at the roundoff limit)
    done_v: list[np.ndarray] = []
    done_e: list[np.ndarray] = []
    done_o: list[np.ndarray] = []
    done_total = 0j
    done_err = 0.0
    while True:
        total = done_total + vals.sum()
        total_err = done_err + errs.sum()
        target = tol.target(abs(total))
        if total_err <= target or a.size == 0:
            break
        share = target * (b - a) / total_len
        width_ok = (b - a) > 64 * EPS * np.maximum(np.abs(a), np.abs(b)) + 1e-300
        split = (errs > share) & width_ok & (errs > 2 * floors)
        if not np.any(split):
            # nothing left that bisection can improve: accept
            break
        stay = ~split
        if np.any(stay):
            done_v.append(vals[stay])
            done_e.append(errs[stay])
            done_o.append(origin[stay])
            done_total += vals[stay].sum()
            done_err += float(errs[stay].sum())
        sa, sb, so = a[split], b[split], origin[split]
        mid = 0.5 * (sa + sb)
        na = np.concatenate([sa, mid])
        nb = np.concatenate([mid, sb])
        no = np.concatenate([so, so])
        evals += 15 * na.size
        nsub += na.size
        if evals > budget.max_evals or nsub > budget.max_subdivisions:
            partial = ApproxComplex(complex(total), float(total_err))
            raise BudgetExhausted(
                f"quadrature budget exhausted after {evals} evaluations "
                f"(err {total_err:.2e} > target {target:.2e})",
                partial,
            )
        a, b, origin = na, nb, no
        vals, errs, floors = _gk15(f, a, b)
    done_v.append(vals)
    done_e.append(errs)
    done_o.append(origin)
    v = np.concatenate(done_v)
    e = np.concatenate(done_e)
    o = np.concatenate(done_o)
    np.add.at(out_v, o, v)
    np.add.at(out_e, o, e)
    return out_v, out_e


def integrate_interval(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    budget: IntegrationBudget = DEFAULT_BUDGET,
    breakpoints: Iterable[float] = (),
    *,
    initial_panels: int = 1,
) -> ApproxComplex:
    """Adaptive integral of ``f`` over the finite interval ``[a, b]``.

    Breakpoints inside ``(a, b)`` become panel edges; integrands are only
    ever evaluated at interior nodes, so jump discontinuities there are
    harmless.
    """
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0
    pts = [p for p in breakpoints if a < p < b]
    edges = np.unique(np.concatenate([np.linspace(a, b, initial_panels + 1), pts]))
    v, e = integrate_panels(f, edges, budget)
    total, rerr = neumaier_sum(v)
    return ApproxComplex(sign * total, float(e.sum()) + rerr)


# ---------------------------------------------------------------------------
# Infinite ranges
# ---------------------------------------------------------------------------


def _march_extent(f, x0: float, direction: float, thresh: float, step: float, max_steps: int = 4000):
    """March outward from ``x0`` in chunks of ``step`` until the integrand is negligible.

    Returns the window edge and a bound on the integral beyond it.
    """
    probe = (np.arange(9) + 0.5) / 9.0  # interior points only
    prev_bound = math.inf
    small_run = 0
    x = x0
    for _ in range(max_steps):
        xs = x + direction * step * probe
        with np.errstate(all="ignore"):
            vals = np.abs(_call(f, xs))
        if not np.all(np.isfinite(vals)):
            raise NumericalError("integrand non-finite while probing the tail")
        bound = float(vals.max()) * step
        x = x + direction * step
        if bound <= thresh and bound <= prev_bound * 1.0000001:
            small_run += 1
        else:
            small_run = 0
        if small_run >= 3:
            r = bound / prev_bound if prev_bound > 0 else 0.0
            tail = bound * (r / (1 - r) if r < 0.9 else 10.0)
            return x, tail
        prev_bound = bound
    raise ConvergenceFailure("tail bound unachievable: integrand does not decay within the search range")


def _integration_scale(f, lo: float, hi: float) -> float:
    xs = np.linspace(lo, hi, 33)
    with np.errstate(all="ignore"):
        v = np.abs(_call(f, xs))
    v = v[np.isfinite(v)]
    return float(v.max(initial=0.0)) * (hi - lo)


def integrate_real_line(
    f: Callable[[np.ndarray], np.ndarray],
    budget: IntegrationBudget = DEFAULT_BUDGET,
    breakpoints: Iterable[float] = (),
    *,
    gaussian_decay: bool = False,
    tail_bound: Callable[[float], float] | None = None,
    center: float = 0.0,
    step: float = 1.0,
) -> ApproxComplex:
    """Integral of ``f`` over the whole real line.

    Parameters
    ----------
    gaussian_decay : bool
        Declare ``|f(x)| <= C exp(-x^2)``; the window is then
        ``X = sqrt(ln(1/abs_tol) + ln(1 + max|f e^{x^2}|))`` (iterated once).
    tail_bound : callable, optional
        ``tail_bound(X)`` bounds ``int_{|x|>X} |f|``.  Without either
        declaration the window is found by marching outward until the
        sampled envelope is negligible.
    center : float
        Where to start the outward march (near the bulk of the integrand).
    """
    tol = budget.target_tol
    scale = max(_integration_scale(f, center - 4 * step, center + 4 * step), 1e-300)
    abs_target = max(tol.abs, tol.rel * scale * 1e-2, 1e-300)
    if gaussian_decay:
        X = 6.0
        for _ in range(2):
            xs = np.linspace(-X, X, 257)
            with np.errstate(all="ignore"):
                g = np.abs(_call(f, xs)) * np.exp(xs * xs)
            gmax = float(np.nanmax(g))
            X = math.sqrt(math.log(1.0 / abs_target) + math.log1p(gmax))
        lo, hi = center - X, center + X
        tail = (1 + gmax) * math.sqrt(math.pi) * math.erfc(X)
    elif tail_bound is not None:
        X = 1.0
        while tail_bound(X) > abs_target:
            X *= 1.5
            if X > 1e8:
                raise ConvergenceFailure("tail bound unachievable for requested tolerance")
        lo, hi = center - X, center + X
        tail = float(tail_bound(X))
    else:
        hi, t_hi = _march_extent(f, center, +1.0, abs_target, step)
        lo, t_lo = _march_extent(f, center, -1.0, abs_target, step)
        tail = t_hi + t_lo
    n_init = max(8, int(math.ceil((hi - lo) / step)))
    r = integrate_interval(f, lo, hi, budget, breakpoints, initial_panels=n_init)
    return ApproxComplex(r.value, r.err + tail)


def integrate_half_line(
    f: Callable[[np.ndarray], np.ndarray],
    budget: IntegrationBudget = DEFAULT_BUDGET,
    breakpoints: Iterable[float] = (),
    *,
    start: float = 0.0,
    tail_bound: Callable[[float], float] | None = None,
    step: float = 1.0,
) -> ApproxComplex:
    """Integral of ``f`` over ``[start, inf)``.

    With ``tail_bound`` (for algebraically decaying integrands) the range
    is covered by geometrically growing panels until the bound is met;
    otherwise the extent is found by an envelope march.
    """
    tol = budget.target_tol
    scale = max(_integration_scale(f, start, start + 4 * step), 1e-300)
    abs_target = max(tol.abs, tol.rel * scale * 1e-2, 1e-300)
    if tail_bound is not None:
        edges = [start, start + step]
        while tail_bound(edges[-1] - start) > abs_target:
            edges.append(start + 2 * (edges[-1] - start))
            if len(edges) > 200:
                raise ConvergenceFailure("tail bound unachievable for requested tolerance")
        tail = float(tail_bound(edges[-1] - start))
        pts = [p for p in breakpoints if start < p < edges[-1]]
        e = np.unique(np.concatenate([np.array(edges), pts]))
        v, er = integrate_panels(f, e, budget)
        total, rerr = neumaier_sum(v)
        return ApproxComplex(total, float(er.sum()) + rerr + tail)
    hi, tail = _march_extent(f, start, +1.0, abs_target, step)
    n_init = max(4, int(math.ceil((hi - start) / step)))
    r = integrate_interval(f, start, hi, budget, breakpoints, initial_panels=n_init)
    return ApproxComplex(r.value, r.err + tail)


def integrate_half_line_step(
    f: Callable[[np.ndarray], np.ndarray],
    breaks: BreakLattice,
    budget: IntegrationBudget = DEFAULT_BUDGET,
    *,
    envelope: Callable[[float], float] | None = None,
    start: float = 0.0,
    batch: int = 16,
    max_panels: int = 100_000,
) -> ApproxComplex:
    """Integral over ``[start, inf)`` of an integrand with jumps on a lattice.

    The range is integrated panel by panel between consecutive lattice
    points, in batches, until ``envelope(X)`` (a bound on the remaining
    integral beyond ``X``) is below the tolerance.  Without an envelope,
    the sampled magnitude over the last batch is used to bound the tail.
    """
    tol = budget.target_tol
    total_parts: list[np.ndarray] = []
    err = 0.0
    lo = start
    total = 0j
    used = 0
    while True:
        hi = lo + batch * breaks.period
        pts = breaks.points(lo, hi)
        edges = np.unique(np.concatenate([[lo], pts, [hi]]))
        v, e = integrate_panels(f, edges, budget)
        total_parts.append(v)
        err += float(e.sum())
        total += v.sum()
        used += edges.size - 1
        target = tol.target(abs(total))
        if envelope is not None:
            tail = float(envelope(hi))
        else:
            probe = np.linspace(lo, hi, 8 * batch + 1)[1:]
            with np.errstate(all="ignore"):
                mag = np.abs(_call(f, probe))
            last = float(np.abs(v[-max(1, v.size // 4):]).sum())
            tail = max(float(mag[-batch:].max()) * breaks.period, last) * 4.0
        if tail <= target:
            allv = np.concatenate(total_parts)
            s, rerr = neumaier_sum(allv)
            return ApproxComplex(s, err + rerr + tail)
        if used > max_panels:
            raise ConvergenceFailure("envelope never satisfies the tolerance within budget")
        lo = hi
        batch *= 2


def integrate_panel_sequence(
    f: Callable[[np.ndarray], np.ndarray],
    edge_fn: Callable[[np.ndarray], np.ndarray],
    budget: IntegrationBudget = DEFAULT_BUDGET,
    *,
    ratios: Sequence[complex] | None = (-1.0,),
    envelope: Callable[[float], float] | None = None,
    extra_breaks: BreakLattice | None = None,
    start_panels: int = 32,
    max_panels: int = 1 << 14,
) -> ApproxComplex:
    """Integrate over consecutive panels ``[e_j, e_{j+1}]`` covering ``[e_0, inf)``.

    ``edge_fn(j)`` gives the panel edges.  Panel integrals are computed
    adaptively; their partial sums are either summed plainly (once
    ``envelope(e_J)``, a bound on the remaining integral, is small) or
    accelerated with :func:`euler_average` using the supplied ``ratios``
    of the oscillating remainder.
    """
    tol = budget.target_tol
    npan = start_panels
    prev = None
    while True:
        j = np.arange(npan + 1)
        edges = np.asarray(edge_fn(j), dtype=float)
        if extra_breaks is not None:
            pts = extra_breaks.points(edges[0], edges[-1])
            full = np.unique(np.concatenate([edges, pts]))
            owner = np.searchsorted(edges, full[:-1], side="right") - 1
            v, e = integrate_panels(f, full, budget)
            pv = np.zeros(npan, complex)
            pe = np.zeros(npan)
            np.add.at(pv, owner, v)
            np.add.at(pe, owner, e)
        else:
            pv, pe = integrate_panels(f, edges, budget)
        partials = np.cumsum(pv)
        qerr = float(pe.sum())
        target = tol.target(abs(partials[-1]))
        if envelope is not None:
            tail = float(envelope(edges[-1]))
            if tail <= 0.5 * target:
                s, rerr = neumaier_sum(pv)
                return ApproxComplex(s, qerr + rerr + tail)
        if ratios:
            m = min(npan, 48)
            val, aerr = euler_average(partials[-m:], ratios)
            if prev is not None:
                aerr = max(aerr, 0.1 * abs(val - prev))
            if aerr + qerr <= target:
                return ApproxComplex(val, aerr + qerr)
            prev = val
        if 2 * npan > max_panels:
            best = prev if prev is not None else partials[-1]
            raise ConvergenceFailure("panel sequence did not converge", ApproxComplex(best, abs(partials[-1] - partials[-2])))
        npan *= 2


def integrate_fresnel(
    h: Callable[[np.ndarray], np.ndarray] | None,
    gamma: float,
    budget: IntegrationBudget = DEFAULT_BUDGET,
    *,
    breaks: BreakLattice | None = None,
    envelope: Callable[[float], float] | None = None,
    accelerate: bool | None = None,
) -> ApproxComplex:
    """``int_0^inf h(x) exp(i gamma x^2) dx`` by lobe splitting.

    The half line is split at ``x_j = sqrt(j pi / |gamma|)``, where the
    phase advances by ``pi``; lobe contributions then alternate in sign.
    Each lobe (further split at ``h``'s break lattice, if any) is
    integrated adaptively.

    Parameters
    ----------
    h : callable or None
        Amplitude; ``None`` means ``h = 1``.
    envelope : callable, optional
        ``envelope(X)`` bounds ``sup_{x >= X} |h(x)|``.  When the
        oscillatory tail ``envelope(X)/(|gamma| X)`` falls below the
        tolerance, lobes are summed plainly.
    accelerate : bool, optional
        Force (True) or forbid (False) iterated averaging of the lobe sums.
        By default it is used for smooth ``h`` (no break lattice).

    Notes
    -----
    Acceleration relies on the lobe sums behaving like ``(-1)^j A(j)`` with
    smooth ``A``; for ``h`` with jumps, a decaying envelope is required.
    """
    if gamma == 0:
        raise ValueError("gamma must be non-zero")
    g = float(gamma)
    w = math.pi / abs(g)
    if h is None:
        def amp(x):
            return np.ones_like(x)
    else:
        amp = h

    def integrand(x):
        return amp(x) * np.exp(1j * g * x * x)

    def edge_fn(j):
        return np.sqrt(j * w)

    if accelerate is None:
        accelerate = breaks is None
    if envelope is None and not accelerate:
        raise ValueError("an envelope is required when lobe acceleration is disabled")
    env = None
    if envelope is not None:
        def env(X):
            if X <= 0:
                return math.inf
            return float(envelope(X)) / (abs(g) * X) * 2.0

    return integrate_panel_sequence(
        integrand,
        edge_fn,
        budget,
        ratios=(-1.0,) if accelerate else None,
        envelope=env,
        extra_breaks=breaks,
    )


# ---------------------------------------------------------------------------
# Comparison
# ---------------------------------------------------------------------------


def compare(lhs, rhs, tol: Tolerance) -> Verdict:
    """Compare two approximations under a mixed tolerance (pure data)."""
    l = ApproxComplex.coerce(lhs).value
    r = ApproxComplex.coerce(rhs).value
    d = abs(l - r)
    scale = max(abs(l), abs(r))
    rel = d / scale if scale > 0 else 0.0
    return Verdict(d, rel, bool(d <= tol.abs + tol.rel * scale))


def combine_checks(checks: Sequence[CheckResult], params: dict | None = None) -> CheckResult:
    """Aggregate several checks: passes iff all pass; reports the worst one."""
    worst = max(checks, key=lambda c: (not c.passed, c.rel_err))
    return CheckResult(
        worst.lhs,
        worst.rhs,
        worst.abs_err,
        worst.rel_err,
        all(c.passed for c in checks),
        dict(params if params is not None else worst.params),
        max(c.evals for c in checks),
        note="; ".join(f"{i}:rel={c.rel_err:.2e}" for i, c in enumerate(checks)),
    )


def make_check(lhs, rhs, tol: Tolerance, params: dict | None = None, note: str = "") -> CheckResult:
    """Build a :class:`CheckResult` from two sides and a tolerance."""
    l = ApproxComplex.coerce(lhs)
    r = ApproxComplex.coerce(rhs)
    v = compare(l, r, tol)
    c = _COUNTER.get()
    return CheckResult(l, r, v.abs_err, v.rel_err, v.passed, dict(params or {}), c[0] if c else 0, note=note)
