"""q-series primitives.

Finite and infinite q-Pochhammer symbols ``(a; q)_n``, theta-type
bilateral sums, Appell--Lerch-type bilateral series and the complete
elliptic integrals ``K`` and ``E`` (via the arithmetic--geometric mean).

Real powers of a complex ``q`` use the principal logarithm,
``q**x = exp(x * log q)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .numkernel import (
    EPS,
    ApproxComplex,
    ConvergenceFailure,
    NumericalError,
    Tolerance,
    count_evals,
    neumaier_sum,
    sum_bilateral,
)

__all__ = [
    "QModulus",
    "QProductSpec",
    "AppellLerchSpec",
    "INF",
    "qpow",
    "q_pochhammer",
    "multi_q_pochhammer",
    "log_qpoch",
    "qpoch_array",
    "appell_lerch_sum",
    "theta_sum",
    "elliptic_K",
    "elliptic_E",
]

INF = None  #: marker for an infinite product length
_U = 2.0**-53


@dataclass(frozen=True)
class QModulus:
    """Nome ``q`` with ``|q| < 1``."""

    q: complex

    def __post_init__(self):
        q = complex(self.q)
        if not abs(q) < 1:
            raise ValueError(f"|q| must be < 1, got {abs(q)}")
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class QProductSpec:
    """Parameters of ``(a; q)_n``; ``n=None`` means the infinite product."""

    a: complex
    q: QModulus
    n: int | None = INF

    def __post_init__(self):
        if not isinstance(self.q, QModulus):
            object.__setattr__(self, "q", QModulus(self.q))
        if self.n is not None and (int(self.n) != self.n or self.n < 0):
            raise ValueError("n must be a non-negative integer or INF")


@dataclass(frozen=True)
class AppellLerchSpec:
    """Parameters of ``sum_n b^n q^{n^2/2} / (1 + a q^{n-1/2})``."""

    a: complex
    b: complex
    q: QModulus

    def __post_init__(self):
        if not isinstance(self.q, QModulus):
            object.__setattr__(self, "q", QModulus(self.q))


def qpow(q: complex, x):
    """``q**x`` via the principal logarithm (``x`` real, scalar or array)."""
    q = complex(q)
    if q == 0:
        return np.where(np.asarray(x) == 0, 1.0, 0.0)
    return np.exp(np.asarray(x) * np.log(q))


def _truncation(amax: float, aq: float) -> int:
    """Smallest N with ``amax * aq**N < 2^-53``."""
    if amax == 0 or aq == 0:
        return 1
    if amax < _U:
        return 1
    return max(1, int(math.ceil(math.log(_U / amax) / math.log(aq))) + 1)


def q_pochhammer(spec: QProductSpec) -> ApproxComplex:
    """``(a; q)_n`` or ``(a; q)_inf``.

    The infinite product is truncated at the first ``N`` with
    ``|a| |q|^N < 2^-53``; the neglected factors change the result by a
    relative amount at most ``exp(sum_{j>=N} |a||q|^j) - 1``, which is
    added to ``err`` together with a rounding bound.
    """
    a = complex(spec.a)
    q = spec.q.q
    if spec.n is not None:
        n = int(spec.n)
        if n == 0:
            return ApproxComplex(1.0)
        f = 1.0 - a * q ** np.arange(n)
        count_evals(n)
        v = complex(np.prod(f))
        return ApproxComplex(v, 2 * n * EPS * abs(v))
    if a == 0:
        return ApproxComplex(1.0)
    aq = abs(q)
    N = _truncation(abs(a), aq)
    f = 1.0 - a * q ** np.arange(N)
    count_evals(N)
    v = complex(np.prod(f))
    tail = abs(a) * aq**N / (1.0 - aq)
    err = abs(v) * (math.expm1(tail) + 2 * N * EPS)
    return ApproxComplex(v, err)


def multi_q_pochhammer(specs: Sequence[QProductSpec]) -> ApproxComplex:
    """Product of several symbols sharing the same ``q``."""
    out = ApproxComplex(1.0)
    if not specs:
        return out
    q0 = specs[0].q.q
    for s in specs:
        if s.q.q != q0:
            raise ValueError("all symbols must share the same q")
        out = out * q_pochhammer(s)
    return out


def log_qpoch(z, q: float | complex) -> np.ndarray:
    """Vectorized ``log (z; q)_inf`` (sum of principal logs of the factors).

    Intended for integrands: large ``|z|`` does not overflow since only
    logarithms are accumulated.  The imaginary part is defined modulo
    ``2 pi``, which is irrelevant after exponentiation.
    """
    z = np.asarray(z)
    q = complex(q)
    if q.imag == 0:
        q = q.real
    aq = abs(q)
    zmax = float(np.max(np.abs(z))) if z.size else 0.0
    N = _truncation(zmax, aq) if zmax > 0 else 1
    j = np.arange(N)
    qj = np.asarray(q) ** j
    count_evals(z.size * N)
    with np.errstate(divide="ignore", invalid="ignore"):
        if np.iscomplexobj(z) or isinstance(q, complex):
            terms = np.log(1.0 - z[..., None].astype(complex) * qj)
        else:
            w = 1.0 - z[..., None] * qj
            neg = np.count_nonzero(w < 0, axis=-1) % 2
            return np.log(np.abs(w)).sum(axis=-1) + 1j * np.pi * neg
    return terms.sum(axis=-1)


def qpoch_array(z, q) -> np.ndarray:
    """Vectorized ``(z; q)_inf`` computed through :func:`log_qpoch`."""
    return np.exp(log_qpoch(z, q))


def appell_lerch_sum(spec: AppellLerchSpec, tol: Tolerance = Tolerance(1e-16, 0.0)) -> ApproxComplex:
    """``sum_{n in Z} b^n q^{n^2/2} / (1 + a q^{n-1/2})``, summed symmetrically."""
    a, b, q = complex(spec.a), complex(spec.b), spec.q.q
    if b == 0:
        den = 1 + a * complex(qpow(q, -0.5))
        if abs(den) < 1e-14:
            raise NumericalError("pole on the summation lattice")
        return ApproxComplex(1.0 / den, 2 * EPS / abs(den))
    logq = np.log(q)
    logb = np.log(b)
    loga = np.log(a) if a != 0 else -np.inf

    def term(n):
        n = np.asarray(n, dtype=float)
        # L = log(a q^{n-1/2}); divide through by the dominant part of the
        # denominator so that neither numerator nor denominator overflows
        L = (n - 0.5) * logq + loga
        big = L.real > 0
        Ls = np.where(big, -L, L)
        den = 1.0 + np.exp(Ls)
        if np.any(np.abs(den) < 1e-14):
            raise NumericalError("pole on the summation lattice")
        num = n * logb + 0.5 * n * n * logq - np.where(big, L, 0.0)
        return np.exp(num) / den

    res = sum_bilateral(term, tol, cap=100_000, vectorized=True)
    if not res.converged:
        raise ConvergenceFailure("Appell-Lerch sum did not converge", res.sum)
    return res.sum


def theta_sum(
    gamma: float,
    weight: Callable[[np.ndarray], np.ndarray],
    *,
    cap: int = 1_000_000,
    tail_bound: Callable[[int], float] | None = None,
    tol: Tolerance = Tolerance(1e-16, 0.0),
) -> ApproxComplex:
    """``sum_{n in Z} weight(n) exp(pi i gamma n^2)``, summed symmetrically.

    ``weight`` is vectorized over integer arrays.  For slowly decaying
    weights supply ``tail_bound(N)`` bounding the two-sided remainder past
    ``|n| = N``; otherwise the windowed stopping rule applies.
    """
    g = float(gamma)

    def term(n):
        n = np.asarray(n)
        # reduce the phase exactly for integer n: gamma*n^2 taken mod 2
        ph = np.mod(g * (n.astype(float) ** 2), 2.0)
        return np.asarray(weight(n), dtype=complex) * np.exp(1j * np.pi * ph)

    res = sum_bilateral(term, tol, cap=cap, vectorized=True, tail_bound=tail_bound)
    if not res.converged and tail_bound is None:
        raise ConvergenceFailure("theta sum did not converge within the cap", res.sum)
    return res.sum


def _agm(a: float, b: float):
    """AGM of ``a, b`` with the sum ``sum 2^(j-1) c_j^2`` needed for ``E``."""
    s = 0.0
    c2 = a * a - b * b  # c_0^2
    s += 0.5 * c2
    p = 1.0
    for _ in range(64):
        if abs(a - b) <= 4 * EPS * a:
            break
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        p *= 2
        s += 0.5 * p * c * c
    count_evals(1)
    return a, s


def elliptic_K(k: float) -> ApproxComplex:
    """Complete elliptic integral of the first kind ``K(k)`` (modulus ``k``)."""
    k = float(k)
    if not 0 <= k < 1:
        raise ValueError("K(k) requires 0 <= k < 1")
    kp = math.sqrt((1 - k) * (1 + k))
    m, _ = _agm(1.0, kp)
    v = math.pi / (2 * m)
    return ApproxComplex(v, 8 * EPS * v)


def elliptic_E(k: float) -> ApproxComplex:
    """Complete elliptic integral of the second kind ``E(k)``."""
    k = float(k)
    if not 0 <= k <= 1:
        raise ValueError("E(k) requires 0 <= k <= 1")
    if k == 1:
        return ApproxComplex(1.0)
    kp = math.sqrt((1 - k) * (1 + k))
    m, s = _agm(1.0, kp)
    K = math.pi / (2 * m)
    v = K * (1 - s)
    return ApproxComplex(v, 16 * EPS * max(v, K))
