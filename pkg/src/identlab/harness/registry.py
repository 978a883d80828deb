"""The identity registry: every checkable identity bound to its evaluators.

Each :class:`IdentityDescriptor` names one identity, declares the domain
of its parameters and their defaults, and binds an evaluator
``evaluator(tol=..., budget=..., **params) -> CheckResult``.  Constraint
parameters (``beta`` from ``alpha`` and the like) are solved inside the
owning module, never here.

Statuses
--------
``normal``
    The identity is expected to hold; a failure is a real failure.
``audit``
    A form known (or suspected) to be misstated; it is evaluated and
    reported but never fails the suite.
``control``
    A deliberately false instance (negative control).  It must fail;
    controls run on request and are excluded from ``verify_all`` by default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import charsum as cs
from .. import gaussfusion as gf
from .. import hyperfourier as hf
from .. import prodilog as pd
from .. import quadseries as qs
from ..numkernel import CheckResult, Tolerance, combine_checks, make_check
from .domain import Choice, ComplexDisc, DomainError, Int, Real

__all__ = ["IdentityDescriptor", "REGISTRY", "list_identities", "get_identity", "validate_registry", "STATUSES"]

STATUSES = ("normal", "audit", "control")
ANY = Real()
POS = Real(0.0)


@dataclass(frozen=True)
class IdentityDescriptor:
    """One registered identity.

    Attributes
    ----------
    id : str
        Stable identifier, ``<module prefix>-<name>``.
    anchor : str
        Short description of the identity.
    module : str
        Owning module.
    evaluator : callable
        ``evaluator(tol=..., budget=..., **params) -> CheckResult``.
    defaults : dict
        Default parameters (validated against ``domain`` at import).
    domain : dict
        Parameter name -> domain object with ``coerce(name, value)``.
    tol : Tolerance
        Default tolerance.
    status : str
        ``normal``, ``audit`` or ``control``.
    cost_hint : str
        ``fast`` (< 0.1 s), ``medium`` (< 2 s) or ``slow``.
    sampler : callable, optional
        ``sampler(rng) -> params`` for randomized sweeps.
    constraint : callable, optional
        ``constraint(params) -> message or None``; cross-parameter checks.
    """

    id: str
    anchor: str
    module: str
    evaluator: Callable[..., CheckResult]
    defaults: dict
    domain: dict
    tol: Tolerance
    status: str = "normal"
    cost_hint: str = "fast"
    sampler: Callable[[np.random.Generator], dict] | None = field(default=None, compare=False)
    constraint: Callable[[dict], str | None] | None = field(default=None, compare=False)

    def resolve(self, params: dict | None = None) -> dict:
        """Merge ``params`` over the defaults and validate every value."""
        merged = dict(self.defaults)
        for k, v in (params or {}).items():
            if k not in self.domain:
                raise DomainError(f"{self.id}: unknown parameter {k!r} (expected {', '.join(self.domain) or 'none'})")
            merged[k] = v
        out = {k: self.domain[k].coerce(k, v) for k, v in merged.items()}
        if self.constraint is not None:
            msg = self.constraint(out)
            if msg:
                raise DomainError(f"{self.id}: {msg}")
        return out


# ---------------------------------------------------------------------------
# Evaluator adapters
# ---------------------------------------------------------------------------

_PERIODIC = {
    "const": lambda: qs.PeriodicFunctionSpec.constant(1.0),
    "cos": lambda: qs.PeriodicFunctionSpec.cosine(1),
    "cos2": lambda: qs.PeriodicFunctionSpec.cosine(2),
    "bernoulli2": qs.PeriodicFunctionSpec.bernoulli_quadratic,
}
_BAND = {"sinc2": cs.sinc2_spec, "sinc_band": cs.sinc_band_spec}
_PAIRS = {"sech": cs.sech_pair, "cosh3": cs.cosh3_pair, "gaussian": cs.gaussian_pair}
_L1_EXACT = {"chi4": math.pi / 4, "chi3": math.pi / (3 * math.sqrt(3)), "chi6": math.pi / (2 * math.sqrt(3))}


def _fusion_params(p: dict) -> gf.FusionParams:
    return gf.FusionParams(p["a"], p["b"], p["c"], p["d"], p["k"], p["m"])


def _fusion_sampler(rng: np.random.Generator) -> dict:
    fp = gf.random_fusion_params(rng)
    return {"a": fp.a, "b": fp.b, "c": fp.c, "d": fp.d, "k": fp.k, "m": fp.m}


def _l1_check(label, tol, budget):
    return make_check(cs.L1(cs.character(label)), _L1_EXACT[label], tol, {"chi": label})


def _step(label):
    prod = math.pi / 2 if label == "chi4" else 2 * math.pi / 3

    def run(f, alpha, tol, budget):
        return cs.step_transform_sum(label, _PAIRS[f](), alpha, prod / alpha, tol, budget)

    return run


def _eigen_poly(kind):
    def run(u0, u1, u2, tol, budget):
        f = gf.eigenfunction_candidate({0: u0, 1: u1, 2: u2}, kind)
        return gf.verify_cosine_eigen(f, f.eigenvalue, tol=tol, budget=budget)

    return run


def _gd_classical(alpha, tol, budget):
    y = min(alpha, 1.0)
    checks = [
        make_check(pd.gd_p(2, alpha), 2 * math.atan(math.tanh(alpha / 2)), tol, {"alpha": alpha}),
        make_check(pd.cosh_p(2, alpha), math.cosh(alpha), tol),
        make_check(pd.sin_p(2, y), math.sin(y), tol),
        make_check(pd.pi_p(2), math.pi, tol),
    ]
    return combine_checks(checks, {"alpha": alpha})


def _d(**kw):
    return kw


def _register() -> list[IdentityDescriptor]:
    R: list[IdentityDescriptor] = []

    def add(id, anchor, module, evaluator, defaults, domain, tol, status="normal", cost="fast", sampler=None, constraint=None):
        R.append(IdentityDescriptor(id, anchor, module, evaluator, defaults, domain, tol, status, cost, sampler, constraint))

    # -- quadseries --------------------------------------------------------
    Q = "quadseries"
    add("QS-GAUSS", "the value of the Gauss sum: the normalized quadratic sum over an even modulus equals one", Q,
        lambda a, tol, budget: qs.verify_gauss_sum(a, tol),
        _d(a=6), _d(a=Int(2, 10**6, even=True)), Tolerance(1e-12, 1e-12))
    add("QS-REDUCTION", "quadratic-phase series of a periodic function reduced to a finite sum (general modulus)", Q,
        lambda f, a, tol, budget: qs.verify_reduction(_PERIODIC[f](), a, False, tol),
        _d(f="cos", a=3), _d(f=Choice(tuple(_PERIODIC)), a=Int(1, 4096)), Tolerance(1e-6, 1e-12), cost="medium")
    add("QS-REDUCTION-EVEN", "finite-sum reduction, even-modulus branch", Q,
        lambda f, a, tol, budget: qs.verify_reduction(_PERIODIC[f](), a, True, tol),
        _d(f="bernoulli2", a=4), _d(f=Choice(tuple(_PERIODIC)), a=Int(2, 4096, even=True)), Tolerance(1e-6, 1e-12), cost="medium")
    add("QS-INVERSE-SQUARE", "sum of exp(pi i n^2/a)/n^2 in closed finite form", Q,
        lambda a, tol, budget: qs.verify_inverse_square(a, tol=tol),
        _d(a=4), _d(a=Int(2, 4096, even=True)), Tolerance(1e-5, 1e-12), cost="medium")
    add("QS-DECOUPLING", "Fresnel integral of f(ax) g(bx) factorizes when ab is an integer", Q,
        lambda f, g, alpha, beta, tol, budget: qs.verify_decoupling(_PERIODIC[f](), _PERIODIC[g](), alpha, beta, tol, budget),
        _d(f="cos", g="cos", alpha=1.0, beta=2.0),
        _d(f=Choice(("const", "cos", "cos2")), g=Choice(("const", "cos", "cos2")), alpha=POS, beta=POS),
        Tolerance(1e-9, 1e-12), cost="medium",
        constraint=lambda p: None if abs(p["alpha"] * p["beta"] - round(p["alpha"] * p["beta"])) <= 1e-12 else "alpha*beta must be an integer")
    add("QS-DECOUPLING-BROKEN", "decoupling evaluated at ab = 1/2, where it does not hold", Q,
        lambda f, g, alpha, beta, tol, budget: qs.verify_decoupling(_PERIODIC[f](), _PERIODIC[g](), alpha, beta, tol, budget, require_integer=False),
        _d(f="cos", g="cos", alpha=1.0, beta=0.5),
        _d(f=Choice(("cos", "cos2")), g=Choice(("cos", "cos2")), alpha=POS, beta=POS),
        Tolerance(1e-9, 1e-12), status="control", cost="medium")
    add("QS-1716", "squared modulus of sum exp(i g n^2)/n! as a binomial-type series", Q,
        lambda gamma, tol, budget: qs.verify_1716(gamma, tol),
        _d(gamma=0.7), _d(gamma=Real(-100.0, 100.0)), Tolerance(1e-12, 1e-14),
        sampler=lambda rng: {"gamma": float(rng.uniform(0, math.pi))})
    add("QS-OWEN-DISCRETE", "discrete modulus identity with fractional parts, as written", Q,
        lambda gamma, p, tol, budget: qs.verify_modulus_identity_discrete(gamma, p, tol),
        _d(gamma=1 / 3, p=1.0), _d(gamma=Real(0.0, 1.0), p=POS), Tolerance(1e-6, 1e-12), status="audit", cost="medium")
    add("QS-OWEN-CONTINUOUS", "continuous modulus identity |int e^{ix^2}/(x^2+a^2)|^2", Q,
        lambda alpha, tol, budget: qs.verify_modulus_identity_continuous(alpha, tol, budget),
        _d(alpha=1.0), _d(alpha=Real(0.05, 20.0)), Tolerance(1e-9, 1e-12), cost="medium")
    add("QS-ELLIPTIC", "theta-type series against q-products (ab = 1)", Q,
        lambda gamma, alpha, tol, budget: qs.verify_elliptic_identity(gamma, alpha, tol),
        _d(gamma=0.5, alpha=1.0), _d(gamma=Real(0.0, 1.0), alpha=Real(0.2, 5.0)), Tolerance(1e-8, 1e-12))
    add("QS-MORDELL", "Mordell-type integral against a squared Fresnel modulus", Q,
        lambda gamma, tol, budget: qs.verify_mordell_relation(gamma, tol, budget),
        _d(gamma=math.pi), _d(gamma=Real(0.2, 20.0)), Tolerance(1e-9, 1e-12), cost="medium")

    # -- gaussfusion -------------------------------------------------------
    G = "gaussfusion"
    for kind in ("real", "imag"):
        add(f"FG-EXP-{kind.upper()}", f"Fourier-Gauss transform of an exponential ({kind} exponent)", G,
            lambda k, n, m, tol, budget, kind=kind: gf.verify_fg_exponential(kind, k, n, m, tol, budget),
            _d(k=1.0, n=0.5, m=0.3), _d(k=Real(0.1, 5.0), n=Real(-3.0, 3.0), m=Real(-5.0, 5.0)), Tolerance(1e-10, 1e-13))
    add("FG-PHI-PSI", "complementary phi/psi pair under the Fourier-Gauss transform", G,
        lambda a, b, k, m, tol, budget: gf.verify_phi_psi_roundtrip(gf.PhiPsiPair.askey(a, b, k), m, tol, budget),
        _d(a=0.3, b=0.2, k=1.0, m=0.4), _d(a=ComplexDisc(1.0), b=ComplexDisc(1.0), k=Real(0.5, 3.0), m=Real(-3.0, 3.0)),
        Tolerance(1e-9, 1e-13), cost="medium")
    fdom = _d(a=ComplexDisc(1.0), b=ComplexDisc(1.0), c=ComplexDisc(1.0), d=ComplexDisc(1.0), k=Real(0.5, 3.0), m=Real(-3.0, 3.0))
    fdef = _d(a=0.3, b=0.2, c=-0.25, d=0.1 + 0.2j, k=1.1, m=0.3)
    add("FG-BETA", "Askey q-beta integrals on the real line", G,
        lambda tol, budget, **p: gf.verify_beta_integrals(_fusion_params(p), tol, budget),
        fdef, fdom, Tolerance(1e-7, 1e-13), cost="medium", sampler=_fusion_sampler)
    add("FG-FUSION", "fused q-integral of a Fourier-Gauss image", G,
        lambda tol, budget, **p: gf.verify_fusion(_fusion_params(p), tol, budget),
        fdef, fdom, Tolerance(1e-7, 1e-13), cost="medium", sampler=_fusion_sampler)
    add("FG-EIGEN-QPRODUCT", "q-product fixed point of the cosine transform", G,
        lambda a, tol, budget: gf.verify_cosine_eigen(gf.qproduct_eigenfunction(a), 1.0, tol=tol, budget=budget),
        _d(a=0.3), _d(a=Real(-0.9, 0.9)), Tolerance(1e-6, 1e-300), cost="medium")
    for kind in ("even", "odd"):
        add(f"FG-EIGEN-{kind.upper()}", f"{kind} cosine-transform eigenfunction built from a finite sequence", G,
            _eigen_poly(kind), _d(u0=1.0, u1=0.5, u2=-0.25), _d(u0=ANY, u1=ANY, u2=ANY), Tolerance(1e-6, 1e-300), cost="medium")
    aldom = _d(alpha=Real(-2.0, 2.0), beta=Real(-2.0, 2.0), k=Real(0.5, 3.0))
    alcon = lambda p: None if p["alpha"] + p["beta"] >= 0 else "registered checks need alpha+beta >= 0"
    add("FG-AL", "Appell-Lerch evaluation of a q-product integral, as written", G,
        lambda alpha, beta, k, tol, budget: gf.verify_al(alpha, beta, k, "printed", tol, budget),
        _d(alpha=0.15, beta=-0.05, k=1.3), aldom, Tolerance(1e-6, 1e-13), status="audit", cost="medium", constraint=alcon)
    add("FG-AL-CORRECTED", "Appell-Lerch evaluation with the sqrt(pi a/b) prefactor", G,
        lambda alpha, beta, k, tol, budget: gf.verify_al(alpha, beta, k, "corrected", tol, budget),
        _d(alpha=0.15, beta=-0.05, k=1.3), aldom, Tolerance(1e-6, 1e-13), cost="medium", constraint=alcon)
    add("FG-I-SYMMETRY", "I(alpha, beta, k) = I(beta, alpha, k)", G,
        lambda alpha, beta, k, tol, budget: gf.verify_I_symmetry(alpha, beta, k, tol, budget),
        _d(alpha=0.2, beta=0.1, k=1.1), aldom, Tolerance(1e-9, 1e-13), cost="medium")
    add("FG-I-MODULAR", "I(0, 0, k) under k -> pi/k", G,
        lambda k, tol, budget: gf.verify_I_modular(k, tol, budget),
        _d(k=1.1), _d(k=Real(0.5, 3.0)), Tolerance(1e-9, 1e-13), cost="medium")

    # -- charsum -----------------------------------------------------------
    C = "charsum"
    chis = Choice(("chi4", "chi3", "chi6"))
    add("CH-L1", "L(1, chi) for the odd characters mod 3, 4, 6", C, _l1_check,
        _d(label="chi4"), _d(label=chis), Tolerance(1e-12, 1e-15))
    add("CH-COTANGENT-SINC", "cotangent sampling formula for band-limited f", C,
        lambda f, s, tol, budget: cs.verify_cotangent_sampling(_BAND[f](), s, tol, budget),
        _d(f="sinc2", s=0.3), _d(f=Choice(tuple(_BAND)), s=Real(0.0, 1.0)), Tolerance(1e-9, 1e-12))
    add("CH-COTANGENT-BESSEL", "cotangent sampling for sin sqrt(b^2+x^2)/sqrt(b^2+x^2)", C,
        lambda b, s, tol, budget: cs.verify_cotangent_sampling(cs.bessel_spec(b), s, tol, budget),
        _d(b=0.5, s=0.3), _d(b=Real(0.0, 10.0), s=Real(0.0, 1.0)), Tolerance(1e-9, 1e-12), cost="medium")
    add("CH-COTANGENT-GAUSSIAN", "cotangent sampling applied to a Gaussian (not band limited)", C,
        lambda c, s, tol, budget: cs.verify_cotangent_sampling(cs.gaussian_spec(c), s, tol, budget),
        _d(c=1.0, s=0.3), _d(c=Real(0.1, 10.0), s=Real(0.0, 1.0)), Tolerance(1e-9, 1e-12), status="control")
    add("CH-CHARACTER-SAMPLING", "character-weighted sampling sum equals L(1, chi) f(0)", C,
        lambda chi, a, tol, budget: cs.verify_character_sampling(cs.sinc2_spec(), cs.character(chi), a, tol, budget),
        _d(chi="chi3", a=1.0), _d(chi=chis, a=Real(0.0, 1.0, open_hi=False)), Tolerance(1e-9, 1e-12))
    add("CH-DIRICHLET3", "character sampling of the Bessel-type band-limited function", C,
        lambda chi, a, b, tol, budget: cs.verify_dirichlet3(cs.character(chi), a, b, tol),
        _d(chi="chi4", a=2 * math.pi, b=1.0), _d(chi=chis, a=Real(0.0, 2 * math.pi, open_hi=False), b=Real(0.0, 10.0)),
        Tolerance(1e-9, 1e-12), cost="medium")
    add("CH-GOSPER", "the k=4, a=2 pi sampling case with right side (pi/2) sin b / b, as written", C,
        lambda b, tol, budget: cs.verify_gosper(b, tol),
        _d(b=1.0), _d(b=Real(0.0, 10.0)), Tolerance(1e-8, 1e-12), status="audit", cost="medium")
    for label in ("chi4", "chi3"):
        add(f"CH-STEP-{label.upper()}", f"{label} series of f(alpha n)/n against a step-weighted cosine transform", C,
            _step(label), _d(f="sech", alpha=1.0), _d(f=Choice(tuple(_PAIRS)), alpha=Real(0.2, 5.0)), Tolerance(1e-9, 1e-13), cost="medium")
    for i in (1, 2, 3):
        add(f"CH-EX{i}", f"worked step-integral pair {i}", C,
            lambda alpha, tol, budget, i=i: cs.verify_example_pairs(i, alpha, tol, budget),
            _d(alpha=0.7), _d(alpha=Real(0.1, 10.0)), Tolerance(1e-9, 1e-12), cost="medium")
    add("CH-EX1-CLOSED", "int (-1)^floor(t+1/2) sech(pi t) dt = 1/4", C,
        lambda tol, budget: cs.verify_closed_form("sech", tol, budget), {}, {}, Tolerance(1e-15, 1e-8))
    add("CH-EX2-CLOSED", "int eps(t)/(1 + 2 cosh 2 pi t) dt = 1/(12 sqrt 3)", C,
        lambda tol, budget: cs.verify_closed_form("epsilon", tol, budget), {}, {}, Tolerance(1e-15, 1e-8))
    add("CH-FRESNEL-CLOSED", "Fresnel integral of the piecewise function equals 1/(2 sqrt 2)", C,
        lambda tol, budget: cs.verify_closed_form("fresnel", tol, budget), {}, {}, Tolerance(1e-15, 1e-5), cost="medium")
    for parity in ("cos", "sin"):
        add(f"CH-CHIRP-{parity.upper()}", f"square wave times {parity}(x^2/2) is self-reciprocal", C,
            lambda tol, budget, parity=parity: cs.verify_chirp_eigen(cs.SQUARE, parity, tol=tol, budget=budget),
            {}, {}, Tolerance(1e-7, 1e-9), cost="medium")
    add("CH-PLANCHEREL", "chirp integrals of S(x)/cosh(alpha x) at alpha beta = pi^2", C,
        lambda alpha, tol, budget: cs.verify_plancherel_pair(alpha, tol, budget),
        _d(alpha=2.0), _d(alpha=Real(0.3, 30.0)), Tolerance(1e-9, 1e-12), cost="medium")

    # -- hyperfourier ------------------------------------------------------
    H = "hyperfourier"
    nonint = lambda p: None if float(p["a"]) != math.floor(float(p["a"])) else "a must not be an integer"
    add("HF-F1", "sine series of 1/(n -+ a) summed to pi - sin(ax)/a", H,
        lambda a, x, tol, budget: hf.verify_fourier_f1_f2(a, x, "f1", tol),
        _d(a=0.25, x=math.pi), _d(a=Real(-10.0, 10.0), x=Real(0.0, 2 * math.pi)), Tolerance(1e-10, 1e-13), constraint=nonint)
    add("HF-F2", "cosine series of 1/(n +- a) summed to pi cot(pi a) - cos(ax)/a", H,
        lambda a, x, tol, budget: hf.verify_fourier_f1_f2(a, x, "f2", tol),
        _d(a=1 / 3, x=0.7), _d(a=Real(-10.0, 10.0), x=Real(-2 * math.pi, 2 * math.pi)), Tolerance(1e-10, 1e-13), constraint=nonint)
    add("HF-3F2", "one-sided sine series as a 3F2 of sin^2(x/2)", H,
        lambda a, x, tol, budget: hf.verify_3f2_expansion(a, x, tol),
        _d(a=0.3, x=math.pi / 2), _d(a=Real(-10.0, 10.0), x=Real(0.0, math.pi)), Tolerance(1e-10, 1e-13), constraint=nonint)
    add("HF-4F3", "one-sided cosine series as a 4F3 plus log and digamma terms", H,
        lambda a, x, tol, budget: hf.verify_4f3_expansion(a, x, tol),
        _d(a=0.25, x=1.0), _d(a=Real(-10.0, 10.0), x=Real(0.1, math.pi - 0.1, False, False)), Tolerance(1e-10, 1e-13), constraint=nonint)
    add("HF-ENTRY16", "central-binomial sine-power series against x log|2 sin x| plus a Clausen-type sum", H,
        lambda x, tol, budget: hf.verify_entry16(x, tol),
        _d(x=math.pi / 3), _d(x=Real(0.0, math.pi / 2)), Tolerance(1e-10, 1e-13))
    for i in (1, 2, 3):
        add(f"HF-NF{i}", f"Newton's 2F1 formula {i} at sin^2 x", H,
            lambda a, x, tol, budget, i=i: hf.verify_newton(f"nf{i}", a, x, tol),
            _d(a=0.3, x=0.7), _d(a=Real(-5.0, 5.0), x=Real(-math.pi / 2, math.pi / 2)), Tolerance(1e-10, 1e-15),
            sampler=lambda rng: {"a": float(rng.uniform(0.1, 0.9)), "x": float(rng.uniform(0.2, 1.4))})
    add("HF-GEGENBAUER", "2F1(2a, 2b; a+b+1/2; cos^2 x) as a bilateral gamma-ratio cosine series", H,
        lambda a, b, x, tol, budget: hf.verify_gegenbauer_family(a, b, x, tol),
        _d(a=0.25, b=0.25, x=0.3), _d(a=Real(0.0, 0.5), b=Real(0.0, 0.5), x=Real(0.0, math.pi / 2)), Tolerance(1e-8, 1e-12),
        constraint=lambda p: None if p["a"] + p["b"] < 1 else "need a+b < 1")
    add("HF-12", "2F1(a, b; 1/2; cos^2 x) as a cosine series in 2nx", H,
        lambda a, b, x, tol, budget: hf.verify_12_32("12", a, b, x, "corrected", tol),
        _d(a=0.3, b=0.3, x=math.pi / 5), _d(a=Real(0.0, 1.0), b=Real(0.0, 1.0), x=Real(0.0, math.pi / 2)), Tolerance(1e-8, 1e-12),
        constraint=lambda p: None if p["a"] + p["b"] < 1 else "need a+b < 1")
    d32 = _d(a=Real(0.0, 1.0), b=Real(0.0, 1.0), x=Real(0.0, math.pi / 2))
    c32 = lambda p: None if p["a"] + p["b"] < 1.5 else "need a+b < 3/2"
    add("HF-32", "2F1(a, b; 3/2; cos^2 x) cos x as an odd-harmonic series, as written", H,
        lambda a, b, x, tol, budget: hf.verify_12_32("32", a, b, x, "printed", tol),
        _d(a=0.3, b=0.4, x=math.pi / 5), d32, Tolerance(1e-8, 1e-12), status="audit", constraint=c32)
    add("HF-32-CORRECTED", "odd-harmonic expansion of 2F1(a, b; 3/2; cos^2 x) cos x without the factor 1/2", H,
        lambda a, b, x, tol, budget: hf.verify_12_32("32", a, b, x, "corrected", tol),
        _d(a=0.3, b=0.4, x=math.pi / 5), d32, Tolerance(1e-8, 1e-12), constraint=c32)
    add("HF-TRIG", "2F1(a, 1-a; c; sin^2 x)(2 sin x)^{2c-2} as a sine series", H,
        lambda a, c, x, tol, budget: hf.verify_trig_expansion(a, c, x, tol),
        _d(a=0.3, c=0.8, x=0.6), _d(a=Real(-0.5, 1.5), c=Real(0.0, 2.0), x=Real(0.0, math.pi / 2)), Tolerance(1e-8, 1e-12))
    add("HF-ELLIPTIC-FOURIER", "K(sin x) as a Fourier sine series", H,
        lambda x, tol, budget: hf.verify_elliptic_fourier(x, tol),
        _d(x=math.pi / 4), _d(x=Real(0.0, math.pi / 2)), Tolerance(1e-5, 1e-12))
    add("HF-HYPERGEOMETRIC1", "3F2(1, a, b; (a+b)/2, (1+a+b)/2; sin^2 x) cos x three-term expansion", H,
        lambda a, b, x, tol, budget: hf.verify_hypergeometric1(a, b, x, tol),
        _d(a=0.3, b=0.4, x=math.pi / 4), _d(a=ComplexDisc(), b=ComplexDisc(), x=Real(0.0, math.pi / 2)), Tolerance(1e-6, 1e-12),
        constraint=lambda p: None if complex(p["a"] + p["b"]).real <= 1 else "need Re(a+b) <= 1")
    qdom = _d(a=Real(-2.0, 2.0), b=Real(-2.0, 2.0), x=Real(-math.pi / 4, math.pi / 4))
    add("HF-QUADRATIC", "quadratic transformation to sin^2 2x, as written", H,
        lambda a, b, x, tol, budget: hf.verify_quadratic_transformation(a, b, x, "printed", tol),
        _d(a=0.3, b=0.25, x=0.5), qdom, Tolerance(1e-10, 1e-14), status="audit")
    add("HF-QUADRATIC-CORRECTED", "Gauss quadratic transformation 2F1(2a, 2b; a+b+1/2; z) = 2F1(a, b; a+b+1/2; 4z(1-z))", H,
        lambda a, b, x, tol, budget: hf.verify_quadratic_transformation(a, b, x, "corrected", tol),
        _d(a=0.3, b=0.25, x=0.5), qdom, Tolerance(1e-10, 1e-14))

    # -- prodilog ----------------------------------------------------------
    P = "prodilog"
    tdom = _d(x=Real(-math.pi / 4, math.pi / 4))
    tcon = lambda p: None if p["x"] != 0 else "x must be non-zero"
    add("PD-TI2", "inverse tangent integral Fourier expansion with coefficient 1/2, as written", P,
        lambda x, tol, budget: pd.verify_ti2_expansion(x, "printed", tol),
        _d(x=math.pi / 8), tdom, Tolerance(1e-10, 1e-14), status="audit", constraint=tcon)
    add("PD-TI2-CORRECTED", "Ti2(tan x) = x log|tan x| + sum sin((4n+2)x)/(2n+1)^2", P,
        lambda x, tol, budget: pd.verify_ti2_expansion(x, "corrected", tol),
        _d(x=math.pi / 8), tdom, Tolerance(1e-10, 1e-14), constraint=tcon)
    shapes = {
        "PD-INF-PRODUCT": ("inf_product", 0.5, (0.0, 1.0), "prod ((n^2+a^2)/(n^2-b^2))^{n chi4(n)} = exp(pi a b/2)"),
        "PD-INF-PROD1": ("P1", 1.25, (1.0, 1.5), "Legendre-symbol mod 3 product = exp(-2 pi a b/3)"),
        "PD-INF-PROD2I": ("P2i", 0.3, (0.0, 0.5), "mod 3 product (first dual form) = exp(4 pi a b/3)"),
        "PD-INF-PROD2II": ("P2ii", 0.5, (0.0, 1.0), "mod 3 product (second dual form) = exp(-4 pi a b/3)"),
        "PD-INF-PROD3": ("P3", 2.0, (1.0, 3.0), "mod 6 product without n=3 = exp(-pi a b/3)"),
    }
    for pid, (shape, b0, (lo, hi), anchor) in shapes.items():
        add(pid, anchor, P,
            lambda beta, tol, budget, shape=shape: pd.verify_product_identity(pd.product_spec(shape, beta), tol),
            _d(beta=b0), _d(beta=Real(lo, hi)), Tolerance(1e-6, 1e-12),
            sampler=lambda rng, lo=lo, hi=hi: {"beta": float(lo + (hi - lo) * rng.uniform(0.05, 0.95))})
    add("PD-CHI-PRODUCT", "prod (1 - b^2/n^2)^{n chi(n)} against the cotangent integral", P,
        lambda chi, beta, tol, budget: pd.verify_product_identity(pd.product_spec("chi_product", beta, cs.character(chi)), tol),
        _d(chi="chi4", beta=0.5), _d(chi=Choice(("chi4", "chi3")), beta=Real(0.0, 1.0)), Tolerance(1e-6, 1e-12))
    add("PD-SYMMETRIC-CONSTRAINT", "tanh(pi a/4) = tan(pi b/4) iff cosh(pi a/2) cos(pi b/2) = 1", P,
        lambda beta, tol, budget: pd.verify_symmetric_constraint(beta, tol),
        _d(beta=0.5), _d(beta=Real(0.0, 1.0)), Tolerance(1e-15, 1e-12),
        sampler=lambda rng: {"beta": float(rng.uniform(0.02, 0.98))})
    add("PD-BARNES", "log G(1+z)/G(1-z) by an n-weighted product and by a cotangent integral", P,
        lambda z, tol, budget: pd.verify_barnes_ratio(z, tol, budget),
        _d(z=0.4), _d(z=Real(-1.0, 1.0)), Tolerance(1e-10, 1e-14), constraint=lambda p: None if p["z"] != 0 else "z must be non-zero")
    add("PD-LEMMA", "finite lemma: sinh/cosh and sin/cos integrals in closed form", P,
        lambda m, alpha, beta, tol, budget: pd.verify_lemma_finite(m, alpha, beta, tol),
        _d(m=3, alpha=0.5, beta=1.2), _d(m=Int(0, 10**4), alpha=POS, beta=Real(0.0, math.pi / 2)), Tolerance(1e-12, 1e-15))
    add("PD-LEMMA-LIMIT", "(2m+1) x lemma tends to alpha beta when cosh alpha cos beta = 1", P,
        lambda alpha, tol, budget: pd.verify_lemma_limit(alpha, tol=tol),
        _d(alpha=1.0), _d(alpha=Real(0.05, 10.0)), Tolerance(1e-6, 1e-12))
    add("PD-PART-FRAC", "partial fractions of (2m+1)/cosh((2m+1)x)", P,
        lambda m, x, tol, budget: pd.verify_partial_fraction(m, x, "cosh", tol=tol),
        _d(m=2, x=0.7), _d(m=Int(0, 10**4), x=ANY), Tolerance(1e-12, 1e-15))
    cdom = _d(m=Int(0, 10**4), y=ANY)
    ccon = lambda p: None if abs(p["y"]) < math.pi / (2 * (2 * p["m"] + 1)) else "need |y| < pi/(2(2m+1))"
    add("PD-PART-FRAC-COS", "companion partial fractions of (2m+1)/cos((2m+1)y) with cos^2 y, as written", P,
        lambda m, y, tol, budget: pd.verify_partial_fraction(m, y, "cos", "printed", tol),
        _d(m=2, y=0.2), cdom, Tolerance(1e-12, 1e-15), status="audit", constraint=ccon)
    add("PD-PART-FRAC-COS-CORRECTED", "companion partial fractions of (2m+1)/cos((2m+1)y) with sin^2 y", P,
        lambda m, y, tol, budget: pd.verify_partial_fraction(m, y, "cos", "corrected", tol),
        _d(m=2, y=0.2), cdom, Tolerance(1e-12, 1e-15), constraint=ccon)
    add("PD-THETA-I", "theta-parameter integral pair, first branch: +alpha beta / sin theta", P,
        lambda theta, alpha, tol, budget: pd.verify_theta_pairs(theta, alpha, "i", tol, budget),
        _d(theta=1.0, alpha=0.4), _d(theta=Real(0.0, math.pi), alpha=Real(0.0, 20.0)), Tolerance(1e-10, 1e-13),
        sampler=lambda rng: {"theta": float(rng.uniform(0.3, 2.8)), "alpha": float(rng.uniform(0.1, 2.0))})
    add("PD-THETA-II", "theta-parameter integral pair, second branch: -alpha beta / sin theta", P,
        lambda theta, alpha, tol, budget: pd.verify_theta_pairs(theta, alpha, "ii", tol, budget),
        _d(theta=2.0, alpha=0.7), _d(theta=Real(0.0, math.pi), alpha=Real(0.0, 20.0)), Tolerance(1e-10, 1e-13))
    add("PD-SECH-PF", "partial fractions of 1/(cosh pi x + cos pi theta)", P,
        lambda x, theta, tol, budget: pd.verify_sech_partial_fraction(x, theta, tol),
        _d(x=0.5, theta=1 / 3), _d(x=ANY, theta=Real(0.0, 1.0)), Tolerance(1e-8, 1e-12))
    add("PD-GTF", "the generalized Gudermannian function satisfies its integral and derivative identities", P,
        lambda p, alpha, tol, budget: pd.verify_gtf(p, alpha, tol),
        _d(p=3.0, alpha=0.8), _d(p=Real(1.0, 20.0), alpha=Real(0.0, 10.0)), Tolerance(1e-15, 1e-8), cost="medium",
        sampler=lambda rng: {"p": float(rng.uniform(1.5, 4.0)), "alpha": float(rng.uniform(0.2, 1.5))})
    add("PD-GD-CLASSICAL", "p = 2 reduction: gd_2, cosh_2, sin_2 and pi_2 are the classical functions", P,
        _gd_classical, _d(alpha=1.0), _d(alpha=Real(0.0, 10.0)), Tolerance(1e-10, 1e-14))
    return R


REGISTRY: dict[str, IdentityDescriptor] = {}


def validate_registry(entries) -> None:
    """Every id unique, every status known, every default inside its own domain."""
    seen = set()
    for d in entries:
        if d.id in seen:
            raise RuntimeError(f"duplicate identity id {d.id}")
        seen.add(d.id)
        if d.status not in STATUSES:
            raise RuntimeError(f"{d.id}: unknown status {d.status}")
        if set(d.defaults) != set(d.domain):
            raise RuntimeError(f"{d.id}: defaults and domain disagree")
        d.resolve({})


def _build():
    entries = _register()
    validate_registry(entries)
    REGISTRY.update({d.id: d for d in sorted(entries, key=lambda d: d.id)})


_build()


def list_identities(prefix: str = "", status: str | None = None) -> list[IdentityDescriptor]:
    """Registered identities, sorted by id, optionally filtered by id prefix and status."""
    return [d for d in REGISTRY.values() if d.id.startswith(prefix) and (status is None or d.status == status)]


def get_identity(id: str) -> IdentityDescriptor:
    try:
        return REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity id {id!r}") from None
