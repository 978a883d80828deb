"""Quadratic-exponential series, Gauss sums and Fresnel-type integrals."""

import cmath
import math

import numpy as np
import pytest

from identlab.numkernel import Tolerance
from identlab.quadseries import (
    PeriodicFunctionSpec,
    ReductionParams,
    fresnel_line_integral,
    gauss_normalized_sum,
    inverse_square_direct,
    quadratic_series,
    ramanujan_inverse_square_sum,
    reduce_to_finite_sum,
    verify_1716,
    verify_decoupling,
    verify_elliptic_identity,
    verify_gauss_sum,
    verify_modulus_identity_continuous,
    verify_modulus_identity_discrete,
    verify_mordell_relation,
    verify_reduction,
)

# sum_{n>=1} e^{pi i n^2/a}/n^2, from an independent period-blocked direct
# summation (2*10^6 terms plus the period-mean tail); agrees to ~1e-13.
INVERSE_SQUARE = {
    2: 0.411233516712056609118103791661 + 1.23370055013616982735431137498j,
    4: 0.6667412665989136 + 0.8723580249548146j,
    6: 0.8126252873900809 + 0.7278012254766907j,
    8: 0.9087621034558737 + 0.6422621007749677j,
}


class TestGaussSum:
    @pytest.mark.parametrize("a", range(2, 41, 2))
    def test_normalized_sum_is_one(self, a):
        assert abs(gauss_normalized_sum(a).value - 1) < 1e-12

    @pytest.mark.parametrize("a", [0, 3, 2.5])
    def test_rejects_bad_modulus(self, a):
        with pytest.raises(ValueError):
            gauss_normalized_sum(a)

    def test_verify(self):
        assert verify_gauss_sum(6).passed


class TestReduction:
    @pytest.mark.parametrize("a", [2, 4, 6, 8])
    def test_inverse_square_closed_form(self, a):
        v = ramanujan_inverse_square_sum(a).value
        assert abs(v - INVERSE_SQUARE[a]) < 1e-11

    def test_direct_sum_within_its_tail_bound(self):
        d = inverse_square_direct(4, cap=100_000)
        assert abs(d.value - INVERSE_SQUARE[4]) <= d.err

    @pytest.mark.parametrize("f", [PeriodicFunctionSpec.constant(1.0), PeriodicFunctionSpec.cosine(1), PeriodicFunctionSpec.cosine(2)])
    @pytest.mark.parametrize("a", [1, 3, 5])
    def test_trig_polynomial_general(self, f, a):
        assert verify_reduction(f, a, False, Tolerance(1e-12, 1e-12)).passed

    @pytest.mark.parametrize("a", [2, 4, 6])
    def test_cosine_even_branch(self, a):
        assert verify_reduction(PeriodicFunctionSpec.cosine(1), a, True, Tolerance(1e-12, 1e-12)).passed

    def test_reduction_params_validation(self):
        with pytest.raises(ValueError):
            ReductionParams(3, True)
        with pytest.raises(ValueError):
            ReductionParams(0)

    def test_periodicity_check(self):
        assert PeriodicFunctionSpec.bernoulli_quadratic().is_periodic()


class TestFresnel:
    def test_line_integral(self):
        # int exp(pi i x^2) dx = e^{i pi/4}
        v = fresnel_line_integral(0.0)
        assert abs(v.value - cmath.exp(0.25j * math.pi)) < 1e-12

    def test_shifted(self):
        nu = 0.3
        v = fresnel_line_integral(nu)
        assert abs(v.value - cmath.exp(0.25j * math.pi - 1j * math.pi * nu * nu)) < 1e-12

    @pytest.mark.parametrize("alpha,beta", [(1.0, 1.0), (1.0, 2.0), (0.5, 4.0)])
    def test_decoupling_integer_product(self, alpha, beta):
        r = verify_decoupling(PeriodicFunctionSpec.cosine(1), PeriodicFunctionSpec.cosine(1), alpha, beta)
        assert r.passed

    def test_decoupling_requires_integer(self):
        with pytest.raises(ValueError):
            verify_decoupling(PeriodicFunctionSpec.cosine(1), PeriodicFunctionSpec.cosine(1), 1.0, 0.5)

    def test_broken_decoupling_fails(self):
        r = verify_decoupling(PeriodicFunctionSpec.cosine(1), PeriodicFunctionSpec.cosine(1), 1.0, 0.5, require_integer=False)
        assert not r.passed


class TestModulusIdentities:
    @pytest.mark.parametrize("gamma", [0.0, 0.7, math.pi])
    def test_1716(self, gamma):
        assert verify_1716(gamma).passed

    def test_1716_frozen(self):
        r = verify_1716(0.7)
        assert abs(r.lhs.value - 2.75278520973791231435198972422) < 1e-13

    def test_1716_gamma_zero_is_e_squared(self):
        r = verify_1716(0.0)
        assert abs(r.lhs.value - math.e**2) < 1e-14 and abs(r.rhs.value - math.e**2) < 1e-14

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 3.0])
    def test_continuous(self, alpha):
        assert verify_modulus_identity_continuous(alpha).passed

    def test_discrete_reports_without_raising(self):
        r = verify_modulus_identity_discrete(1 / 3, 1.0)
        assert np.isfinite(r.rel_err)

    @pytest.mark.parametrize("gamma,alpha", [(0.5, 1.0), (0.25, 0.7), (0.8, 2.0)])
    def test_elliptic(self, gamma, alpha):
        assert verify_elliptic_identity(gamma, alpha).passed

    @pytest.mark.parametrize("gamma", [1.0, math.pi, 5.0])
    def test_mordell(self, gamma):
        assert verify_mordell_relation(gamma).passed
