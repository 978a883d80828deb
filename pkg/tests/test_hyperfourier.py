"""Hypergeometric series and their Fourier expansions.

Frozen references are mpmath values (30 digits).
"""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from identlab.hyperfourier import (
    HypergeometricSpec,
    PochhammerSymbol,
    digamma,
    exp_series,
    hyp,
    hyp2f1,
    poch,
    poch_ratio_sequence,
    verify_3f2_expansion,
    verify_4f3_expansion,
    verify_12_32,
    verify_elliptic_fourier,
    verify_entry16,
    verify_fourier_f1_f2,
    verify_gegenbauer_family,
    verify_hypergeometric1,
    verify_newton,
    verify_quadratic_transformation,
    verify_trig_expansion,
)
from identlab.numkernel import ConvergenceFailure


class TestSpecialFunctions:
    @pytest.mark.parametrize(
        "args,expected",
        [
            ((0.3, 0.4, 0.8, 0.6), 1.13739627726274797882874705713),
            ((0.3, 0.4, 1.2, 1.0), 1.30807283375908698040766457339),
            ((0.2 + 0.1j, 0.5, 1.5, 0.3 + 0.4j), 0.999955769693005221295484339176 + 0.040157940797049239846946884572j),
            ((-3, 0.5, 1.5, 0.9), None),
        ],
    )
    def test_hyp2f1(self, args, expected):
        v = hyp2f1(*args).value
        if expected is None:  # terminating: explicit cubic
            a, b, c, z = args
            expected = sum(poch(a, n) * poch(b, n) / (poch(c, n) * math.factorial(n)) * z**n for n in range(4))
        assert abs(v - expected) < 1e-13

    def test_3f2(self):
        v = hyp(HypergeometricSpec((1, 0.3, 0.4), (0.35, 0.85), 0.5)).value
        assert abs(v - 1.3295930881846125604723647891) < 1e-14

    @pytest.mark.parametrize(
        "z,expected",
        [(0.3, -3.50252422220013312491535114755), (-1.5, 0.703156640645243187225690333668), (12.7, 2.50171556641933756899720422578)],
    )
    def test_digamma(self, z, expected):
        assert abs(digamma(z).value - expected) < 1e-13

    @given(st.floats(0.1, 30.0))
    def test_digamma_recurrence(self, x):
        assert abs(digamma(x + 1).value - digamma(x).value - 1 / x) < 1e-12 * max(1.0, abs(digamma(x).value))

    def test_poch(self):
        assert poch(0.5, 5) == pytest.approx(29.53125, rel=1e-15)
        assert PochhammerSymbol(0.5, 5).value == pytest.approx(29.53125, rel=1e-15)

    def test_poch_ratio_sequence(self):
        seq = poch_ratio_sequence((0.5, 0.5), (1.0, 1.0), np.arange(5))
        expected = [(poch(0.5, n) / math.factorial(n)) ** 2 for n in range(5)]
        assert np.allclose(seq, expected, rtol=1e-14)

    @pytest.mark.parametrize(
        "upper,lower,z",
        [((1, 2), (3,), 1.2), ((1, 2), (2.5,), 1.0), ((1,), (0,), 0.5), ((1, 1, 1), (2,), -1.0)],
    )
    def test_spec_validation(self, upper, lower, z):
        with pytest.raises(ValueError):
            HypergeometricSpec(upper, lower, z)

    def test_slow_circle_series_reports_failure(self):
        with pytest.raises(ConvergenceFailure):
            hyp(HypergeometricSpec((0.3, 0.4), (1.2,), -1.0), cap=10_000)

    def test_exp_series_zero_frequency(self):
        # sum_{n>=1} 1/n^2 through the non-oscillatory path
        v = exp_series(lambda n: 1.0 / np.asarray(n, float) ** 2, 0.0, n0=1)
        assert abs(v.value - math.pi**2 / 6) < 1e-11

    def test_exp_series_oscillatory(self):
        v = exp_series(lambda n: 1.0 / np.asarray(n, float), 1.0, n0=1)
        assert abs(v.value + cmath.log(1 - cmath.exp(1j))) < 1e-12


class TestElementarySeries:
    @pytest.mark.parametrize("which", ["f1", "f2"])
    @pytest.mark.parametrize("a", [0.25, 1 / 3, -0.7, 2.5])
    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_f1_f2(self, which, a, x):
        assert verify_fourier_f1_f2(a, x, which).passed

    @pytest.mark.parametrize("a,x", [(0.3, math.pi / 2), (0.7, 1.0), (-0.4, 2.5)])
    def test_3f2(self, a, x):
        assert verify_3f2_expansion(a, x).passed

    @pytest.mark.parametrize("a,x", [(0.25, 1.0), (0.6, 0.5), (-0.3, 2.0)])
    def test_4f3(self, a, x):
        assert verify_4f3_expansion(a, x).passed

    @pytest.mark.parametrize("x", [0.2, math.pi / 3, 1.5])
    def test_entry16(self, x):
        assert verify_entry16(x).passed


class TestNewton:
    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(["nf1", "nf2", "nf3"]), st.floats(0.05, 0.95), st.floats(-1.4, 1.4))
    def test_property(self, which, a, x):
        assert verify_newton(which, a, x).passed

    def test_unknown(self):
        with pytest.raises(ValueError):
            verify_newton("nf9", 0.3, 0.5)


class TestGaussTypeExpansions:
    @pytest.mark.parametrize("a,b,x", [(0.25, 0.25, 0.3), (0.1, 0.3, 1.0), (0.4, 0.45, 0.7)])
    def test_gegenbauer(self, a, b, x):
        assert verify_gegenbauer_family(a, b, x).passed

    @pytest.mark.parametrize("a,b,x", [(0.3, 0.3, math.pi / 5), (0.1, 0.6, 1.2)])
    def test_half(self, a, b, x):
        assert verify_12_32("12", a, b, x).passed

    @pytest.mark.parametrize("a,b,x", [(0.3, 0.4, math.pi / 5), (0.6, 0.7, 1.0)])
    def test_three_halves_corrected(self, a, b, x):
        assert verify_12_32("32", a, b, x, "corrected").passed

    def test_three_halves_printed_off_by_two(self):
        r = verify_12_32("32", 0.3, 0.4, math.pi / 5, "printed")
        assert not r.passed
        assert abs(r.rhs.value / r.lhs.value - 2) < 1e-10

    @pytest.mark.parametrize("a,c,x", [(0.3, 0.8, 0.6), (0.5, 1.0, 1.0), (1.2, 1.5, 0.4)])
    def test_trig(self, a, c, x):
        assert verify_trig_expansion(a, c, x).passed

    @pytest.mark.parametrize("x", [math.pi / 6, math.pi / 4, math.pi / 3])
    def test_elliptic_fourier(self, x):
        assert verify_elliptic_fourier(x).passed

    @pytest.mark.parametrize("a,b,x", [(0.3, 0.4, math.pi / 4), (0.2 + 0.1j, 0.3 - 0.1j, 0.6), (0.3, 0.7, 1.0), (-0.5, 0.8, 0.4)])
    def test_hypergeometric1(self, a, b, x):
        assert verify_hypergeometric1(a, b, x).passed

    @given(st.floats(-1.0, 1.0), st.floats(-1.0, 1.0), st.floats(-0.7, 0.7))
    @settings(max_examples=25, deadline=None)
    def test_quadratic_transformation(self, a, b, x):
        if a + b + 0.5 <= 0 or abs(a + b + 0.5 - round(a + b + 0.5)) < 1e-6 and round(a + b + 0.5) <= 0:
            return
        assert verify_quadratic_transformation(a, b, x, "corrected").passed

    def test_quadratic_printed_form_fails(self):
        assert not verify_quadratic_transformation(0.3, 0.25, 0.5, "printed").passed
