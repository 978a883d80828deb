"""Odd characters, sampling formulas, step-weighted transforms and chirps."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from identlab.charsum import (
    EPSILON,
    SQUARE,
    DirichletCharacter,
    L1,
    PeriodicOddSequence,
    bessel_spec,
    character,
    character_series,
    closed_form_integral,
    cosh3_pair,
    gaussian_pair,
    gaussian_spec,
    sech_pair,
    self_reciprocal_chirp,
    sinc2_spec,
    sinc_band_spec,
    step_transform_sum,
    verify_character_sampling,
    verify_chirp_eigen,
    verify_closed_form,
    verify_cotangent_sampling,
    verify_dirichlet3,
    verify_example_pairs,
    verify_gosper,
    verify_plancherel_pair,
)


class TestCharacters:
    @pytest.mark.parametrize(
        "label,value",
        [("chi4", math.pi / 4), ("chi3", math.pi / (3 * math.sqrt(3))), ("chi6", math.pi / (2 * math.sqrt(3)))],
    )
    def test_L1(self, label, value):
        assert abs(L1(character(label)).value - value) < 1e-14

    def test_explicit_table(self):
        chi = character(4, table=(0, 1, 0, -1))
        assert isinstance(chi, DirichletCharacter)
        assert list(chi(np.arange(8))) == [0, 1, 0, -1, 0, 1, 0, -1]

    @pytest.mark.parametrize(
        "k,table",
        [
            (4, (0, 1, 0, 1)),  # even
            (5, (0, 1, 1, -1, -1)),  # odd but not multiplicative
            (4, (0, 1, 1, -1)),  # nonzero off the units
        ],
    )
    def test_rejects_non_characters(self, k, table):
        with pytest.raises(ValueError):
            character(k, table=table)

    def test_odd_sequence_need_not_be_multiplicative(self):
        s = PeriodicOddSequence(5, (0, 1, 2, -2, -1))
        assert s(np.array([6]))[0] == 1

    def test_character_series_against_closed_form(self):
        # sum chi4(n) g(n)/n with g = 1/n^2: pi^3 / 32
        v = character_series(character("chi4"), lambda n: 1.0 / np.asarray(n, float) ** 2)
        assert abs(v.value - math.pi**3 / 32) < 1e-13


class TestSampling:
    @pytest.mark.parametrize("s", [0.1, 0.3, 0.5, 0.77])
    @pytest.mark.parametrize("spec", [sinc2_spec(), sinc_band_spec(), bessel_spec(0.5), bessel_spec(2.0)], ids=lambda s: s.name)
    def test_cotangent(self, spec, s):
        assert verify_cotangent_sampling(spec, s).passed

    def test_cotangent_rejects_integer_shift(self):
        with pytest.raises(ValueError):
            verify_cotangent_sampling(sinc2_spec(), 1.0)

    def test_gaussian_is_not_band_limited(self):
        r = verify_cotangent_sampling(gaussian_spec(1.0), 0.3)
        assert not r.passed

    @pytest.mark.parametrize("label", ["chi3", "chi4", "chi6"])
    @pytest.mark.parametrize("a", [0.5, 1.0])
    def test_character_sampling(self, label, a):
        assert verify_character_sampling(sinc2_spec(), character(label), a).passed

    @pytest.mark.parametrize("b", [0.5, 1.0, 3.0])
    def test_dirichlet3(self, b):
        assert verify_dirichlet3(character("chi4"), 2 * math.pi, b).passed

    def test_gosper_form_off_by_two(self):
        r = verify_gosper(1.0)
        assert not r.passed
        assert abs(r.lhs.value - math.pi / 4 * math.sin(1.0)) < 1e-12
        assert abs(r.rhs.value / r.lhs.value - 2) < 1e-12


class TestStepTransforms:
    @pytest.mark.parametrize("pair", [sech_pair(), cosh3_pair(), gaussian_pair()], ids=lambda p: p.name)
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_chi4(self, pair, alpha):
        assert step_transform_sum("chi4", pair, alpha, math.pi / (2 * alpha)).passed

    @pytest.mark.parametrize("alpha", [0.7, 1.5])
    def test_chi3(self, alpha):
        assert step_transform_sum("chi3", sech_pair(), alpha, 2 * math.pi / (3 * alpha)).passed

    @pytest.mark.parametrize("which", [1, 2, 3])
    @pytest.mark.parametrize("alpha", [0.4, 0.7, 1.0, 2.5])
    def test_example_pairs(self, which, alpha):
        assert verify_example_pairs(which, alpha).passed

    @pytest.mark.parametrize(
        "which,value,atol",
        [("sech", 0.25, 1e-8), ("epsilon", 1 / (12 * math.sqrt(3)), 1e-8), ("fresnel", 1 / (2 * math.sqrt(2)), 1e-5)],
    )
    def test_closed_forms(self, which, value, atol):
        lhs, rhs = closed_form_integral(which)
        assert abs(lhs.value - value) < atol
        assert verify_closed_form(which).passed

    def test_step_waves(self):
        t = np.array([0.2, 0.7, 1.2, 1.7])
        assert list(SQUARE(t)) == [1, -1, -1, 1]
        assert SQUARE.satisfies_chirp_symmetry(np.random.default_rng(0))
        assert list(EPSILON(np.array([0.1, 0.5, 0.9, 1.4]))) == [1, -2, 1, -2]


class TestChirps:
    @pytest.mark.parametrize("parity", ["cos", "sin"])
    def test_self_reciprocal(self, parity):
        assert verify_chirp_eigen(SQUARE, parity).passed

    def test_eigenvalue_sign(self):
        assert self_reciprocal_chirp(SQUARE, "cos").eigenvalue in (1.0, -1.0)

    @settings(max_examples=8, deadline=None)
    @given(st.floats(0.3, 10.0))
    def test_plancherel(self, alpha):
        assert verify_plancherel_pair(alpha).passed
