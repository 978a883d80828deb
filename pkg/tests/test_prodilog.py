"""Dilogarithms, character-twisted products, partial fractions, generalized trig.

Frozen references come from mpmath (30 digits) unless stated otherwise.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from identlab.charsum import character
from identlab.prodilog import (
    ConstraintPair,
    CharacterProductSpec,
    clausen2,
    cos_p,
    cosh_p,
    dilog,
    gd_p,
    gd_p_inverse,
    lemma_limit_errors,
    lemma_sides,
    log_character_product,
    pi_p,
    product_spec,
    sin_p,
    sinh_p,
    solve_constraint,
    ti2,
    verify_barnes_ratio,
    verify_gtf,
    verify_lemma_finite,
    verify_lemma_limit,
    verify_partial_fraction,
    verify_product_identity,
    verify_sech_partial_fraction,
    verify_symmetric_constraint,
    verify_theta_pairs,
    verify_ti2_expansion,
)

CATALAN = 0.915965594177219015054603514932


class TestDilogarithm:
    @pytest.mark.parametrize(
        "z,expected",
        [
            (0.3, 0.326129510075476056330411191919),
            (-0.7, -0.605158402337705250310672496389),
            (0.9, 1.2997147230049587819795713031),
            (0.5 + 0.5j, 0.453985269150295583314241923786 + 0.643767332889268748742017402653j),
            (2 + 1j, 1.18668853700005783111280010041 + 2.40774076934577200171390527552j),
            (-3, -1.93937542076670895307727171918),
            (2.0, 2.46740110027233965470862 - 2.17758609030360229604239j),
            (1.0, math.pi**2 / 6),
        ],
    )
    def test_values(self, z, expected):
        assert abs(dilog(z).value - expected) < 1e-14

    @settings(max_examples=60)
    @given(st.floats(-0.99, 0.99), st.floats(-0.99, 0.99))
    def test_reflection(self, x, y):
        z = complex(x, y)
        if abs(z) < 1e-3 or abs(1 - z) < 1e-3:
            return
        lhs = dilog(z).value + dilog(1 - z).value
        rhs = math.pi**2 / 6 - np.log(z) * np.log(1 - z)
        assert abs(lhs - rhs) < 1e-13

    @pytest.mark.parametrize(
        "theta,expected",
        [(1.0, 1.01395913236076850429457433889), (2.5, 0.433598203235532779364732860105), (0.1, 0.330272398882816661201257954168)],
    )
    def test_clausen(self, theta, expected):
        assert abs(clausen2(theta).value - expected) < 1e-14

    def test_clausen_period_and_zero(self):
        assert clausen2(0.0).value == 0
        assert abs(clausen2(1.0 + 2 * math.pi).value - clausen2(1.0).value) < 1e-14

    @pytest.mark.parametrize(
        "x,expected",
        [(0.5, 0.487222358294522357110234497693), (1.0, CATALAN), (3.0, 2.05507011608058912550681760344), (-3.0, -2.05507011608058912550681760344)],
    )
    def test_ti2(self, x, expected):
        assert abs(ti2(x).value - expected) < 1e-14

    @pytest.mark.parametrize("x", [math.pi / 8, 0.3, -0.5])
    def test_ti2_expansion(self, x):
        assert verify_ti2_expansion(x, "corrected").passed
        assert not verify_ti2_expansion(x, "printed").passed


class TestConstraints:
    @pytest.mark.parametrize("kind", ["inf_product", "P1", "P2i", "P2ii", "P3", "lemma"])
    def test_roundtrip(self, kind):
        c = solve_constraint(kind, alpha=0.8)
        c2 = solve_constraint(kind, beta=c.beta)
        assert abs(c2.alpha - 0.8) < 1e-10
        assert c.residual <= 1e-12

    def test_theta_constraints(self):
        c = solve_constraint("theta_i", alpha=0.4, extra=1.0)
        assert c.residual <= 1e-12
        c = solve_constraint("theta_ii", alpha=0.7, extra=2.0)
        assert c.residual <= 1e-12

    def test_violated_pair_rejected(self):
        with pytest.raises(ValueError):
            ConstraintPair(1.0, 0.5, "lemma")

    def test_symmetric(self):
        assert verify_symmetric_constraint(0.5).passed


class TestCharacterProducts:
    @pytest.mark.parametrize(
        "shape,beta,log_value",
        [
            ("inf_product", 0.25, 0.10079992979037786),
            ("inf_product", 0.5, 0.4406867935097715),
            ("inf_product", 0.75, 1.2111681871298223),
            ("P1", 1.25, -1.256315673427976),
            ("P2i", 0.3, 0.7642665116637322),
            ("P2ii", 0.5, -0.6931471805599455),
            ("P3", 2.0, -1.38629436111989),
        ],
    )
    def test_frozen_logs(self, shape, beta, log_value):
        spec = product_spec(shape, beta)
        assert abs(log_character_product(spec).value.real - log_value) < 1e-9
        assert verify_product_identity(spec).passed

    def test_chi_product(self):
        spec = product_spec("chi_product", 0.5, character("chi4"))
        assert abs(log_character_product(spec).value.real + 0.23304072394697342) < 1e-9
        assert verify_product_identity(spec).passed

    @pytest.mark.parametrize("beta", [0.2, 0.6, 0.9])
    def test_chi3_product(self, beta):
        assert verify_product_identity(product_spec("chi_product", beta, character("chi3"))).passed

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            product_spec("nope", 0.5)

    @pytest.mark.parametrize("z", [0.4, -0.3, 0.9])
    def test_barnes(self, z):
        assert verify_barnes_ratio(z).passed

    def test_barnes_frozen(self):
        r = verify_barnes_ratio(0.4)
        # log G(1.4)/G(0.6) from mpmath's Barnes G
        assert abs(r.lhs.value - 0.41031143367449724) < 1e-12


class TestLemma:
    def test_frozen(self):
        lhs, rhs = lemma_sides(2, 2.0, 1.5)
        assert abs(lhs.value - 0.8968688818309883) < 1e-12
        assert abs(rhs.value - 0.8968688818309883) < 1e-12

    @pytest.mark.parametrize("m,alpha,beta", [(0, 0.5, 0.3), (3, 0.5, 1.2), (10, 2.0, 0.1)])
    def test_finite(self, m, alpha, beta):
        assert verify_lemma_finite(m, alpha, beta).passed

    def test_limit_errors_decrease(self):
        errs = lemma_limit_errors(1.0)
        assert all(abs(b) < abs(a) for a, b in zip(errs, errs[1:]))
        assert np.allclose(errs, [-2.930e-8, -9.481e-9, -2.551e-9], rtol=1e-3)
        assert verify_lemma_limit(1.0).passed


class TestPartialFractions:
    @pytest.mark.parametrize("m,x", [(0, 0.3), (2, 0.7), (5, -1.1)])
    def test_cosh(self, m, x):
        assert verify_partial_fraction(m, x, "cosh").passed

    def test_cosh_frozen(self):
        r = verify_partial_fraction(2, 0.7, "cosh")
        assert abs(r.lhs.value - 0.3016987206008382) < 1e-13

    @pytest.mark.parametrize("m,y", [(1, 0.3), (2, 0.2), (4, -0.1)])
    def test_cos_companion(self, m, y):
        assert verify_partial_fraction(m, y, "cos", "corrected").passed
        assert not verify_partial_fraction(m, y, "cos", "printed").passed

    @pytest.mark.parametrize("theta,alpha,branch,expected", [(math.pi / 2, 1.0, "i", 0.65088016802300755), (1.0, 0.4, "i", 0.097287196425684814), (2.0, 0.7, "ii", -0.6279113234451227)])
    def test_theta_pairs(self, theta, alpha, branch, expected):
        r = verify_theta_pairs(theta, alpha, branch)
        assert r.passed
        assert abs(r.rhs.value - expected) < 1e-12

    def test_sech_partial_fraction(self):
        r = verify_sech_partial_fraction(0.5, 1 / 3)
        assert r.passed and abs(r.rhs.value - 0.33231661301989307) < 1e-9


class TestGeneralizedTrig:
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.0])
    def test_pi_p(self, p):
        assert abs(pi_p(p) - 2 * math.pi / (p * math.sin(math.pi / p))) < 1e-13

    def test_frozen_functions(self):
        assert abs(sin_p(3, 0.5).value - 0.494759738535317084404053479774) < 1e-13
        assert abs(sinh_p(3, 0.8).value - 0.833387249469496008751375217475) < 1e-13
        assert abs(cosh_p(3, 0.8).value - 1.16442228812170025094522875999) < 1e-13
        assert abs(gd_p(3, 0.8).value - 0.74143240403771050935693417497) < 1e-13

    @settings(max_examples=20, deadline=None)
    @given(st.floats(1.2, 5.0), st.floats(0.05, 0.95))
    def test_pythagorean(self, p, frac):
        x = frac * pi_p(p) / 2
        s, c = sin_p(p, x).value.real, cos_p(p, x).value.real
        assert abs(s**p + c**p - 1) < 1e-12

    def test_classical_case(self):
        assert abs(sin_p(2, 0.7).value - math.sin(0.7)) < 1e-13
        assert abs(cosh_p(2, 0.7).value - math.cosh(0.7)) < 1e-13
        assert abs(gd_p(2, 0.8).value - 2 * math.atan(math.tanh(0.4))) < 1e-13

    def test_inverse_gudermannian(self):
        y = gd_p(3, 0.8).value.real
        assert abs(gd_p_inverse(3, y).value - 0.8) < 1e-10

    @pytest.mark.parametrize("p", [2, 3, 4])
    @pytest.mark.parametrize("alpha", [0.5, 1.0])
    def test_gtf(self, p, alpha):
        assert verify_gtf(p, alpha).passed
