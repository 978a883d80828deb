"""q-products, Appell-Lerch sums, theta sums and elliptic integrals.

Reference values were computed once with mpmath at 30 digits and frozen.
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from identlab.qfun import (
    AppellLerchSpec,
    QModulus,
    QProductSpec,
    appell_lerch_sum,
    elliptic_E,
    elliptic_K,
    log_qpoch,
    multi_q_pochhammer,
    q_pochhammer,
    theta_sum,
)


class TestQPochhammer:
    @pytest.mark.parametrize(
        "a,q,n,expected",
        [
            (0.3, 0.5, None, 0.510117826633987586237445261154),
            (0.2 + 0.3j, 0.6, None, 0.429100397184175933136727078446 - 0.481419337880635971929199561438j),
            (0.7, 0.9, 5, 0.0127268652033030024378320721086),
            (-0.5, -0.4, None, 1.26592792363120514875920277868),
        ],
    )
    def test_against_mpmath(self, a, q, n, expected):
        v = q_pochhammer(QProductSpec(a, q, n))
        assert abs(v.value - expected) <= max(v.err, 1e-14 * abs(expected))

    def test_modulus_validation(self):
        with pytest.raises(ValueError):
            QModulus(1.0)
        with pytest.raises(ValueError):
            QProductSpec(0.1, 0.5, -1)

    @given(st.floats(-0.9, 0.9), st.floats(0.05, 0.9))
    def test_functional_equation(self, a, q):
        # (a; q)_inf = (1 - a) (aq; q)_inf
        lhs = q_pochhammer(QProductSpec(a, q)).value
        rhs = (1 - a) * q_pochhammer(QProductSpec(a * q, q)).value
        assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(lhs))

    def test_multi_product(self):
        m = multi_q_pochhammer([QProductSpec(0.3, 0.5), QProductSpec(-0.2, 0.5)]).value
        p = q_pochhammer(QProductSpec(0.3, 0.5)).value * q_pochhammer(QProductSpec(-0.2, 0.5)).value
        assert abs(m - p) < 1e-15

    def test_log_form_agrees(self):
        z = np.array([0.1, 0.5, -0.8])
        lp = np.exp(log_qpoch(z, 0.3))
        direct = [q_pochhammer(QProductSpec(float(v), 0.3)).value for v in z]
        assert np.allclose(lp, direct, rtol=1e-14)


class TestAppellLerchAndTheta:
    def test_appell_lerch(self):
        v = appell_lerch_sum(AppellLerchSpec(0.3, 0.2, 0.4))
        assert abs(v.value - 3.50857130831016415565367831492) < 1e-13

    def test_theta_sum(self):
        v = theta_sum(0.5, lambda n: np.exp(-np.asarray(n, float) ** 2))
        expected = 1.03663150284781826301023111913 + 0.736005701978833890021019432026j
        assert abs(v.value - expected) < 1e-14

    def test_jacobi_triple_product(self):
        # sum q^{n^2} = (q^2; q^2)(-q; q^2)^2 with q = e^{-pi t}
        q = math.exp(-0.7)
        lhs = theta_sum(0.0, lambda n: q ** (np.asarray(n, float) ** 2)).value
        rhs = (
            q_pochhammer(QProductSpec(q * q, q * q)).value
            * q_pochhammer(QProductSpec(-q, q * q)).value ** 2
        )
        assert abs(lhs - rhs) < 1e-13


class TestElliptic:
    @pytest.mark.parametrize(
        "k,K,E",
        [
            (0.5, 1.6857503548125960428712036578, 1.46746220933942715545979526699),
            (0.0, math.pi / 2, math.pi / 2),
        ],
    )
    def test_values(self, k, K, E):
        assert abs(elliptic_K(k).value - K) < 1e-14
        assert abs(elliptic_E(k).value - E) < 1e-14

    def test_near_one(self):
        assert abs(elliptic_K(0.99).value - 3.35660052336119194248038083399) < 1e-13

    @given(st.floats(0.01, 0.99))
    def test_legendre_relation(self, k):
        kp = math.sqrt(1 - k * k)
        K, E = elliptic_K(k).value.real, elliptic_E(k).value.real
        Kp, Ep = elliptic_K(kp).value.real, elliptic_E(kp).value.real
        assert abs(E * Kp + Ep * K - K * Kp - math.pi / 2) < 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            elliptic_K(1.0)
