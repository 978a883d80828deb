"""Tests for the numerical kernel: error-tracked numbers, summation, quadrature."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from identlab.numkernel import (
    ApproxComplex,
    BudgetExhausted,
    CheckResult,
    IntegrationBudget,
    NumericalError,
    Tolerance,
    combine_checks,
    compare,
    count_evals,
    euler_average,
    counted_cache,
    eval_counter,
    integrate_fresnel,
    integrate_half_line,
    integrate_interval,
    integrate_panels,
    integrate_real_line,
    make_check,
    neumaier_sum,
    richardson_limit,
    sum_bilateral,
    sum_blocks_richardson,
    sum_oscillatory_power,
    sum_series,
)

finite = st.floats(-1e6, 1e6, allow_nan=False)
cplx = st.builds(complex, finite, finite)
errs = st.floats(0, 1e-3)


class TestApproxComplex:
    def test_rejects_non_finite(self):
        with pytest.raises(NumericalError):
            ApproxComplex(float("nan"))
        with pytest.raises(NumericalError):
            ApproxComplex(complex(1, float("inf")))

    def test_rejects_negative_error(self):
        with pytest.raises(NumericalError):
            ApproxComplex(1.0, -1e-3)

    @given(cplx, errs, cplx, errs)
    def test_addition_adds_errors(self, a, ea, b, eb):
        s = ApproxComplex(a, ea) + ApproxComplex(b, eb)
        assert s.value == a + b
        assert s.err >= ea + eb

    @given(cplx, errs, cplx, errs)
    def test_product_error_covers_perturbation(self, a, ea, b, eb):
        x, y = ApproxComplex(a, ea), ApproxComplex(b, eb)
        p = x * y
        # perturb both factors to the edge of their error discs
        worst = abs((a + ea) * (b + eb) - a * b)
        assert p.err >= 0.999 * worst - 1e-300

    def test_scalar_interop(self):
        x = ApproxComplex(2.0, 1e-10)
        assert (1 + x).value == 3
        assert (x * 2).err == pytest.approx(2e-10)
        assert (3 - x).value == 1
        assert (1 / x).value == 0.5

    def test_real_imag_parts(self):
        x = ApproxComplex(1 + 2j, 1e-9)
        assert x.real == 1 and x.imag == 2


class TestTolerance:
    def test_target(self):
        assert Tolerance(1e-3, 1e-6).target(2.0) == pytest.approx(2e-3 + 1e-6)

    @pytest.mark.parametrize("rel,abs_", [(0.0, 1.0), (-1.0, 0.0), (1e-3, -1.0)])
    def test_invalid(self, rel, abs_):
        with pytest.raises(ValueError):
            Tolerance(rel, abs_)

    def test_compare_mixed_rule(self):
        v = compare(1.0, 1.0 + 1e-9, Tolerance(1e-8, 0.0))
        assert v.passed and v.abs_err == pytest.approx(1e-9)
        assert not compare(1.0, 1.1, Tolerance(1e-8, 0.0)).passed
        # absolute part rescues values that are both ~0
        assert compare(1e-17, -1e-17, Tolerance(1e-15, 1e-15)).passed


class TestNeumaier:
    @given(st.lists(finite, min_size=1, max_size=200))
    def test_matches_fsum(self, xs):
        s, err = neumaier_sum(xs)
        assert s.real == math.fsum(xs)

    def test_catastrophic_cancellation(self):
        s, _ = neumaier_sum([1e100, 1.0, -1e100])
        assert s == 1.0

    def test_empty(self):
        assert neumaier_sum([]) == (0j, 0.0)


class TestSeries:
    def test_geometric(self):
        r = sum_series(lambda n: 0.5**n)
        assert r.converged
        assert abs(r.sum.value - 2.0) < 1e-15

    def test_basel_with_tail_bound(self):
        r = sum_series(lambda n: 1.0 / (n * n), Tolerance(1e-10, 0.0), start=1, vectorized=True, tail_bound=lambda N: 1.0 / N, cap=10**8)
        assert abs(r.sum.value - math.pi**2 / 6) <= r.sum.err

    def test_bilateral_gaussian(self):
        # sum exp(-pi n^2) = pi^{1/4} / Gamma(3/4)
        exact = math.pi**0.25 / math.gamma(0.75)
        r = sum_bilateral(lambda n: np.exp(-math.pi * np.asarray(n, float) ** 2), vectorized=True)
        assert abs(r.sum.value - exact) < 1e-15

    def test_cap_reached_is_reported(self):
        r = sum_series(lambda n: 1.0 / (n + 1), cap=100)
        assert not r.converged and r.terms_used == 100


class TestAcceleration:
    def test_euler_average_log2(self):
        partials = np.cumsum([(-1) ** n / (n + 1) for n in range(40)])
        v, err = euler_average(partials)
        assert abs(v - math.log(2)) < 1e-12

    def test_richardson_limit_basel(self):
        ns = [16 * 2**j for j in range(10)]
        partials = [sum(1.0 / k**2 for k in range(1, n + 1)) for n in ns]
        v, err = richardson_limit(partials, ns, order=1)
        assert abs(v - math.pi**2 / 6) < 1e-11

    def test_oscillatory_power_log(self):
        # sum_{n>=1} z^n / n = -log(1 - z) on the unit circle
        z = cmath.exp(0.7j)
        s = sum_oscillatory_power(lambda n: 1.0 / np.asarray(n, float), z, n0=1)
        assert abs(s.value + cmath.log(1 - z)) < 1e-12

    def test_blocks_richardson_character_series(self):
        # sum chi4(n)/n = pi/4 with blocks of one period
        chi = np.array([0, 1, 0, -1])
        s = sum_blocks_richardson(lambda n: chi[np.asarray(n) % 4] / np.asarray(n, float), 4)
        assert abs(s.value - math.pi / 4) < 1e-13


class TestQuadrature:
    def test_polynomial_exact(self):
        r = integrate_interval(lambda x: x**5 - 3 * x**2, 0.0, 2.0)
        assert abs(r.value - (64 / 6 - 8)) < 1e-13

    def test_endpoint_singularity(self):
        # int_0^1 log(x) dx = -1 (integrand never evaluated at 0)
        r = integrate_interval(np.log, 0.0, 1.0)
        assert abs(r.value + 1) < 1e-9

    def test_breakpoint_jump(self):
        r = integrate_interval(lambda x: np.where(x < 0.3, 1.0, 2.0), 0.0, 1.0, breakpoints=[0.3])
        assert abs(r.value - 1.7) < 1e-14

    def test_panels_return_per_panel_values(self):
        edges = np.array([0.0, 1.0, 2.0, 3.0])
        vals, errs = integrate_panels(lambda x: x, edges)
        assert np.allclose(vals, [0.5, 1.5, 2.5], atol=1e-15)

    def test_real_line_gaussian(self):
        r = integrate_real_line(lambda x: np.exp(-x * x), gaussian_decay=True)
        assert abs(r.value - math.sqrt(math.pi)) < 1e-13

    def test_real_line_sech(self):
        r = integrate_real_line(lambda x: 1 / np.cosh(x))
        assert abs(r.value - math.pi) < 1e-12

    def test_half_line_algebraic_tail(self):
        r = integrate_half_line(lambda x: 1 / (1 + x * x), tail_bound=lambda X: 1 / X)
        assert abs(r.value - math.pi / 2) < 1e-10

    def test_fresnel(self):
        # int_0^inf exp(i pi x^2) dx = e^{i pi/4} / 2
        r = integrate_fresnel(None, math.pi)
        assert abs(r.value - cmath.exp(0.25j * math.pi) / 2) < 1e-12

    def test_budget_exhaustion_raises(self):
        tiny = IntegrationBudget(max_evals=50)
        with pytest.raises(BudgetExhausted):
            integrate_interval(lambda x: np.sin(1 / x), 1e-4, 1.0, tiny)


class TestCounterAndChecks:
    def test_eval_counter_accumulates(self):
        with eval_counter() as box:
            count_evals(3)
            count_evals(4)
        assert box[0] == 7
        count_evals(1)  # outside any counter: ignored

    def test_counted_cache_replays_counts(self):
        calls = []

        @counted_cache(maxsize=8)
        def work(n):
            calls.append(n)
            count_evals(n)
            return 2 * n

        for _ in range(2):
            with eval_counter() as box:
                assert work(5) == 10
            assert box[0] == 5
        assert calls == [5]

    def test_make_check_fields(self):
        r = make_check(1.0, 1.0 + 1e-12, Tolerance(1e-10), {"a": 1})
        assert isinstance(r, CheckResult) and r.passed
        assert r.params == {"a": 1}

    def test_combine_reports_worst(self):
        good = make_check(1.0, 1.0, Tolerance(1e-10))
        bad = make_check(1.0, 1.5, Tolerance(1e-10))
        c = combine_checks([good, bad])
        assert not c.passed
        assert c.abs_err == pytest.approx(0.5)

    @settings(max_examples=50)
    @given(st.floats(0.5, 2.0), st.floats(1e-12, 1e-3))
    def test_pass_consistent_with_rule(self, x, rel):
        tol = Tolerance(rel, 0.0)
        r = make_check(x, x * (1 + rel / 2), tol)
        assert r.passed == (r.abs_err <= tol.target(max(abs(r.lhs.value), abs(r.rhs.value))))
