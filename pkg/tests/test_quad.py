"""Unit tests for the adaptive quadrature engine."""

import math

import pytest

from tetralog.errors import DomainError, QuadratureError
from tetralog.quad import QuadProblem, integrate

PI = math.pi
CATALAN = 0.91596559417721901505460351493238


class TestSmoothIntegrands:
    def test_polynomial(self):
        r = integrate(QuadProblem(lambda x: x * x, 0.0, 1.0))
        assert abs(r.value - 1.0 / 3.0) < 1e-13
        assert r.method == "gauss-legendre"

    def test_oscillatory(self):
        r = integrate(QuadProblem(math.sin, 0.0, PI, tol=1e-12))
        assert abs(r.value - 2.0) < 1e-12

    def test_error_bound_honest(self):
        r = integrate(QuadProblem(lambda x: math.exp(-x * x), 0.0, 2.0))
        exact = 0.88208139076242077587536155018614  # sqrt(pi)/2 erf(2)
        assert abs(r.value - exact) <= max(r.err_bound, 1e-13)


class TestSingularEndpoints:
    def test_log_singularity_left(self):
        r = integrate(QuadProblem(math.log, 0.0, 1.0, (0.0,), 1e-12))
        assert abs(r.value + 1.0) < 1e-12
        assert "tanh-sinh" in r.method

    def test_inverse_sqrt_left(self):
        r = integrate(
            QuadProblem(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0, (0.0,), 1e-11)
        )
        assert abs(r.value - 2.0) < 1e-11

    def test_interior_singularity_split(self):
        # int_0^2 ln|x-1| dx = -2
        r = integrate(
            QuadProblem(lambda x: math.log(abs(x - 1.0)), 0.0, 2.0, (1.0,), 1e-11)
        )
        assert abs(r.value + 2.0) < 1e-11

    def test_split_equals_whole(self):
        f = lambda x: math.log(x) * math.cos(x)  # noqa: E731
        whole = integrate(QuadProblem(f, 0.0, 2.0, (0.0,), 1e-12))
        left = integrate(QuadProblem(f, 0.0, 1.0, (0.0,), 1e-12))
        right = integrate(QuadProblem(f, 1.0, 2.0, (), 1e-12))
        assert abs(whole.value - left.value - right.value) <= (
            whole.err_bound + left.err_bound + right.err_bound + 1e-14
        )

    def test_non_integrable_detected(self):
        with pytest.raises(QuadratureError):
            integrate(QuadProblem(lambda x: 1.0 / x, 0.0, 1.0, (0.0,), 1e-10))


class TestSemiInfinite:
    def test_gaussian_tail(self):
        r = integrate(QuadProblem(lambda x: math.exp(-x * x), 0.0, math.inf, tol=1e-12))
        assert abs(r.value - math.sqrt(PI) / 2.0) < 1e-12

    def test_rational_tail(self):
        r = integrate(
            QuadProblem(lambda x: 1.0 / (1.0 + x * x), 0.0, math.inf, tol=1e-12)
        )
        assert abs(r.value - PI / 2.0) < 1e-12

    def test_singular_lower_endpoint_with_infinite_upper(self):
        # int_1^inf acoth(u)/(1+u^2) du = G/2, log-singular at u = 1
        r = integrate(
            QuadProblem(
                lambda u: math.atanh(1.0 / u) / (1.0 + u * u),
                1.0,
                math.inf,
                (1.0,),
                1e-11,
            )
        )
        assert abs(r.value - CATALAN / 2.0) < 1e-11

    def test_matches_truncation_plus_tail_bound(self):
        f = lambda x: math.exp(-x)  # noqa: E731
        r = integrate(QuadProblem(f, 0.0, math.inf, tol=1e-12))
        cutoff = integrate(QuadProblem(f, 0.0, 40.0, tol=1e-12))
        assert abs(r.value - (cutoff.value + math.exp(-40.0))) < 1e-10


class TestRefinement:
    def test_halving_tol_does_not_worsen(self):
        exact = -1.0
        f = math.log
        e_loose = abs(
            integrate(QuadProblem(f, 0.0, 1.0, (0.0,), 1e-6)).value - exact
        )
        e_tight = abs(
            integrate(QuadProblem(f, 0.0, 1.0, (0.0,), 1e-12)).value - exact
        )
        assert e_tight <= e_loose + 1e-15


class TestValidation:
    def test_reversed_bounds_rejected(self):
        with pytest.raises(DomainError):
            QuadProblem(math.sin, 1.0, 0.0)

    def test_bad_tol_rejected(self):
        with pytest.raises(DomainError):
            QuadProblem(math.sin, 0.0, 1.0, (), 0.0)

    def test_singular_point_outside_range_rejected(self):
        with pytest.raises(DomainError):
            QuadProblem(math.sin, 0.0, 1.0, (2.0,))

    def test_budget_exhaustion_raises(self):
        with pytest.raises(QuadratureError):
            integrate(
                QuadProblem(
                    lambda x: math.sin(1000.0 * x), 0.0, 100.0, (), 1e-13, 3
                )
            )

    def test_nonfinite_integrand_raises(self):
        with pytest.raises(QuadratureError):
            integrate(QuadProblem(lambda x: float("nan"), 0.0, 1.0))
