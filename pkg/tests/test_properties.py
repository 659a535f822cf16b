"""Property-based tests for the special-function invariants."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from tetralog.specfun import cl2, hurwitz_zeta, trigamma

PI = math.pi


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=1e-6, max_value=PI - 1e-6))
def test_cl2_oddness(theta):
    assert abs(cl2(-theta).value + cl2(theta).value) < 1e-12


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=-PI, max_value=PI))
def test_cl2_periodicity(theta):
    assert abs(cl2(theta + 2.0 * PI).value - cl2(theta).value) < 1e-12


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=1e-3, max_value=PI - 1e-3))
def test_cl2_duplication(theta):
    lhs = 0.5 * cl2(2.0 * theta).value - cl2(theta).value + cl2(PI - theta).value
    assert abs(lhs) < 1e-11


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([2.0, 3.0, 4.0]),
    st.floats(min_value=0.05, max_value=20.0),
)
def test_hurwitz_shift(s, a):
    lhs = hurwitz_zeta(s, a).value
    rhs = hurwitz_zeta(s, a + 1.0).value + a ** (-s)
    assert abs(lhs - rhs) < 1e-12 * max(1.0, abs(lhs))


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.01, max_value=0.99))
def test_trigamma_reflection(x):
    lhs = trigamma(x).value + trigamma(1.0 - x).value
    rhs = PI * PI / math.sin(PI * x) ** 2
    assert abs(lhs - rhs) < 1e-10 * abs(rhs)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.05, max_value=5.0))
def test_trigamma_duplication(x):
    lhs = 2.0 * trigamma(2.0 * x).value
    rhs = 0.5 * (trigamma(x).value + trigamma(x + 0.5).value)
    assert abs(lhs - rhs) < 1e-10 * abs(rhs)


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=2, max_value=7),
    st.floats(min_value=0.05, max_value=2.0),
)
def test_trigamma_multiplication(m, x):
    lhs = trigamma(m * x).value
    rhs = math.fsum(trigamma(x + k / m).value for k in range(m)) / (m * m)
    assert abs(lhs - rhs) < 1e-10 * abs(lhs)
