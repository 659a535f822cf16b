"""Unit tests for the central integral family and its closed forms.

Reference values were frozen from independent high-precision evaluation.
"""

import math

import pytest

from tetralog.errors import DomainError
from tetralog.integrals import (
    CONSTANTS,
    corollary3,
    i1_clausen_form,
    i1_polylog_form,
    i1_series_truncated,
    i2_closed_form,
    i7_closed_form,
    i_ab_closed_omega,
    i_ab_closed_theta12,
    integral_I1_split,
    integral_I7,
    integral_I_ab,
    integral_In,
    integral_In_vform,
)

PI = math.pi
L7 = 1.1519254705444910471016923973205
CATALAN = 0.91596559417721901505460351493238
I_N1 = 0.8889149278163532635989041542035
I_N2 = 2.280790061674083622045645922519
I1_SPLIT = 0.4038942572647920457114287298466
I2_SPLIT = 0.4850206705515612178874754243569


class TestConstants:
    def test_r73(self):
        s7, s3 = math.sqrt(7.0), math.sqrt(3.0)
        assert abs(CONSTANTS.r73 - (s7 + s3) / (s7 - s3)) < 1e-14

    def test_omega_plus_value(self):
        assert abs(CONSTANTS.omega_plus.raw + 0.88496589950500667867) < 1e-14

    def test_v_roots(self):
        # v_pm are the roots of 2v^2 - 3v + 2
        for v in (CONSTANTS.v_plus, CONSTANTS.v_minus):
            assert abs(2.0 * v * v - 3.0 * v + 2.0) < 1e-14


class TestMainIntegral:
    def test_quadrature_value(self):
        r = integral_I7()
        assert abs(r.value - L7) < 1e-10

    def test_closed_form(self):
        assert abs(i7_closed_form().value - L7) < 1e-13

    def test_power_zero_is_exact(self):
        assert abs(integral_In(0).value - PI / 6.0) < 1e-12

    def test_power_one(self):
        assert abs(integral_In(1).value - I_N1) < 1e-10

    def test_power_two(self):
        assert abs(integral_In(2).value - I_N2) < 1e-9

    def test_vform_agrees(self):
        for n in (1, 2):
            assert abs(integral_In_vform(n).value - integral_In(n).value) < 1e-9

    def test_negative_power_rejected(self):
        with pytest.raises(DomainError):
            integral_In(-1)


class TestSplitPieces:
    def test_split_values(self):
        i1, i2 = integral_I1_split()
        assert abs(i1.value - I1_SPLIT) < 1e-10
        assert abs(i2.value - I2_SPLIT) < 1e-10

    def test_pieces_sum_to_whole(self):
        i1, i2 = integral_I1_split()
        assert abs(i1.value + i2.value - integral_In(1).value) < 1e-9

    def test_second_piece_clausen_form(self):
        assert abs(i2_closed_form().value - I2_SPLIT) < 1e-13

    def test_first_piece_clausen_form(self):
        assert abs(i1_clausen_form().value - I1_SPLIT) < 1e-13

    def test_polylog_form(self):
        assert abs(i1_polylog_form(1).value - I1_SPLIT) < 1e-12

    def test_polylog_form_second_power(self):
        # must agree with the truncated-series route at the same power
        assert abs(i1_polylog_form(2).value - i1_series_truncated(2)) < 1e-10

    def test_series_truncated(self):
        assert abs(i1_series_truncated(1) - I1_SPLIT) < 1e-12

    def test_polylog_form_invalid_power(self):
        with pytest.raises(DomainError):
            i1_polylog_form(3)


class TestParametricFamily:
    def test_catalan_special_case(self):
        # a = 1, b = 0 reduces to the Catalan constant
        assert abs(integral_I_ab(1.0, 0.0).value - CATALAN) < 1e-10

    def test_zero_exponent_pair_vanishes(self):
        for b in (-0.5, 0.0, 0.5):
            assert abs(integral_I_ab(0.0, b).value) < 1e-10

    def test_frozen_value(self):
        assert abs(integral_I_ab(2.0, 0.25).value - 0.75268253158646744701103) < 1e-10

    def test_closed_forms_match_quadrature(self):
        for a, b in ((0.5, 0.3), (2.0, -0.6), (1.0, 0.0), (3.0, 0.9)):
            q = integral_I_ab(a, b).value
            assert abs(i_ab_closed_omega(a, b).value - q) < 1e-9
            assert abs(i_ab_closed_theta12(a, b).value - q) < 1e-9

    def test_domain_validation(self):
        with pytest.raises(DomainError):
            integral_I_ab(-1.0, 0.0)
        with pytest.raises(DomainError):
            integral_I_ab(1.0, 1.0)


class TestLogTangentCorollary:
    def test_examples(self):
        for c, t in ((1.0, PI / 3.0), (2.0, PI / 2.0), (math.e, 0.1)):
            lhs, rhs = corollary3(c, t)
            assert abs(lhs.value - rhs) < 1e-10

    def test_rhs_formula(self):
        c, t = 2.0, 1.0
        _, rhs = corollary3(c, t)
        assert abs(rhs - math.log(c) / c * t / math.sin(t)) < 1e-15
