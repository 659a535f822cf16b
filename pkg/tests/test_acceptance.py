"""Acceptance suite: one test per top-level acceptance criterion.

Each test certifies one headline behavior of the library end to end,
including runtime budgets where the contract specifies them.
"""

import itertools
import math
import time

import mpmath

from tetralog import verify
from tetralog.bbp import REGISTRY, extract_hex_digits
from tetralog.dirichlet import l7_series, l7_trigamma
from tetralog.integrals import integral_I7, i7_closed_form
from tetralog.specfun import cl2, clausen_sin, hurwitz_zeta, trigamma

PI = math.pi
SQRT7 = math.sqrt(7.0)
CHI7 = (0, 1, 1, -1, 1, -1, -1)


def test_01_main_integral_closed_form():
    start = time.perf_counter()
    quadrature = integral_I7(1e-10).value
    closed = i7_closed_form().value
    elapsed = time.perf_counter() - start
    assert abs(quadrature - closed) < 1e-9
    assert elapsed < 2.0


def test_02_conjecture_support_two_l_routes():
    series = l7_series().value
    tri = l7_trigamma().value
    assert abs(series - tri) < 1e-12
    assert abs(integral_I7(1e-10).value - series) < 1e-9


def test_03_catalan_nine_routes():
    start = time.perf_counter()
    values = [verify.catalan_value(m) for m in verify.CATALAN_METHODS]
    elapsed = time.perf_counter() - start
    assert len(values) == 9
    spread = max(values) - min(values)
    assert spread < 1e-10
    assert elapsed < 5.0


def test_04_l_value_representation_chain():
    records = [verify.run_check(cid) for cid in ("L1a", "L1b", "L1c", "L1d",
                                                 "L1e-1", "L1e-2", "L1e-3", "L1f")]
    for r in records:
        assert r.status == "pass", r
        assert r.residual < 1e-10, r


def test_05_trilogarithm_closed_forms():
    b = verify.run_check("L4b")
    assert b.status == "pass" and b.residual < 1e-12
    c = verify.run_check("L4c")
    assert c.status == "pass" and c.residual < 1e-10


def test_06_sine_cosecant_suite():
    for cid in ("csc7", "csc14", "cscN", "sine7", "sine10", "sine12",
                "sine11", "sine15", "sine5a", "sine5b", "sine8a", "sine8b"):
        r = verify.run_check(cid)
        assert r.status == "pass" and r.residual < 1e-12, r
    cheb = verify.run_check("cheb7")
    assert cheb.status == "pass" and cheb.residual < 1e-13


def test_07_parametric_grid_three_way():
    for cid in ("P2", "C2"):
        r = verify.run_check(cid)
        assert r.status == "pass" and r.residual < 1e-9, r


def test_08_clausen_hurwitz_combination():
    for q in (2, 3, 4):
        lhs = (
            clausen_sin(q, 2.0 * PI / 7.0).value
            + clausen_sin(q, 4.0 * PI / 7.0).value
            - clausen_sin(q, 6.0 * PI / 7.0).value
        )
        rhs = (
            SQRT7 / 2.0 / 7.0**q
            * math.fsum(
                CHI7[p] * hurwitz_zeta(float(q), p / 7.0, tol=1e-11).value
                for p in range(1, 7)
            )
        )
        assert abs(lhs - rhs) < 1e-10, q
    q2 = (
        clausen_sin(2, 2.0 * PI / 7.0).value
        + clausen_sin(2, 4.0 * PI / 7.0).value
        - clausen_sin(2, 6.0 * PI / 7.0).value
    )
    assert abs(q2 - SQRT7 / 2.0 * l7_trigamma().value) < 1e-10


def _oracle_hex_digits(formula, position, count):
    """>= 220-digit direct-summation oracle."""
    with mpmath.workdps(240):
        total = mpmath.mpf(0)
        for j in range(position + 220):
            inner = mpmath.mpf(0)
            for k, a in enumerate(formula.coeffs, start=1):
                if a:
                    inner += mpmath.mpf(a) / mpmath.mpf(8 * j + k) ** formula.degree
            total += inner / mpmath.mpf(16) ** j
        frac = mpmath.frac(total * mpmath.mpf(16) ** position)
        out = []
        for _ in range(count):
            frac *= 16
            d = int(mpmath.floor(frac))
            out.append(format(d, "X"))
            frac -= d
        return "".join(out)


def test_09_digit_extraction_matches_oracle():
    for name in ("eq2.35-sum", "eq2.37-sum"):
        f = REGISTRY[name]
        want = _oracle_hex_digits(f, 0, 8)
        got = "".join(extract_hex_digits(f, p, 1) for p in range(8))
        assert got == want, name
    f = REGISTRY["pi-degree1"]
    got = "".join(extract_hex_digits(f, p, 1) for p in range(8))
    assert got == _oracle_hex_digits(f, 0, 8)
    assert got == "243F6A88"  # classical fractional hex digits of pi


def test_10_property_invariants():
    # Cl2 oddness / periodicity / duplication grids
    for i in range(1, 100):
        th = i * PI / 100.0
        assert abs(cl2(-th).value + cl2(th).value) < 1e-12
        assert abs(cl2(th + 2.0 * PI).value - cl2(th).value) < 1e-12
        dup = 0.5 * cl2(2.0 * th).value - cl2(th).value + cl2(PI - th).value
        assert abs(dup) < 1e-11
    # Hurwitz shift
    for s, a in itertools.product((2.0, 3.0, 4.0), (0.2, 0.9, 1.7, 6.3)):
        lhs = hurwitz_zeta(s, a).value
        assert abs(lhs - hurwitz_zeta(s, a + 1.0).value - a ** (-s)) < 1e-12 * max(
            1.0, abs(lhs)
        )
    # trigamma reflection / duplication / multiplication
    for i in range(1, 10):
        x = i / 10.0
        refl = trigamma(x).value + trigamma(1.0 - x).value
        assert abs(refl - PI * PI / math.sin(PI * x) ** 2) < 1e-10 * abs(refl)
    for i in range(1, 31):
        x = i / 10.0
        lhs = 2.0 * trigamma(2.0 * x).value
        rhs = 0.5 * (trigamma(x).value + trigamma(x + 0.5).value)
        assert abs(lhs - rhs) < 1e-10 * abs(rhs)
    for m in range(2, 8):
        for x in (0.3, 1.0 / m, 1.4):
            lhs = trigamma(m * x).value
            rhs = math.fsum(trigamma(x + k / m).value for k in range(m)) / (m * m)
            assert abs(lhs - rhs) < 1e-10 * abs(lhs)


def test_11_full_ledger_run():
    start = time.perf_counter()
    records = verify.run_all()
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    assert len(records) >= 45
    assert verify.aggregate_pass(records)
    by_id = {r.id: r for r in records}
    assert by_id["conj-L7"].status == "supports-conjecture"
