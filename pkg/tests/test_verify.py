"""Unit tests for the identity check ledger."""

import math

import pytest

from tetralog.errors import DomainError, UnknownCheckError
from tetralog.verify import (
    CATALAN_METHODS,
    TAGS,
    aggregate_pass,
    catalan_value,
    check_ids,
    run_all,
    run_check,
)

CATALAN = 0.91596559417721901505460351493238


class TestRegistry:
    def test_at_least_45_checks(self):
        assert len(check_ids()) >= 45

    def test_expected_ids_present(self):
        ids = set(check_ids())
        for required in (
            "L1a", "L1f", "eq2.6", "L2a", "C1", "csc7", "csc14", "cscN",
            "sine7", "cheb7", "L4a", "L4b", "L4c", "li3-binom",
            "P1", "P1-3.11", "P2", "C2", "C3", "eq4.3", "conj-L7",
        ):
            assert required in ids, required

    def test_ids_sorted_in_run_all(self):
        recs = run_all()
        assert [r.id for r in recs] == sorted(r.id for r in recs)


class TestRunCheck:
    def test_unknown_id_raises(self):
        with pytest.raises(UnknownCheckError):
            run_check("no-such-id")

    def test_single_check_passes(self):
        r = run_check("csc7")
        assert r.status == "pass"
        assert r.lhs == pytest.approx(8.0, abs=1e-12)
        assert r.residual <= r.tol
        assert r.elapsed_ms >= 0

    def test_tolerance_override(self):
        r = run_check("sine7", tol_override=1e-20)
        assert r.status == "fail"
        assert r.tol == 1e-20

    def test_conjecture_status(self):
        r = run_check("conj-L7")
        assert r.status == "supports-conjecture"

    def test_record_fields(self):
        r = run_check("zeta2")
        assert math.isfinite(r.lhs) and math.isfinite(r.rhs)
        assert r.residual == abs(r.lhs - r.rhs)
        assert r.paper_ref


class TestRunAll:
    def test_everything_passes(self):
        recs = run_all()
        assert aggregate_pass(recs)
        statuses = {r.status for r in recs}
        assert statuses == {"pass", "supports-conjecture"}

    def test_tag_filter(self):
        recs = run_all(tag="sine")
        assert recs
        assert all(r.status == "pass" for r in recs)
        full = {r.id for r in run_all()}
        assert {r.id for r in recs} < full

    def test_all_tags_nonempty(self):
        for tag in TAGS:
            assert run_all(tag=tag), tag

    def test_unknown_tag_rejected(self):
        with pytest.raises(DomainError):
            run_all(tag="no-such-tag")

    def test_tol_scale_tightening_still_reports(self):
        recs = run_all(tag="sine", tol_scale=1e-6)
        # impossibly tight tolerances yield fail records, never exceptions
        assert all(r.status in ("pass", "fail") for r in recs)
        assert not aggregate_pass(recs)

    def test_bad_tol_scale_rejected(self):
        with pytest.raises(DomainError):
            run_all(tol_scale=0.0)

    def test_failures_recorded_not_raised(self):
        recs = run_all(tag="catalan", tol_scale=1e-10)
        assert isinstance(recs, list) and recs


class TestCatalanRoutes:
    def test_every_route(self):
        for m in CATALAN_METHODS:
            assert abs(catalan_value(m) - CATALAN) < 1e-10, m

    def test_unknown_route_rejected(self):
        with pytest.raises(DomainError):
            catalan_value("no-such-route")
