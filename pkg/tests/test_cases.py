import numpy as np
import pytest

from invhankel.bound_search.cases import VERTEX_CLAIMS, face_edge_values
from invhankel.bound_search.chain import majorant_m


@pytest.fixture(scope="module")
def report():
    return face_edge_values()


def _row(report, case, region):
    return next(r for r in report.rows if r.case == case and r.region == region)


def test_every_claimed_bound_holds(report):
    assert report.passed
    assert all(r.claim_holds for r in report.rows)


def test_summary_checks(report):
    assert set(report.checks) == {
        "edge x=1 max 576 at c=0", "edge c=0,y=1 max 1024 at x=0",
        "edge c=0,y=0 max 256 sqrt(6) at x=sqrt(2/3)", "face y=1 max 1024 at (0,0)",
        "face y=0 max 256 sqrt(6)", "all c=2 entries 0", "vertices as listed"}
    assert all(ok for ok, *_ in report.checks.values())


def test_mismatched_closed_forms_are_flagged(report):
    assert report.mismatched_forms == ["2.1", "2.1", "3.2", "3.4", "3.5", "3.6"]
    assert face_edge_values("case35").mismatched_forms == ["2.1", "2.1", "3.2", "3.4"]


def test_typeset_h_list_breaks_the_c2_entries():
    rep = face_edge_values("printed")
    assert not rep.checks["all c=2 entries 0"][0]


def test_x_one_face(report):
    row = _row(report, "3.4", "x=1")
    assert row.observed_max == 576 and row.claim_holds and not row.form_matches


def test_c0_x1_edge_is_constant():
    y = np.linspace(0, 1, 101)
    assert np.all(majorant_m(0.0, 1.0, y) == 576)


def test_c0_x0_edge_is_quadratic():
    y = np.linspace(0, 1, 101)
    assert np.allclose(majorant_m(0.0, 0.0, y), 1024 * y**2, atol=1e-9)


def test_peak_on_c0_y0_edge(report):
    row = _row(report, "2.3", "c=0, y=0")
    assert row.observed_max == pytest.approx(256 * np.sqrt(6), abs=1e-9)
    assert row.observed_argmax[1] == pytest.approx(np.sqrt(2 / 3), abs=1e-12)


def test_vertices(report):
    for v, claimed in VERTEX_CLAIMS.items():
        assert majorant_m(*map(float, v)) == claimed
    assert _row(report, "4", "vertices").observed_max == 1024


def test_interior_row(report):
    row = report.rows[0]
    assert row.case == "1" and row.claim_holds
    assert "y0 < 0" in row.note
