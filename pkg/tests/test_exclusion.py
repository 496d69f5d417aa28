import numpy as np
import pytest

from invhankel.bound_search.exclusion import critical_point_exclusion, interior_y0


def test_interior_critical_value_is_negative():
    rep = critical_point_exclusion("interior", resolution=512)
    assert rep.passed
    assert rep.cells_checked == 512 * 512
    assert all("positive" in n for n in rep.notes[:5])


def test_interior_y0_sign_at_random_points():
    rng = np.random.default_rng(0)
    c, x = rng.uniform(0, 2, 10_000), rng.uniform(0, 1, 10_000)
    keep = (c > 0) & (x > 0)
    assert np.all(interior_y0(c[keep], x[keep]) < 0)


@pytest.mark.parametrize("face", ["y=0", "y=1"])
def test_float_mode_finds_no_common_zero(face):
    rep = critical_point_exclusion(face, resolution=512, mode="float")
    assert rep.common_zero_cells == []
    assert rep.undecided_cells == []
    assert rep.min_normalized_gradient > 0


@pytest.mark.parametrize("face", ["y=0", "y=1"])
def test_interval_mode_certifies_every_cell(face):
    rep = critical_point_exclusion(face, resolution=128, mode="interval")
    assert rep.passed, rep.undecided_cells[:5]


def test_interval_mode_isolates_the_corner_zero_on_y1():
    rep = critical_point_exclusion("y=1", resolution=128, mode="interval")
    assert any("Krawczyk" in n for n in rep.notes)


def test_interval_mode_reports_undecided_cells_when_too_shallow():
    rep = critical_point_exclusion("y=1", resolution=64, mode="interval", max_depth=0)
    # the corner cell is still resolved; any other leftover must be listed, never dropped
    assert isinstance(rep.undecided_cells, list)
    assert rep.cells_checked == 64 * 64


@pytest.mark.parametrize("kwargs", [dict(face="x=0"), dict(face="y=0", resolution=32),
                                    dict(face="y=0", mode="exact")])
def test_argument_validation(kwargs):
    with pytest.raises(ValueError):
        critical_point_exclusion(**kwargs)
