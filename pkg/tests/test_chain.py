from fractions import Fraction as F

import numpy as np
import pytest
import sympy as sp

from invhankel.bound_search import symbolic as sym
from invhankel.bound_search.chain import (
    g_chain,
    g_chain_identity_error,
    h_terms,
    majorant_m,
    printed_g_chain,
    triangle_dominance_check,
)
from invhankel.caratheodory import CaratheodoryParams, c_from_params
from invhankel.functionals import A_from_c, hankel_det

SQRT6 = np.sqrt(6.0)


# -- symbolic grouping ------------------------------------------------------------

def test_only_g1_differs_from_typeset():
    diff = sym.chain_mismatch()
    assert diff["g2"] == diff["g3"] == diff["v"] == 0
    assert diff["g1"] != 0


def test_rederived_g1_carries_everything_inside_the_square():
    c, d = sym.c, sym.d
    expected = d**2 * (4 - c**2) ** 2 * (2 * c**2 - (36 - 13 * c**2) * d + 2 * c**2 * d**2)
    assert sp.expand(sym.derive_chain()["g1"] - expected) == 0


def test_numeric_chain_matches_symbolic_chain():
    rng = np.random.default_rng(0)
    derived = sym.derive_chain()
    for _ in range(20):
        c1 = float(rng.uniform(0, 2))
        dl, et = (complex(*rng.uniform(-0.7, 0.7, 2)) for _ in range(2))
        p = CaratheodoryParams(c1, dl, et, 0)
        subs = {sym.c: c1, sym.d: dl, sym.db: dl.conjugate(), sym.e: et, sym.eb: et.conjugate()}
        for name, val in zip(("g1", "g2", "g3", "v"), g_chain(p)):
            assert abs(complex(derived[name].evalf(subs=subs)) - val) < 1e-9


def test_identity_holds_for_rederived_chain():
    assert g_chain_identity_error(10_000, seed=1) < 1e-9


def test_identity_fails_for_typeset_g1():
    assert g_chain_identity_error(1000, seed=1, printed=True) > 1.0


def test_exact_identity_at_rational_point():
    p = CaratheodoryParams(F(3, 4), F(1, 3), F(-2, 5), F(1, 2))
    c2, c3, c4 = c_from_params(p)
    h = hankel_det(A_from_c(p.c1, c2, c3, c4).sequence(), 3, 1)
    g1, g2, g3, v = g_chain(p)
    assert 9216 * h == g1 + g2 * p.eta + g3 * p.eta**2 + v * p.rho


# -- g_chain examples ---------------------------------------------------------------

def test_c_equal_two_kills_every_term():
    p = CaratheodoryParams(2.0, 0.3 + 0.4j, -0.5j, 0.2)
    assert g_chain(p) == (0, 0, 0, 0)
    g1, g2, g3, v = printed_g_chain(p)
    assert abs(g1 - 8 * p.delta**2) < 1e-12
    assert g2 == g3 == v == 0


def test_delta_zero():
    for c1 in (0.0, 0.7, 1.9):
        g1, g2, g3, v = g_chain(CaratheodoryParams(c1, 0j, 0.5, 0.5))
        assert g1 == g2 == v == 0
        assert g3 == pytest.approx(-64 * (4 - c1**2) ** 2)


def test_c_zero_delta_one():
    for chain in (g_chain, printed_g_chain):
        g1, g2, g3, v = chain(CaratheodoryParams(0.0, 1.0 + 0j, 0.3j, 0.1))
        assert g1 == pytest.approx(-576)
        assert g2 == g3 == v == 0


# -- majorant -----------------------------------------------------------------------

@pytest.mark.parametrize("reading", ["corrected", "case35", "printed"])
def test_majorant_anchor_values(reading):
    assert majorant_m(0, 0, 1, reading) == 1024
    assert majorant_m(0, np.sqrt(2 / 3), 0, reading) == pytest.approx(256 * SQRT6, abs=1e-9)


def test_c_two_face_vanishes_for_consistent_readings():
    xs, ys = np.meshgrid(np.linspace(0, 1, 50), np.linspace(0, 1, 50))
    for reading in ("corrected", "case35"):
        assert np.all(majorant_m(2.0, xs, ys, reading) == 0)
    # the detached 2c^2 x^2 term survives at c = 2
    assert majorant_m(2.0, 1.0, 0.0, "printed") == pytest.approx(8.0)


def test_majorant_domain_and_reading_checks():
    with pytest.raises(ValueError):
        majorant_m(2.1, 0.5, 0.5)
    with pytest.raises(ValueError):
        majorant_m(1.0, -0.1, 0.5)
    with pytest.raises(ValueError):
        majorant_m(1.0, 0.5, np.array([0.2, 1.5]))
    with pytest.raises(ValueError):
        majorant_m(1.0, 0.5, 0.5, "typo")


def test_h_terms_nonnegative_on_grid():
    c, x = np.meshgrid(np.linspace(0, 2, 201), np.linspace(0, 1, 101), indexing="ij")
    for h in h_terms(c, x, "corrected"):
        assert h.min() >= 0
    y = np.linspace(0, 1, 51)
    m = majorant_m(c[..., None], x[..., None], y[None, None, :])
    assert m.min() >= 0


def test_symbolic_and_numeric_majorant_agree():
    rng = np.random.default_rng(6)
    pts = rng.uniform([0, 0, 0], [2, 1, 1], (200, 3))
    for reading in ("case35", "printed"):
        f = sp.lambdify((sym.c, sym.x, sym.y), sym.majorant_expr(reading), "numpy")
        assert np.allclose(f(*pts.T), majorant_m(*pts.T, reading=reading), rtol=1e-12, atol=1e-9)
    branches = sym.majorant_branches("corrected")
    vals = np.max([np.where((pts[:, 0] >= lo) & (pts[:, 0] <= hi),
                            np.polynomial.polynomial.polyval3d(*pts.T, coef), -np.inf)
                   for coef, lo, hi in branches], axis=0)
    assert np.allclose(vals, majorant_m(*pts.T), rtol=1e-12, atol=1e-9)


def test_face_closed_forms_match_case35_reading():
    rng = np.random.default_rng(7)
    c, x = rng.uniform(0, 2, 1000), rng.uniform(0, 1, 1000)
    faces = sym.face_systems()
    for face, y in (("y=0", 0.0), ("y=1", 1.0)):
        f = sp.lambdify((sym.c, sym.x), faces[face]["face"], "numpy")
        assert np.max(np.abs(f(c, x) - majorant_m(c, x, y, "case35"))) < 1e-9
        low = c <= float(sym.C_STAR)
        assert np.max(np.abs(f(c[low], x[low]) - majorant_m(c[low], x[low], y))) < 1e-9


def test_printed_partials_are_derivatives_of_the_face_forms():
    for face in ("y=0", "y=1"):
        s = sym.face_systems()[face]
        assert sp.expand(sp.diff(s["face"], sym.c) - s["d_dc"]) == 0
        assert sp.expand(sp.diff(s["face"], sym.x) - s["d_dx"]) == 0


# -- dominance ----------------------------------------------------------------------

def test_dominance_holds_for_corrected_reading():
    for bias in (None, 0.25):
        rep = triangle_dominance_check(10_000, seed=3, boundary_bias=bias)
        assert rep.passed, rep


@pytest.mark.parametrize("reading", ["printed", "case35"])
def test_dominance_fails_for_typeset_readings(reading):
    rep = triangle_dominance_check(10_000, seed=3, reading=reading)
    assert rep.majorant_violations > 0
    assert rep.triangle_violations == 0


def test_dominance_at_c_two_and_at_zero_parameters():
    # c = 2: the determinant and the majorant both vanish
    p = CaratheodoryParams(2.0, 0.6j, 0.3, -0.4)
    c2, c3, c4 = c_from_params(p)
    assert abs(hankel_det(A_from_c(2.0, c2, c3, c4).sequence(), 3, 1)) < 1e-12
    assert majorant_m(2.0, 0.6, 0.3) == 0
    # delta = eta = rho = 0: both sides are 0
    for c1 in (0.0, 1.3):
        p = CaratheodoryParams(c1, 0j, 0j, 0j)
        g1, g2, g3, v = g_chain(p)
        assert abs(g1) + abs(g2) * abs(p.eta) + abs(g3) * abs(p.eta) ** 2 + abs(v) == 0
        assert majorant_m(c1, 0.0, 0.0) == 0


def test_dominance_needs_samples():
    with pytest.raises(ValueError):
        triangle_dominance_check(0, seed=1)
