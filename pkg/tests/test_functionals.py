from fractions import Fraction

import numpy as np
import pytest
import sympy as sp

from invhankel.functionals import (
    A_from_c,
    InverseCoefficients,
    SchlichtCoefficients,
    a_from_c,
    h3_direct,
    h3_inverse,
    h3_inverse_poly,
    hankel_det,
    hankel_det_batch,
    hankel_matrix,
    inverse_from_direct,
)
from invhankel.series import revert

from conftest import cofactor_h3, random_fraction

F = Fraction


# -- coefficient maps -------------------------------------------------------------

@pytest.mark.parametrize("c, expected", [
    ((2, 2, 2, 2), (1, 1, 1, 1)),
    ((0, 0, 0, 0), (0, 0, 0, 0)),
    ((0, 0, 2, 0), (0, 0, F(1, 3), 0)),
])
def test_a_from_c_examples(c, expected):
    assert a_from_c(*c) == SchlichtCoefficients(*map(F, expected))


def test_a5_formula_spot_value():
    c = (F(1), F(1, 2), F(-1, 3), F(1, 4))
    c1, c2, c3, c4 = c
    assert a_from_c(*c).a5 == (48 * c4 + 32 * c1 * c3 + 12 * c2**2 + 12 * c1**2 * c2 + c1**4) / 384


@pytest.mark.parametrize("a, expected", [
    ((2, 3, 4, 5), (-2, 5, -14, 42)),
    ((0, 0, 0, 0), (0, 0, 0, 0)),
    ((0, 0, F(1, 3), 0), (0, 0, F(-1, 3), 0)),
])
def test_inverse_from_direct_examples(a, expected):
    assert inverse_from_direct(SchlichtCoefficients(*map(F, a))) == InverseCoefficients(*map(F, expected))


@pytest.mark.parametrize("c, expected", [
    ((0, 0, 2, 0), (0, 0, F(-1, 3), 0)),
    ((0, 0, 0, 0), (0, 0, 0, 0)),
    ((2, 2, 2, 2), (-1, 1, -1, 1)),
])
def test_A_from_c_examples(c, expected):
    assert A_from_c(*c) == InverseCoefficients(*map(F, expected))


def test_int_inputs_stay_exact():
    assert all(isinstance(v, Fraction) for v in a_from_c(1, 1, 1, 1))
    assert isinstance(h3_inverse_poly(1, 0, 0, 0), Fraction)


def test_random_rational_identities(rng):
    for _ in range(100):
        c = [random_fraction(rng, 2) for _ in range(4)]
        A = A_from_c(*c)
        assert A == inverse_from_direct(a_from_c(*c))
        assert h3_inverse_poly(*c) == hankel_det(A.sequence(), 3, 1)


def test_inverse_from_direct_matches_reversion(rng):
    for _ in range(50):
        a = SchlichtCoefficients(*(random_fraction(rng) for _ in range(4)))
        assert revert(a.series()).coeffs[2:] == tuple(inverse_from_direct(a))


def test_symbolic_identity_of_inverse_polynomial():
    c1, c2, c3, c4 = sp.symbols("c1:5")
    A = A_from_c(c1, c2, c3, c4)
    det = sp.Matrix(3, 3, lambda i, j: A.sequence()[i + j]).det()
    assert sp.expand(det - h3_inverse_poly(c1, c2, c3, c4)) == 0


# -- Hankel determinants ----------------------------------------------------------

def test_second_hankel_at_two():
    a2, a3, a4 = sp.symbols("a2 a3 a4")
    assert sp.expand(hankel_det([1, a2, a3, a4], 2, 2) - (a2 * a4 - a3**2)) == 0


def test_third_hankel_of_cubic_extremal():
    assert hankel_det([1, 0, 0, F(1, 3), 0], 3, 1) == F(-1, 9)


def test_order_one_is_the_entry():
    assert hankel_det([1, 7, F(2, 3)], 1, 3) == F(2, 3)


def test_insufficient_coefficients():
    with pytest.raises(ValueError):
        hankel_det([1, 2, 3, 4], 3, 1)
    with pytest.raises(ValueError):
        hankel_matrix([1, 2], 0, 1)


def test_cofactor_expansion_uses_a3_cubed(rng):
    for _ in range(50):
        a = [random_fraction(rng) for _ in range(4)]
        assert hankel_det([1, *a], 3, 1) == cofactor_h3(*a)


def test_typeset_a3_squared_expansion_differs():
    a = (F(1, 2), F(3), F(-1), F(2))
    a2, a3, a4, a5 = a
    typeset = 2 * a2 * a3 * a4 - a3**2 - a4**2 + a3 * a5 - a2**2 * a5
    assert hankel_det([1, *a], 3, 1) != typeset


def test_matrix_is_symmetric(rng):
    for q in (1, 2, 3, 4):
        coeffs = [random_fraction(rng) for _ in range(2 * q + 2)]
        m = hankel_matrix(coeffs, q, 2)
        assert m == [list(r) for r in zip(*m)]
        assert hankel_det(coeffs, q, 2) == sp.Matrix(m).T.det()


def test_sympy_determinant_agreement(rng):
    for q in (2, 3, 4):
        coeffs = [random_fraction(rng) for _ in range(2 * q)]
        expected = sp.Matrix(hankel_matrix(coeffs, q, 1)).det()
        assert hankel_det(coeffs, q, 1) == expected


def test_rotation_covariance_exact():
    eps = sp.I
    a = [sp.Rational(1, 3), sp.Rational(-2, 5), sp.Rational(3, 7), sp.Rational(1, 2)]
    base = sp.expand(hankel_det([1, *a], 3, 1))
    rotated = [eps ** (n - 1) * v for n, v in zip(range(2, 6), a)]
    assert sp.expand(hankel_det([1, *rotated], 3, 1) - eps**6 * base) == 0


def test_rotation_invariance_of_modulus():
    rng = np.random.default_rng(4)
    a = rng.normal(size=4) + 1j * rng.normal(size=4)
    eps = np.exp(0.7j)
    h = hankel_det([1, *a], 3, 1)
    hr = hankel_det([1, *(eps ** (n - 1) * v for n, v in zip(range(2, 6), a))], 3, 1)
    assert abs(hr - eps**6 * h) < 1e-12
    assert abs(abs(hr) - abs(h)) < 1e-12


def test_batch_matches_scalar():
    rng = np.random.default_rng(9)
    a = np.concatenate([np.ones((20, 1)), rng.normal(size=(20, 4)) + 1j * rng.normal(size=(20, 4))], axis=1)
    batch = hankel_det_batch(a, 3, 1)
    assert np.allclose(batch, [hankel_det(list(row), 3, 1) for row in a], atol=1e-12)
    with pytest.raises(ValueError):
        hankel_det_batch(a[:, :4], 3, 1)


# -- H3 polynomial ----------------------------------------------------------------

@pytest.mark.parametrize("c, expected", [
    ((0, 0, 2, 0), F(-1, 9)),
    ((0, 0, 0, 0), F(0)),
    ((2, 2, 2, 2), F(0)),
])
def test_h3_inverse_poly_examples(c, expected):
    assert h3_inverse_poly(*c) == expected


def test_both_routes_at_z_over_1_minus_z():
    a = a_from_c(2, 2, 2, 2)
    assert h3_direct(a) == 0 == h3_inverse(a)


def test_float_mode_identity():
    rng = np.random.default_rng(1)
    for _ in range(200):
        c = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert abs(h3_inverse_poly(*c) - hankel_det(A_from_c(*c).sequence(), 3, 1)) < 1e-9
