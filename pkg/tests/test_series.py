from fractions import Fraction
from math import factorial

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from invhankel.series import TruncatedSeries, compose, derive, mul, revert

from conftest import lagrange_inverse, random_fraction

F = Fraction
S = TruncatedSeries.exact


def koebe(order):
    return S([0] + list(range(1, order + 1)))


# -- construction ---------------------------------------------------------------

def test_pads_to_order_and_rejects_overflow():
    s = S([0, 1], 4)
    assert s.coeffs == (0, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        S([1, 2, 3], 1)
    with pytest.raises(ValueError):
        S([1], 0)


def test_is_immutable():
    s = S([0, 1, 2])
    with pytest.raises(AttributeError):
        s.foo = 1


def test_normalized_shape():
    assert TruncatedSeries.normalized([F(2), F(3)]).is_normalized()
    assert not S([1, 1, 0]).is_normalized()


# -- mul ------------------------------------------------------------------------

@pytest.mark.parametrize("a, b, expected", [
    ([1, 1, 0], [1, -1, 0], [1, 0, -1]),
    ([1, 1, 1], [1, 1, 1], [1, 2, 3]),
    ([2, 2, 0, 0], [0, 1, 1, 0], [0, 2, 4, 2]),
])
def test_mul_examples(a, b, expected):
    assert mul(S(a), S(b)) == S(expected)


def test_mul_order_mismatch():
    with pytest.raises(ValueError):
        mul(S([1, 1]), S([1, 1, 1]))


def test_mul_never_extends_order():
    assert mul(S([0, 1, 1]), S([0, 1, 1])).order == 2


# -- derive ---------------------------------------------------------------------

@pytest.mark.parametrize("a, expected", [
    ([0, 1, 0, 1], [1, 0, 3, 0]),
    ([1, 0], [0, 0]),
    ([0, 1, 2, 3], [1, 4, 9, 0]),
])
def test_derive_examples(a, expected):
    d = derive(S(a))
    assert d == S(expected)
    assert d.order == len(a) - 1


# -- compose --------------------------------------------------------------------

def test_compose_square_of_double():
    assert compose(S([0, 0, 1]), S([0, 2, 0])) == S([0, 0, 4])


def test_compose_geometric_with_z_plus_z2():
    assert compose(S([1, 1, 1, 1]), S([0, 1, 1, 0])) == S([1, 1, 2, 3])


def test_compose_rejects_constant_term():
    with pytest.raises(ValueError):
        compose(S([0, 1, 1]), S([1, 1, 0]))


# -- revert ---------------------------------------------------------------------

def test_revert_identity():
    assert revert(TruncatedSeries.identity(6)) == TruncatedSeries.identity(6)


def test_revert_koebe_order_5():
    assert revert(koebe(5)) == S([0, 1, -2, 5, -14, 42])


def test_revert_koebe_magnitudes_to_order_8():
    g = revert(koebe(8))
    for n in range(2, 9):
        assert abs(g[n]) == factorial(2 * n) // (factorial(n) * factorial(n + 1))


def test_revert_symbolic_order_3():
    a2 = sp.Symbol("a2")
    g = revert(TruncatedSeries([0, 1, a2, 0], 3))
    assert [sp.expand(c) for c in g.coeffs] == [0, 1, -a2, 2 * a2**2]


def test_revert_rejects_unnormalized():
    with pytest.raises(ValueError):
        revert(S([0, 2, 1]))
    with pytest.raises(ValueError):
        revert(S([1, 1, 1]))


def test_revert_matches_lagrange_inversion(rng):
    for order in range(2, 7):
        for _ in range(4):
            tail = [random_fraction(rng) for _ in range(order - 1)]
            g = revert(TruncatedSeries.normalized(tail, order))
            assert list(g.coeffs) == lagrange_inverse(tail, order)


def test_float_mode_matches_exact(rng):
    tail = [random_fraction(rng) for _ in range(6)]
    exact = revert(TruncatedSeries.normalized(tail, 7))
    approx = revert(TruncatedSeries.normalized(tail, 7, exact=False))
    assert all(isinstance(c, complex) for c in approx.coeffs)
    assert max(abs(complex(a) - b) for a, b in zip(exact.coeffs, approx.coeffs)) < 1e-9 * max(
        1, max(abs(float(a)) for a in exact.coeffs))


# -- properties -------------------------------------------------------------------

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=50)


@st.composite
def normalized_series(draw, max_order=8):
    order = draw(st.integers(2, max_order))
    tail = draw(st.lists(fractions, min_size=order - 1, max_size=order - 1))
    return TruncatedSeries.normalized(tail, order)


@settings(max_examples=60, deadline=None)
@given(normalized_series())
def test_round_trip_is_identity(f):
    assert compose(f, revert(f)) == TruncatedSeries.identity(f.order)
    assert compose(revert(f), f) == TruncatedSeries.identity(f.order)


@settings(max_examples=60, deadline=None)
@given(normalized_series())
def test_double_reversion(f):
    assert revert(revert(f)) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    *[st.lists(fractions, min_size=n + 1, max_size=n + 1)] * 3)))
def test_mul_commutative_and_associative(lists):
    a, b, c = (S(x) for x in lists)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
