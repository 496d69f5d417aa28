from fractions import Fraction

import numpy as np
import pytest

from invhankel.caratheodory import verify_membership
from invhankel.extremal import (
    binomial_f0,
    closed_form_inverse,
    extremal_witness,
    recurrence_f0,
)
from invhankel.series import compose, revert

F = Fraction


def test_two_constructions_agree_exactly():
    for order in (7, 8, 13):
        assert binomial_f0(order) == recurrence_f0(order)


def test_coefficients():
    f = binomial_f0(10)
    assert f.coeffs[2:6] == (0, 0, F(1, 3), 0)
    assert f[7] == F(2, 9)
    assert f[10] == F(1, 3) * F(4, 3) * F(7, 3) / 6


def test_inverse_three_ways():
    f = binomial_f0(10)
    g = closed_form_inverse(10)
    assert revert(f) == g
    assert compose(f, g).coeffs[1:] == (1,) + (0,) * 9
    rep = extremal_witness()
    assert rep.A_formula == rep.A_revert
    assert rep.A_formula.A4 == F(-1, 3)


def test_hankel_values_are_minus_one_ninth():
    rep = extremal_witness()
    assert rep.h3_direct == F(-1, 9)
    assert rep.h3_inverse == F(-1, 9)
    assert rep.passed


def test_float_mode():
    rep = extremal_witness(exact=False)
    assert rep.passed
    assert abs(abs(rep.h3_inverse) - 1 / 9) < 1e-12


def test_order_guard():
    with pytest.raises(ValueError):
        extremal_witness(order=6)


def test_extremal_is_starlike_of_order_half():
    rep = verify_membership(lambda z: z / (1 - z**3) ** (1 / 3), 0.5,
                            derivative=lambda z: (1 - z**3) ** (-4 / 3))
    assert rep.passed
    # zf'/f = 1/(1 - z^3) has real part approaching 1/2 on the circle
    assert rep.min_real_part == pytest.approx(0.5, abs=1e-2)


def test_series_agrees_with_closed_form_inside_the_disk():
    f = binomial_f0(60, exact=False)
    z = 0.5 * np.exp(1j * np.linspace(0, 2 * np.pi, 9))
    assert np.max(np.abs(f(z) - z / (1 - z**3) ** (1 / 3))) < 1e-12
