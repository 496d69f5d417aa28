"""The extremal function ``f0(z) = z / (1 - z^3)^(1/3)`` and its inverse.

``f0`` is built twice: from the binomial series of ``(1 - u)^(-1/3)`` and by
running :func:`~invhankel.caratheodory.starlike_from_p` on
``p(z) = (1 + z^3)/(1 - z^3)``.  Its inverse is built three ways: the
coefficient formulas of :func:`~invhankel.functionals.inverse_from_direct`,
series reversion, and the closed form ``w (1 + w^3)^(-1/3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .caratheodory import starlike_from_p
from .functionals import (
    InverseCoefficients,
    SchlichtCoefficients,
    hankel_det,
    inverse_from_direct,
)
from .series import TruncatedSeries, compose, revert

__all__ = [
    "ExtremalReport",
    "binomial_f0",
    "recurrence_f0",
    "closed_form_inverse",
    "extremal_witness",
]

WITNESS = Fraction(1, 9)


def _cube_series(order: int, sign: int, exact: bool) -> TruncatedSeries:
    # z (1 - sign z^3)^(-1/3): the z^(1+3k) coefficient is sign^k (1/3)_k / k!
    coeffs = [Fraction(0)] * (order + 1)
    term = Fraction(1)
    k = 0
    while 1 + 3 * k <= order:
        coeffs[1 + 3 * k] = term
        term = term * sign * (Fraction(1, 3) + k) / (k + 1)
        k += 1
    return TruncatedSeries.exact(coeffs, order) if exact else TruncatedSeries.floating(coeffs, order)


def binomial_f0(order: int = 8, exact: bool = True) -> TruncatedSeries:
    """``z (1 - z^3)^(-1/3)`` from the binomial series."""
    return _cube_series(order, 1, exact)


def closed_form_inverse(order: int = 8, exact: bool = True) -> TruncatedSeries:
    """``w (1 + w^3)^(-1/3)``, the inverse of ``f0``."""
    return _cube_series(order, -1, exact)


def recurrence_f0(order: int = 8, exact: bool = True) -> TruncatedSeries:
    """``f0`` from ``p = (1 + z^3)/(1 - z^3)``, i.e. ``c_{3k} = 2`` and all other ``c_n = 0``."""
    cs = [1] + [2 if n % 3 == 0 else 0 for n in range(1, order)]
    p = TruncatedSeries.exact(cs) if exact else TruncatedSeries.floating(cs)
    half = Fraction(1, 2) if exact else 0.5
    return starlike_from_p(p, half, order)


@dataclass
class ExtremalReport:
    order: int
    exact: bool
    f_binomial: TruncatedSeries
    f_recurrence: TruncatedSeries
    inverse_revert: TruncatedSeries
    inverse_closed: TruncatedSeries
    a: SchlichtCoefficients
    A_formula: InverseCoefficients
    A_revert: InverseCoefficients
    a7: object
    h3_direct: object
    h3_inverse: object
    routes_agree: bool
    inverse_routes_agree: bool
    round_trip: bool

    @property
    def passed(self) -> bool:
        tol = 0 if self.exact else 1e-12
        return (self.routes_agree and self.inverse_routes_agree and self.round_trip
                and abs(abs(self.h3_direct) - WITNESS) <= tol
                and abs(abs(self.h3_inverse) - WITNESS) <= tol)


def _agree(u, v, tol) -> bool:
    return all(abs(a - b) <= tol for a, b in zip(u, v)) and len(u) == len(v)


def extremal_witness(order: int = 8, exact: bool = True) -> ExtremalReport:
    """Build ``f0`` and its inverse every available way and evaluate ``H_3(1)`` of both."""
    if order < 7:
        raise ValueError("order must be >= 7 to reach a_7")
    tol = 0 if exact else 1e-12
    fb = binomial_f0(order, exact)
    fr = recurrence_f0(order, exact)
    g_rev = revert(fb)
    g_closed = closed_form_inverse(order, exact)
    a = SchlichtCoefficients(*fb.coeffs[2:6])
    A_formula = inverse_from_direct(a)
    A_revert = InverseCoefficients(*g_rev.coeffs[2:6])
    ident = TruncatedSeries.identity(order, exact)
    return ExtremalReport(
        order=order, exact=exact,
        f_binomial=fb, f_recurrence=fr, inverse_revert=g_rev, inverse_closed=g_closed,
        a=a, A_formula=A_formula, A_revert=A_revert, a7=fb[7],
        h3_direct=hankel_det(fb, 3, 1),
        h3_inverse=hankel_det(A_formula.sequence(), 3, 1),
        routes_agree=_agree(fb.coeffs, fr.coeffs, tol),
        inverse_routes_agree=(_agree(g_rev.coeffs, g_closed.coeffs, tol)
                              and _agree(A_formula, A_revert, tol)),
        round_trip=_agree(compose(fb, g_rev).coeffs, ident.coeffs, tol),
    )
