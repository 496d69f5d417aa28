"""Coefficient functionals of f and of its inverse.

Maps between the Carathéodory coefficients ``c_1..c_4``, the Taylor
coefficients ``a_2..a_5`` of ``f`` and the coefficients ``A_2..A_5`` of
``f^{-1}``, plus general Hankel determinants.  Every function is plain
arithmetic, so it accepts exact scalars, complex floats and numpy arrays alike.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .series import TruncatedSeries

__all__ = [
    "SchlichtCoefficients",
    "InverseCoefficients",
    "a_from_c",
    "inverse_from_direct",
    "A_from_c",
    "hankel_matrix",
    "hankel_det",
    "hankel_det_batch",
    "h3_direct",
    "h3_inverse",
    "h3_inverse_poly",
    "H3_INVERSE_SCALE",
]

H3_INVERSE_SCALE = 9216


class SchlichtCoefficients(NamedTuple):
    """``a_2 .. a_5`` of ``f(z) = z + a_2 z^2 + ...`` (``a_1 = 1`` implicit)."""

    a2: object
    a3: object
    a4: object
    a5: object

    def sequence(self) -> tuple:
        return (1, self.a2, self.a3, self.a4, self.a5)

    def series(self, exact: bool = True) -> TruncatedSeries:
        return TruncatedSeries.normalized(tuple(self), 5, exact=exact)


class InverseCoefficients(NamedTuple):
    """``A_2 .. A_5`` of ``f^{-1}(w) = w + A_2 w^2 + ...``."""

    A2: object
    A3: object
    A4: object
    A5: object

    def sequence(self) -> tuple:
        return (1, self.A2, self.A3, self.A4, self.A5)


def _exact_ints(*vals):
    # plain ints would be divided into floats below
    return tuple(Fraction(v) if isinstance(v, int) else v for v in vals)


def a_from_c(c1, c2, c3, c4) -> SchlichtCoefficients:
    """Taylor coefficients of the order-1/2 starlike ``f`` driven by ``p``."""
    c1, c2, c3, c4 = _exact_ints(c1, c2, c3, c4)
    return SchlichtCoefficients(
        c1 / 2,
        (2 * c2 + c1 * c1) / 8,
        (8 * c3 + 6 * c1 * c2 + c1**3) / 48,
        (48 * c4 + 32 * c1 * c3 + 12 * c2 * c2 + 12 * c1 * c1 * c2 + c1**4) / 384,
    )


def inverse_from_direct(a: SchlichtCoefficients) -> InverseCoefficients:
    a2, a3, a4, a5 = a
    return InverseCoefficients(
        -a2,
        2 * a2 * a2 - a3,
        5 * a2 * a3 - 5 * a2**3 - a4,
        14 * a2**4 - 21 * a3 * a2 * a2 + 6 * a2 * a4 + 3 * a3 * a3 - a5,
    )


def A_from_c(c1, c2, c3, c4) -> InverseCoefficients:
    """Inverse coefficients written directly in ``c_1..c_4``."""
    c1, c2, c3, c4 = _exact_ints(c1, c2, c3, c4)
    return InverseCoefficients(
        -c1 / 2,
        3 * c1 * c1 / 8 - c2 / 4,
        -c1**3 / 3 + c1 * c2 / 2 - c3 / 6,
        125 * c1**4 / 384 - 25 * c1 * c1 * c2 / 32 + 5 * c2 * c2 / 32
        + 5 * c1 * c3 / 12 - c4 / 8,
    )


def _coeff_lookup(coeffs):
    # index 0 holds a_1
    if isinstance(coeffs, TruncatedSeries):
        return coeffs.coeffs[1:]
    return tuple(coeffs)


def hankel_matrix(coeffs, q: int, n: int = 1) -> list[list]:
    """``[a_{n+i+j}]_{i,j<q}``; ``coeffs[0]`` is ``a_1``."""
    if q < 1 or n < 1:
        raise ValueError("q and n must be >= 1")
    a = _coeff_lookup(coeffs)
    need = n + 2 * q - 2
    if len(a) < need:
        raise ValueError(f"H_{q}({n}) needs a_{n}..a_{need}, only {len(a)} given")
    return [[a[n - 1 + i + j] for j in range(q)] for i in range(q)]


def _det(m: list[list]):
    """Determinant by Gaussian elimination; exact for exact scalars."""
    m = [list(_exact_ints(*row)) for row in m]
    size = len(m)
    det = 1
    for col in range(size):
        if any(isinstance(v, (float, complex)) for row in m for v in row):
            piv = max(range(col, size), key=lambda r: abs(m[r][col]))
            if m[piv][col] == 0:
                return m[0][0] * 0
        else:
            piv = next((r for r in range(col, size) if m[r][col] != 0), None)
            if piv is None:
                return m[0][0] * 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        for r in range(col + 1, size):
            factor = m[r][col] / p
            if factor != 0:
                for k in range(col, size):
                    m[r][k] = m[r][k] - factor * m[col][k]
    return det


def hankel_det(coeffs, q: int, n: int = 1):
    """``H_q(n)``: determinant of the assembled Hankel matrix."""
    return _det(hankel_matrix(coeffs, q, n))


def hankel_det_batch(a: np.ndarray, q: int, n: int = 1) -> np.ndarray:
    """Vectorized ``H_q(n)`` for rows of ``a`` (column 0 is ``a_1``)."""
    a = np.asarray(a)
    idx = (n - 1) + np.add.outer(np.arange(q), np.arange(q))
    if a.shape[-1] <= idx.max():
        raise ValueError(f"H_{q}({n}) needs a_{n}..a_{n + 2 * q - 2}")
    return np.linalg.det(a[..., idx])


def h3_direct(a: SchlichtCoefficients):
    """``H_3(1)(f)``."""
    return hankel_det(a.sequence(), 3, 1)


def h3_inverse(a: SchlichtCoefficients):
    """``H_3(1)(f^{-1})``."""
    return hankel_det(inverse_from_direct(a).sequence(), 3, 1)


def h3_inverse_poly(c1, c2, c3, c4):
    """``H_3(1)(f^{-1})`` as an explicit polynomial in ``c_1..c_4``."""
    c1, c2, c3, c4 = _exact_ints(c1, c2, c3, c4)
    num = (17 * c1**6 - 102 * c1**4 * c2 + 32 * c1**3 * c3
           + 180 * c1 * c1 * c2 * c2 - 144 * c1 * c1 * c4
           + 192 * c1 * c2 * c3 - 216 * c2**3 + 288 * c2 * c4 - 256 * c3 * c3)
    return num / H3_INVERSE_SCALE
