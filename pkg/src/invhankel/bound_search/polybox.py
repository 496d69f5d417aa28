"""Range bounds for multivariate polynomials over axis-aligned boxes.

Polynomials are dense coefficient arrays in numpy's convention
(``coef[i, j, k]`` multiplies ``c**i * x**j * y**k``).  A box bound shifts the
polynomial to the lower corner of the box; in the shifted variables every
monomial is nonnegative and increasing, so each term is bounded by its value at
one of the two extreme corners.  Floating-point error is absorbed by an explicit
inflation term rather than directed rounding.
"""

from __future__ import annotations

from math import comb

import numpy as np
from numpy.polynomial import polynomial as P

EPS = np.finfo(float).eps


def derivative(coef: np.ndarray, axis: int, m: int = 1) -> np.ndarray:
    out = P.polyder(coef, m=m, axis=axis)
    if out.shape[axis] == 0:
        shape = list(coef.shape)
        shape[axis] = 1
        return np.zeros(shape)
    return out


def evaluate(coef: np.ndarray, *pts):
    """Pointwise evaluation; ``pts`` broadcast against each other."""
    if coef.ndim == 2:
        return P.polyval2d(*pts, coef)
    if coef.ndim == 3:
        return P.polyval3d(*pts, coef)
    raise ValueError("only 2- and 3-variate polynomials are supported")


def evaluate_grid(coef: np.ndarray, *axes):
    """Evaluation on the tensor grid spanned by 1-d ``axes``."""
    if coef.ndim == 2:
        return P.polygrid2d(*axes, coef)
    if coef.ndim == 3:
        return P.polygrid3d(*axes, coef)
    raise ValueError("only 2- and 3-variate polynomials are supported")


def _shift_matrices(origin: np.ndarray, deg: int) -> np.ndarray:
    """``T[b, i, j] = C(i, j) * origin[b]**(i - j)`` for ``i >= j``."""
    nb = origin.shape[0]
    T = np.zeros((nb, deg + 1, deg + 1))
    for i in range(deg + 1):
        for j in range(i + 1):
            T[:, i, j] = comb(i, j) * origin ** (i - j)
    return T


def _contract(arr: np.ndarray, T: np.ndarray, axis: int) -> np.ndarray:
    # per-box change of basis along one axis: out[b, .., j, ..] = sum_i arr[b, .., i, ..] T[b, i, j]
    moved = np.moveaxis(arr, axis, -1)
    return np.moveaxis(np.einsum("b...i,bij->b...j", moved, T), -1, axis)


def box_bounds(coef: np.ndarray, lo: np.ndarray, hi: np.ndarray):
    """Lower and upper bounds of the polynomial on each box ``[lo[b], hi[b]]``.

    ``lo`` and ``hi`` have shape ``(n_boxes, coef.ndim)``.
    """
    lo = np.atleast_2d(np.asarray(lo, dtype=float))
    hi = np.atleast_2d(np.asarray(hi, dtype=float))
    nd = coef.ndim
    width = hi - lo
    if np.any(width < 0):
        raise ValueError("box with hi < lo")
    shifted = np.broadcast_to(coef, (lo.shape[0],) + coef.shape)
    magnitude = np.broadcast_to(np.abs(coef), shifted.shape)
    for ax in range(nd):
        T = _shift_matrices(lo[:, ax], coef.shape[ax] - 1)
        shifted = _contract(shifted, T, ax + 1)
        magnitude = _contract(magnitude, np.abs(T), ax + 1)
    # monomial ranges on [0, width]: [0, width**alpha]
    tops = np.ones((lo.shape[0],) + coef.shape)
    for ax in range(nd):
        powers = width[:, ax][:, None] ** np.arange(coef.shape[ax])[None, :]
        shape = [lo.shape[0]] + [1] * nd
        shape[ax + 1] = coef.shape[ax]
        tops = tops * powers.reshape(shape)
    terms = shifted * tops
    const = shifted[(slice(None),) + (0,) * nd]
    flat = terms.reshape(lo.shape[0], -1)
    upper = const + np.clip(flat[:, 1:], 0, None).sum(axis=1)
    lower = const + np.clip(flat[:, 1:], None, 0).sum(axis=1)
    # magnitude * tops bounds every intermediate quantity the shift produced
    slack = 8 * coef.size * EPS * (magnitude * tops).reshape(lo.shape[0], -1).sum(axis=1)
    return lower - slack, upper + slack


def abs_bound(coef: np.ndarray, lo, hi) -> np.ndarray:
    """``sup |p|`` over each box."""
    lower, upper = box_bounds(coef, lo, hi)
    return np.maximum(np.abs(lower), np.abs(upper))
