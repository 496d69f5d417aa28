"""Symbolic layer: printed formulas, their re-derivation, and polynomial arrays.

Conjugates are carried as independent symbols (``db`` for conj(delta), ``eb``
for conj(eta)), so every expression here is a plain polynomial.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import sympy as sp

c, x, y = sp.symbols("c x y", real=True)
d, db, e, eb, r = sp.symbols("delta delta_bar eta eta_bar rho")

SQUARE = (4 - c**2) ** 2


def lemma_c(c1=c, dl=d, dlb=db, et=e, etb=eb, rh=r):
    t = 4 - c1**2
    dd = dl * dlb
    c2 = (c1**2 + dl * t) / 2
    c3 = (c1**3 + 2 * t * c1 * dl - t * c1 * dl**2 + 2 * t * (1 - dd) * et) / 4
    c4 = (c1**4 + t * dl * (c1**2 * (dl**2 - 3 * dl + 3) + 4 * dl)
          - 4 * t * (1 - dd) * (c1 * (dl - 1) * et + dlb * et**2 - (1 - et * etb) * rh)) / 8
    return c2, c3, c4


def h3_inverse_numerator(c1, c2, c3, c4):
    return (17 * c1**6 - 102 * c1**4 * c2 + 32 * c1**3 * c3 + 180 * c1**2 * c2**2
            - 144 * c1**2 * c4 + 192 * c1 * c2 * c3 - 216 * c2**3 + 288 * c2 * c4
            - 256 * c3**2)


@lru_cache(maxsize=None)
def derive_chain() -> dict:
    """Group ``9216 H_3(1)(f^{-1})`` after the parametrization substitution.

    Returns ``{"g1", "g2", "g3", "v"}`` with
    ``9216 H = g1 + g2*eta + g3*eta**2 + v*rho``; ``v`` still depends on
    ``eta*eta_bar``.  Raises if any other monomial in ``eta, eta_bar, rho``
    survives.
    """
    c2, c3, c4 = lemma_c()
    expr = sp.expand(h3_inverse_numerator(c, c2, c3, c4))
    poly = sp.Poly(expr, e, eb, r)
    groups = {"g1": 0, "g2": 0, "g3": 0, "v": 0}
    for (pe, peb, pr), coeff in poly.terms():
        if pr == 1:
            groups["v"] += coeff * e**pe * eb**peb
        elif pr == 0 and peb == 0 and pe <= 2:
            groups[("g1", "g2", "g3")[pe]] += coeff
        else:
            raise AssertionError(f"unexpected monomial eta^{pe} eta_bar^{peb} rho^{pr}")
    return {k: sp.factor(v) for k, v in groups.items()}


def printed_chain() -> dict:
    """The four coefficient expressions exactly as typeset, ``|delta|^2 = delta*delta_bar``."""
    dd = d * db
    return {
        "g1": d**2 * SQUARE * (2 * c**2 - (36 - 13 * c**2) * d) + 2 * c**2 * d**2,
        "g2": -8 * c * d * SQUARE * (1 + d) * (1 - dd),
        "g3": -8 * SQUARE * (8 + dd) * (1 - dd),
        "v": 72 * d * SQUARE * (1 - dd) * (1 - e * eb),
    }


def chain_mismatch() -> dict:
    """``{name: difference}`` between printed and re-derived forms (0 where they agree)."""
    derived = derive_chain()
    printed = printed_chain()
    return {k: sp.factor(sp.expand(printed[k] - derived[k])) for k in derived}


# -- majorant readings ------------------------------------------------------

READINGS = ("corrected", "printed", "case35")
C_STAR = sp.sqrt(sp.Rational(36, 13))


def h_list(reading: str = "corrected", branch: int = 1) -> tuple:
    """``(h1, h2, h3, h4)`` as sympy expressions in ``c, x``.

    ``printed``   -- the h-list as typeset (``+2c^2x^2`` outside the square);
    ``case35``    -- the face-y=0 grouping (``2c^2x^2`` inside the square);
    ``corrected`` -- ``case35`` with ``36 - 13c^2`` replaced by ``branch * (36 - 13c^2)``;
                     the true majorant is the max over ``branch = +1, -1``.
    """
    k = 36 - 13 * c**2
    if reading == "printed":
        h1 = x**2 * SQUARE * (2 * c**2 + k * x) + 2 * c**2 * x**2
    elif reading == "case35":
        h1 = x**2 * SQUARE * (2 * c**2 + k * x + 2 * c**2 * x**2)
    elif reading == "corrected":
        h1 = x**2 * SQUARE * (2 * c**2 + branch * k * x + 2 * c**2 * x**2)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    h2 = 8 * c * x * SQUARE * (1 + x) * (1 - x**2)
    h3 = 8 * SQUARE * (8 + x**2) * (1 - x**2)
    h4 = 72 * x * SQUARE * (1 - x**2)
    return h1, h2, h3, h4


def majorant_expr(reading: str = "corrected", branch: int = 1):
    h1, h2, h3, h4 = h_list(reading, branch)
    return h1 + h2 * y + h3 * y**2 + h4 * (1 - y**2)


def to_array(expr, gens) -> np.ndarray:
    """Dense coefficient array ``a[i, j, ...]`` of ``prod gens**(i, j, ...)``."""
    poly = sp.Poly(sp.expand(expr), *gens)
    deg = [poly.degree(g) for g in gens]
    out = np.zeros([max(k, 0) + 1 for k in deg])
    for mono, coeff in poly.terms():
        out[mono] = float(coeff)
    return out


@lru_cache(maxsize=None)
def majorant_branches(reading: str = "corrected") -> tuple:
    """Polynomial pieces of the majorant with the ``c``-range where each is active.

    Returns a tuple of ``(coef3d, c_lo, c_hi)``; on the overlap the majorant is
    the max of the pieces.
    """
    if reading == "corrected":
        cs = float(C_STAR)
        return ((to_array(majorant_expr(reading, 1), (c, x, y)), 0.0, cs),
                (to_array(majorant_expr(reading, -1), (c, x, y)), cs, 2.0))
    return ((to_array(majorant_expr(reading), (c, x, y)), 0.0, 2.0),)


# -- printed critical-point systems ------------------------------------------

def face_systems() -> dict:
    """Printed gradient systems on the faces ``y = 0`` and ``y = 1``.

    Each entry holds the two printed partials and the reduced brackets left
    after dividing out factors that do not vanish on ``(0,2) x (0,1)``.
    """
    dc0 = 2 * c * (4 - c**2) * ((8 - 6 * c**2) * x**4 + (39 * c**2 + 20) * x**3
                                + (8 - 6 * c**2) * x**2 - 144 * x)
    dx0 = SQUARE * (72 + 4 * c**2 * x - (108 + 39 * c**2) * x**2 + 8 * c**2 * x**3)
    bc1 = (32 * x * (1 - x) * (1 + x)**2 - 40 * c**2 * x * (1 - x) * (1 + x)**2
           - 6 * c**3 * x**2 * (2 - 13 * x + 2 * x**2)
           + 8 * c * (-32 + 30 * x**2 - 31 * x**3 + 6 * x**4))
    bx1 = (c**2 * x * (4 - 39 * x + 8 * x**2) - 4 * x * (28 - 27 * x + 8 * x**2)
           - 8 * c * (-1 - 2 * x + 3 * x**2 + 4 * x**3))
    return {
        "y=0": {
            "d_dc": dc0, "d_dx": dx0,
            "reduced": (sp.cancel(dc0 / (2 * c * (4 - c**2) * x)), sp.cancel(dx0 / SQUARE)),
            "removed": ("2c", "4 - c^2", "x", "(4 - c^2)^2"),
            "face": majorant_expr("case35").subs(y, 0),
        },
        "y=1": {
            "d_dc": (4 - c**2) * bc1, "d_dx": SQUARE * bx1,
            "reduced": (bc1, bx1),
            "removed": ("4 - c^2", "(4 - c^2)^2"),
            "face": majorant_expr("case35").subs(y, 1),
        },
    }
