"""Exclusion of critical points of the majorant.

``interior``
    ``dM/dy = 8 (4-c^2)^2 (1-x^2) [c x (1+x) + 2 (8-x)(1-x) y]`` vanishes on the
    open cuboid only at ``y0(c, x) = -c x (1+x) / (2 (8-x)(1-x))``.  Each factor
    of the numerator and denominator is linear in one variable, so its sign on
    the open box follows from its endpoint values; ``y0 < 0`` is also checked on
    a grid.
``y=0`` / ``y=1``
    The printed partials ``dM/dc``, ``dM/dx`` on the faces.  Float mode samples
    them on a cell-centred grid of ``(0,2) x (0,1)`` and flags cells where both
    change sign.  Interval mode bounds the reduced brackets (printed partials
    with sign-definite factors divided out) on each closed cell, subdividing up
    to ``max_depth``; cells it cannot clear are reported as undecided.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import sympy as sp

from . import polybox
from .symbolic import c, face_systems, to_array, x

__all__ = ["ExclusionReport", "critical_point_exclusion", "interior_y0"]

FACES = ("interior", "y=0", "y=1")


@dataclass
class ExclusionReport:
    face: str
    mode: str
    resolution: int
    common_zero_cells: list = field(default_factory=list)
    undecided_cells: list = field(default_factory=list)
    min_normalized_gradient: float = float("nan")
    cells_checked: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.common_zero_cells and not self.undecided_cells


def interior_y0(c_, x_):
    """The only root in ``y`` of ``dM/dy`` for ``c in (0,2)``, ``x in (0,1)``."""
    return -c_ * x_ * (1 + x_) / (2 * (8 - x_) * (1 - x_))


def _open_grid(resolution: int):
    cs = (np.arange(resolution) + 0.5) * (2.0 / resolution)
    xs = (np.arange(resolution) + 0.5) / resolution
    return cs, xs


def _linear_factor_positive(coeff_const, coeff_lin, lo, hi):
    # a + b t > 0 on (lo, hi) iff it is >= 0 at both ends and not zero at both
    a_lo, a_hi = coeff_const + coeff_lin * lo, coeff_const + coeff_lin * hi
    return a_lo >= 0 and a_hi >= 0 and (a_lo > 0 or a_hi > 0)


def _interior(resolution: int) -> ExclusionReport:
    rep = ExclusionReport(face="interior", mode="closed-form", resolution=resolution)
    # numerator c * x * (1 + x), denominator 2 * (8 - x) * (1 - x)
    factors = {
        "c on (0,2)": (0.0, 1.0, 0.0, 2.0),
        "x on (0,1)": (0.0, 1.0, 0.0, 1.0),
        "1 + x on (0,1)": (1.0, 1.0, 0.0, 1.0),
        "8 - x on (0,1)": (8.0, -1.0, 0.0, 1.0),
        "1 - x on (0,1)": (1.0, -1.0, 0.0, 1.0),
    }
    for label, (a, b, lo, hi) in factors.items():
        ok = _linear_factor_positive(a, b, lo, hi)
        rep.notes.append(f"{label}: {'positive' if ok else 'NOT positive'}")
        if not ok:
            rep.undecided_cells.append(label)
    cs, xs = _open_grid(resolution)
    y0 = interior_y0(cs[:, None], xs[None, :])
    bad = np.argwhere(~(y0 < 0))
    rep.common_zero_cells = [(float(cs[i]), float(xs[j])) for i, j in bad]
    rep.cells_checked = y0.size
    rep.min_normalized_gradient = float(-y0.max())
    rep.notes.append(f"max y0 on grid = {float(y0.max()):.3e}")
    return rep


def _float_mode(face: str, resolution: int) -> ExclusionReport:
    sys_ = face_systems()[face]
    fc = sp.lambdify((c, x), sys_["d_dc"], "numpy")
    fx = sp.lambdify((c, x), sys_["d_dx"], "numpy")
    cs, xs = _open_grid(resolution)
    C, X = np.meshgrid(cs, xs, indexing="ij")
    a = np.asarray(fc(C, X), dtype=float)
    b = np.asarray(fx(C, X), dtype=float)
    rep = ExclusionReport(face=face, mode="float", resolution=resolution)

    bad_nodes = ~np.isfinite(a) | ~np.isfinite(b) | (a == 0) | (b == 0)

    def sign_change(v):
        corners = np.stack([v[:-1, :-1], v[1:, :-1], v[:-1, 1:], v[1:, 1:]])
        return (corners.min(axis=0) < 0) & (corners.max(axis=0) > 0)

    def any_corner(mask):
        return mask[:-1, :-1] | mask[1:, :-1] | mask[:-1, 1:] | mask[1:, 1:]

    undecided = any_corner(bad_nodes)
    both = sign_change(a) & sign_change(b) & ~undecided
    rep.common_zero_cells = [(float(cs[i]), float(xs[j])) for i, j in np.argwhere(both)]
    rep.undecided_cells = [(float(cs[i]), float(xs[j])) for i, j in np.argwhere(undecided)]
    rep.cells_checked = int(both.size)
    na = np.abs(a) / np.abs(a).max()
    nb = np.abs(b) / np.abs(b).max()
    rep.min_normalized_gradient = float(np.maximum(na, nb).min())
    rep.notes.append("sign changes sampled at cell corners; a cell with no sign change "
                     "in either partial cannot hold a transversal common zero")
    return rep


def _interval_mode(face: str, resolution: int, max_depth: int) -> ExclusionReport:
    sys_ = face_systems()[face]
    polys = [to_array(p, (c, x)) for p in sys_["reduced"]]
    rep = ExclusionReport(face=face, mode="interval", resolution=resolution)
    rep.notes.append("divided out on the open domain: " + ", ".join(sys_["removed"]))
    ic, ix = np.meshgrid(np.arange(resolution), np.arange(resolution), indexing="ij")
    wc, wx = 2.0 / resolution, 1.0 / resolution
    lo = np.stack([ic.ravel() * wc, ix.ravel() * wx], axis=1)
    hi = lo + [wc, wx]
    rep.cells_checked = lo.shape[0]
    for depth in range(max_depth + 1):
        cleared = np.zeros(lo.shape[0], dtype=bool)
        for p in polys:
            pl, pu = polybox.box_bounds(p, lo, hi)
            cleared |= (pl > 0) | (pu < 0)
        lo, hi = lo[~cleared], hi[~cleared]
        if lo.shape[0] == 0 or depth == max_depth:
            break
        mid = 0.5 * (lo + hi)
        quads = []
        for sc in (0, 1):
            for sx in (0, 1):
                qlo = np.where([sc, sx], mid, lo)
                qhi = np.where([sc, sx], hi, mid)
                quads.append((qlo, qhi))
        lo = np.concatenate([q[0] for q in quads])
        hi = np.concatenate([q[1] for q in quads])
    keep = []
    for a, b in zip(lo, hi):
        corner = _isolated_corner_zero(sys_["reduced"], polys, a, b)
        if corner is not None:
            box = [(float(a[k]), float(b[k])) for k in range(2)]
            rep.notes.append(f"cell c in {box[0]}, x in {box[1]}: only common zero is "
                             f"the domain corner {corner} (Krawczyk)")
        else:
            keep.append(((float(a[0]), float(b[0])), (float(a[1]), float(b[1]))))
    rep.undecided_cells = keep
    if rep.undecided_cells:
        rep.notes.append(f"{len(rep.undecided_cells)} cells undecided at depth {max_depth}")
    return rep


def _interval_matmul(Y: np.ndarray, lo: np.ndarray, hi: np.ndarray):
    # real matrix times interval matrix
    pos, neg = np.clip(Y, 0, None), np.clip(Y, None, 0)
    return pos @ lo + neg @ hi, pos @ hi + neg @ lo


def _isolated_corner_zero(exprs, polys, lo, hi):
    """Domain corner inside ``[lo, hi]`` that is the unique common zero there, else None.

    Runs the Krawczyk test on the box mirrored around the corner: with
    ``F(corner) = 0`` and ``Y = J(corner)^-1``, ``K = (I - Y J(X)) (X - corner)``
    strictly inside ``X - corner`` proves the corner is the only zero in ``X``.
    """
    for cc in (0, 2):
        for xc in (0, 1):
            z = np.array([cc, xc], dtype=float)
            if not (np.all(lo <= z) and np.all(z <= hi)):
                continue
            if any(sp.sympify(e).subs({c: cc, x: xc}) != 0 for e in exprs):
                continue
            J0 = np.array([[float(sp.diff(e, v).subs({c: cc, x: xc})) for v in (c, x)]
                           for e in exprs])
            if abs(np.linalg.det(J0)) < 1e-12:
                continue
            Y = np.linalg.inv(J0)
            rad = np.maximum(hi - lo, 1e-12)
            box_lo, box_hi = (z - rad)[None, :], (z + rad)[None, :]
            Jlo = np.empty((2, 2))
            Jhi = np.empty((2, 2))
            for i, p in enumerate(polys):
                for j in range(2):
                    Jlo[i, j], Jhi[i, j] = (v[0] for v in polybox.box_bounds(
                        polybox.derivative(p, j), box_lo, box_hi))
            YJlo, YJhi = _interval_matmul(Y, Jlo, Jhi)
            Mlo, Mhi = np.eye(2) - YJhi, np.eye(2) - YJlo
            # (I - Y J(X)) times the symmetric interval [-rad, rad]
            spread = np.maximum(np.abs(Mlo), np.abs(Mhi)) @ rad
            if np.all(spread < rad):
                return (cc, xc)
    return None


def critical_point_exclusion(face: str, resolution: int = 512, mode: str = "float",
                             max_depth: int = 8) -> ExclusionReport:
    """Check that the majorant has no critical point on the given open face."""
    if face not in FACES:
        raise ValueError(f"face must be one of {FACES}")
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    if face == "interior":
        return _interior(resolution)
    if mode == "float":
        return _float_mode(face, resolution)
    if mode == "interval":
        return _interval_mode(face, resolution, max_depth)
    raise ValueError(f"mode must be 'float' or 'interval', got {mode!r}")
