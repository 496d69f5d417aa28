"""Edge, face and vertex evaluations of the majorant, one row per proof case.

Every row carries the closed form as typeset, the bound claimed for it, and
what a dense sampling of both the closed form and the majorant restricted to
the same edge or face actually shows.  A row whose closed form disagrees with
the majorant is flagged (``form_matches = False``) but only a violated bound
fails the report.  Sampling grids always include the claimed maximizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt
from typing import Callable

import numpy as np

from .chain import majorant_m
from .exclusion import critical_point_exclusion

__all__ = ["CaseRow", "FaceEdgeReport", "face_edge_values", "VERTEX_CLAIMS"]

EDGE_POINTS = 2001
FACE_POINTS = 401
TOL = 1e-9
X1 = sqrt(2.0 / 3.0)
PEAK_Y0 = 256 * sqrt(6.0)

VERTEX_CLAIMS = {
    (0, 0, 0): 0.0, (2, 0, 0): 0.0, (2, 1, 0): 0.0, (2, 1, 1): 0.0, (2, 0, 1): 0.0,
    (0, 1, 0): 576.0, (0, 1, 1): 576.0, (0, 0, 1): 1024.0,
}


@dataclass
class CaseRow:
    case: str
    region: str
    printed: str
    claimed_bound: float
    claimed_at: tuple | None
    observed_form_max: float
    observed_max: float
    observed_argmax: tuple
    form_deviation: float
    form_matches: bool
    claim_holds: bool
    note: str = ""


@dataclass
class FaceEdgeReport:
    reading: str
    rows: list
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.claim_holds for r in self.rows) and all(ok for ok, *_ in self.checks.values())

    @property
    def mismatched_forms(self) -> list:
        return [r.case for r in self.rows if not r.form_matches]


def _axis(lo, hi, n, extra=()):
    return np.unique(np.concatenate([np.linspace(lo, hi, n), np.asarray(extra, float)]))


def _sq(c):
    return (4 - c * c) ** 2


# (case, region, printed text, closed form, fixed coordinates, free axes, claimed bound, claimed maximizer)
# ``fixed`` maps coordinate index -> value; ``free`` lists (index, lo, hi).
_EDGES_AND_FACES: list[tuple] = [
    ("2.1", "x=1, y=0", "(4-c^2)^2 (36-13c^2) <= 576",
     lambda c: _sq(c) * (36 - 13 * c * c), {1: 1.0, 2: 0.0}, [(0, 0.0, 2.0)], 576.0, (0.0, 1.0, 0.0)),
    ("2.1", "x=1, y=1", "(4-c^2)^2 (36-13c^2) <= 576",
     lambda c: _sq(c) * (36 - 13 * c * c), {1: 1.0, 2: 1.0}, [(0, 0.0, 2.0)], 576.0, (0.0, 1.0, 1.0)),
    ("2.2", "x=0, y=1", "64 (4-c^2)^2 <= 1024",
     lambda c: 64 * _sq(c), {1: 0.0, 2: 1.0}, [(0, 0.0, 2.0)], 1024.0, (0.0, 0.0, 1.0)),
    ("2.3", "c=0, y=0", "-576x^3 + 1152x <= 256 sqrt(6)",
     lambda x: -576 * x**3 + 1152 * x, {0: 0.0, 2: 0.0}, [(1, 0.0, 1.0)], PEAK_Y0, (0.0, X1, 0.0)),
    ("2.4", "c=0, y=1", "1024 - 896x^2 + 576x^3 - 128x^4 <= 1024",
     lambda x: 1024 - 896 * x**2 + 576 * x**3 - 128 * x**4, {0: 0.0, 2: 1.0}, [(1, 0.0, 1.0)],
     1024.0, (0.0, 0.0, 1.0)),
    ("2.5", "c=0, x=0", "1024 y^2 <= 1024",
     lambda y: 1024 * y**2, {0: 0.0, 1: 0.0}, [(2, 0.0, 1.0)], 1024.0, (0.0, 0.0, 1.0)),
    ("2.6", "c=0, x=1", "576",
     lambda y: 576 + 0 * y, {0: 0.0, 1: 1.0}, [(2, 0.0, 1.0)], 576.0, (0.0, 1.0, 0.0)),
    ("2.7", "c=2, x=0", "0", lambda y: 0 * y, {0: 2.0, 1: 0.0}, [(2, 0.0, 1.0)], 0.0, None),
    ("2.7", "c=2, x=1", "0", lambda y: 0 * y, {0: 2.0, 1: 1.0}, [(2, 0.0, 1.0)], 0.0, None),
    ("2.7", "c=2, y=0", "0", lambda x: 0 * x, {0: 2.0, 2: 0.0}, [(1, 0.0, 1.0)], 0.0, None),
    ("2.7", "c=2, y=1", "0", lambda x: 0 * x, {0: 2.0, 2: 1.0}, [(1, 0.0, 1.0)], 0.0, None),
    ("2.7", "x=0, y=0", "0", lambda c: 0 * c, {1: 0.0, 2: 0.0}, [(0, 0.0, 2.0)], 0.0, None),
    ("3.1", "c=2", "0", lambda x, y: 0 * x * y, {0: 2.0}, [(1, 0.0, 1.0), (2, 0.0, 1.0)], 0.0, None),
    ("3.2", "c=0", "1152 - 576x^3 + (1024 - 1152x - 896x^2 + 1152x^3 - 128x^4) y^2 <= 1024",
     lambda x, y: 1152 - 576 * x**3 + (1024 - 1152 * x - 896 * x**2 + 1152 * x**3 - 128 * x**4) * y**2,
     {0: 0.0}, [(1, 0.0, 1.0), (2, 0.0, 1.0)], 1024.0, (0.0, 0.0, 1.0)),
    ("3.3", "x=0", "64 (4-c^2)^2 y^2 <= 1024",
     lambda c, y: 64 * _sq(c) * y**2, {1: 0.0}, [(0, 0.0, 2.0), (2, 0.0, 1.0)], 1024.0, (0.0, 0.0, 1.0)),
    ("3.4", "x=1", "(4-c^2)^2 (36-c^2) <= 576",
     lambda c, y: _sq(c) * (36 - c * c) + 0 * y, {1: 1.0}, [(0, 0.0, 2.0), (2, 0.0, 1.0)],
     576.0, (0.0, 1.0, 0.0)),
    ("3.5", "y=0", "(4-c^2)^2 (72x(1-x^2) + x^2 (2c^2 + (36-13c^2)x + 2c^2x^2)) <= 256 sqrt(6)",
     lambda c, x: _sq(c) * (72 * x * (1 - x * x) + x * x * (2 * c * c + (36 - 13 * c * c) * x
                                                             + 2 * c * c * x * x)),
     {2: 0.0}, [(0, 0.0, 2.0), (1, 0.0, 1.0)], PEAK_Y0, (0.0, X1, 0.0)),
    ("3.6", "y=1", "(4-c^2)^2 [x^2 (2c^2x^2 + (36-13c^2)x + 2c^2) + 8cx(1+x)(1-x^2) "
                   "+ 8(8+x^2)(1-x^2)] <= 1024",
     lambda c, x: _sq(c) * (x * x * (2 * c * c * x * x + (36 - 13 * c * c) * x + 2 * c * c)
                            + 8 * c * x * (1 + x) * (1 - x * x) + 8 * (8 + x * x) * (1 - x * x)),
     {2: 1.0}, [(0, 0.0, 2.0), (1, 0.0, 1.0)], 1024.0, (0.0, 0.0, 1.0)),
]


def _row(case, region, printed, form: Callable, fixed, free, bound, at, reading) -> CaseRow:
    n = EDGE_POINTS if len(free) == 1 else FACE_POINTS
    axes = []
    for idx, lo, hi in free:
        extra = [at[idx]] if at is not None else []
        axes.append(_axis(lo, hi, n, extra))
    grids = np.meshgrid(*axes, indexing="ij")
    pts = [None, None, None]
    for idx, v in fixed.items():
        pts[idx] = np.full(grids[0].shape, v)
    for (idx, _, _), g in zip(free, grids):
        pts[idx] = g
    m = majorant_m(*pts, reading=reading)
    fv = np.asarray(form(*grids), dtype=float)
    k = int(np.argmax(m))
    scale = max(1.0, float(np.abs(m).max()))
    dev = float(np.abs(fv - m).max())
    observed = float(m.flat[k])
    return CaseRow(
        case=case, region=region, printed=printed, claimed_bound=bound, claimed_at=at,
        observed_form_max=float(fv.max()), observed_max=observed,
        observed_argmax=tuple(float(p.flat[k]) for p in pts),
        form_deviation=dev, form_matches=dev <= TOL * scale,
        claim_holds=observed <= bound + TOL * max(1.0, bound),
    )


def _interior_row() -> CaseRow:
    rep = critical_point_exclusion("interior", resolution=512)
    return CaseRow(
        case="1", region="interior", printed="y0(c,x) = -cx(1+x) / (2(8-x)(1-x)) < 0",
        claimed_bound=0.0, claimed_at=None,
        observed_form_max=-rep.min_normalized_gradient, observed_max=-rep.min_normalized_gradient,
        observed_argmax=(), form_deviation=0.0, form_matches=True, claim_holds=rep.passed,
        note="no interior critical point (y0 < 0)",
    )


def _vertex_row(reading) -> CaseRow:
    worst, dev, best, arg = 0.0, 0.0, -np.inf, ()
    for v, claimed in VERTEX_CLAIMS.items():
        val = float(majorant_m(*map(float, v), reading=reading))
        dev = max(dev, abs(val - claimed))
        if val > best:
            best, arg = val, tuple(map(float, v))
    return CaseRow(
        case="4", region="vertices", printed="values 0, 576, 1024",
        claimed_bound=1024.0, claimed_at=(0.0, 0.0, 1.0),
        observed_form_max=max(VERTEX_CLAIMS.values()), observed_max=best, observed_argmax=arg,
        form_deviation=dev, form_matches=dev <= TOL * 1024, claim_holds=best <= 1024 + TOL * 1024,
        note="listed vertices: " + ", ".join(f"M{k}={v:g}" for k, v in VERTEX_CLAIMS.items()),
    )


def _check(rows, case, region, value, at=None, tol=TOL):
    row = next(r for r in rows if r.case == case and r.region == region)
    ok = abs(row.observed_max - value) <= tol * max(1.0, abs(value))
    if at is not None:
        ok = ok and all(abs(a - b) <= 1e-12 for a, b in zip(row.observed_argmax, at))
    return ok, row.observed_max, value, row.observed_argmax


def face_edge_values(reading: str = "corrected") -> FaceEdgeReport:
    """Evaluate every closed-form edge/face/vertex expression of the case analysis."""
    rows = [_interior_row()]
    rows += [_row(*entry, reading=reading) for entry in _EDGES_AND_FACES]
    rows.append(_vertex_row(reading))
    c2_rows = [r for r in rows if r.region.startswith("c=2")]
    checks = {
        "edge x=1 max 576 at c=0": _check(rows, "2.1", "x=1, y=0", 576.0, (0.0, 1.0, 0.0)),
        "edge c=0,y=1 max 1024 at x=0": _check(rows, "2.4", "c=0, y=1", 1024.0, (0.0, 0.0, 1.0)),
        "edge c=0,y=0 max 256 sqrt(6) at x=sqrt(2/3)": _check(rows, "2.3", "c=0, y=0", PEAK_Y0,
                                                             (0.0, X1, 0.0)),
        "face y=1 max 1024 at (0,0)": _check(rows, "3.6", "y=1", 1024.0, (0.0, 0.0, 1.0)),
        "face y=0 max 256 sqrt(6)": _check(rows, "3.5", "y=0", PEAK_Y0),
        "all c=2 entries 0": (all(abs(r.observed_max) <= TOL for r in c2_rows),
                              max(abs(r.observed_max) for r in c2_rows), 0.0, ()),
        "vertices as listed": (rows[-1].form_matches, rows[-1].form_deviation, 0.0, ()),
    }
    return FaceEdgeReport(reading=reading, rows=rows, checks=checks)
