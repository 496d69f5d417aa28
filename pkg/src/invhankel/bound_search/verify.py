"""End-to-end verification of ``|H_3(1)(f^{-1})| <= 1/9`` and its sharpness."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..extremal import ExtremalReport, extremal_witness
from .cases import FaceEdgeReport, face_edge_values
from .certificate import OMEGA, BoundCertificate, CuboidRegion, scan_cuboid
from .chain import DominanceReport, triangle_dominance_check
from .exclusion import critical_point_exclusion

__all__ = ["VerifyReport", "verify_bound", "CLAIMED_BOUND"]

CLAIMED_BOUND = Fraction(1, 9)
SHARP, BOUND_ONLY, FAILED = "SHARP", "BOUND-ONLY", "FAILED"


@dataclass
class VerifyReport:
    status: str
    bound: float
    claimed: Fraction
    witness: object
    certificate: BoundCertificate
    cases: FaceEdgeReport
    exclusion: dict
    dominance: DominanceReport
    extremal: ExtremalReport | None
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != FAILED


def verify_bound(include_extremal: bool = True, grid_step: float = 0.01,
                 region: CuboidRegion = OMEGA, reading: str = "corrected",
                 dominance_samples: int = 10_000, seed: int = 0,
                 exclusion_resolution: int = 512, bound_tolerance: float = 1.2e-4,
                 witness_tolerance: float = 1e-12, exact: bool = True,
                 workers: int = 1) -> VerifyReport:
    """Run every sub-check and combine them into one status.

    ``SHARP`` needs the certified bound within ``bound_tolerance`` of 1/9 and
    the extremal witness at 1/9; ``BOUND-ONLY`` is the same without the witness.
    """
    failures = []
    cases = face_edge_values(reading)
    if not cases.passed:
        failures.append("case analysis: " + ", ".join(
            [r.case + " " + r.region for r in cases.rows if not r.claim_holds]
            + [k for k, (ok, *_) in cases.checks.items() if not ok]))

    exclusion = {face: critical_point_exclusion(face, exclusion_resolution)
                 for face in ("interior", "y=0", "y=1")}
    failures += [f"critical points on {f}" for f, rep in exclusion.items() if not rep.passed]

    dominance = triangle_dominance_check(dominance_samples, seed, reading)
    if not dominance.passed:
        failures.append(f"dominance chain: {dominance.triangle_violations} triangle, "
                        f"{dominance.majorant_violations} majorant violations")

    cert = scan_cuboid(grid_step, refine=True, region=region, reading=reading, workers=workers)
    bound = cert.induced_h3_bound
    if bound > float(CLAIMED_BOUND) + bound_tolerance:
        failures.append(f"certified bound {bound!r} exceeds 1/9 + {bound_tolerance}")
    if cert.unresolved_cells:
        failures.append(f"{cert.unresolved_cells} certificate cells unresolved")

    ext, witness = None, None
    if include_extremal:
        ext = extremal_witness(exact=exact)
        witness = abs(ext.h3_inverse)
        tol = 0 if exact else witness_tolerance
        if not ext.passed or abs(witness - CLAIMED_BOUND) > tol:
            failures.append(f"extremal witness {witness!r} does not attain 1/9")
        # a restricted region need not contain the extremal point
        if region == OMEGA and bound + witness_tolerance < float(witness):
            failures.append("witness exceeds the certified bound")

    if failures:
        status = FAILED
    else:
        status = SHARP if include_extremal else BOUND_ONLY
    return VerifyReport(status=status, bound=bound, claimed=CLAIMED_BOUND, witness=witness,
                        certificate=cert, cases=cases, exclusion=exclusion,
                        dominance=dominance, extremal=ext, failures=failures)
