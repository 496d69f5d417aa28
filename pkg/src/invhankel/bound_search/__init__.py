"""Bounding chain, majorant and certified maximization over the cuboid."""

from .cases import CaseRow, FaceEdgeReport, face_edge_values
from .certificate import OMEGA, BoundCertificate, CuboidRegion, scan_cuboid
from .chain import (
    READINGS,
    DominanceReport,
    g_chain,
    g_chain_identity_error,
    h_terms,
    majorant_m,
    printed_g_chain,
    triangle_dominance_check,
)
from .exclusion import ExclusionReport, critical_point_exclusion, interior_y0
from .verify import CLAIMED_BOUND, VerifyReport, verify_bound

__all__ = [
    "CaseRow",
    "FaceEdgeReport",
    "face_edge_values",
    "OMEGA",
    "BoundCertificate",
    "CuboidRegion",
    "scan_cuboid",
    "READINGS",
    "DominanceReport",
    "g_chain",
    "g_chain_identity_error",
    "h_terms",
    "majorant_m",
    "printed_g_chain",
    "triangle_dominance_check",
    "ExclusionReport",
    "critical_point_exclusion",
    "interior_y0",
    "CLAIMED_BOUND",
    "VerifyReport",
    "verify_bound",
]
