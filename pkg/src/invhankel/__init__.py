"""Verification toolkit for the third Hankel determinant of inverse functions.

The headline check is ``|H_3(1)(f^{-1})| <= 1/9`` for starlike functions of
order 1/2, with equality for ``f0(z) = z / (1 - z^3)^(1/3)``.
"""

__version__ = "0.1.0"

from .caratheodory import (
    CaratheodoryParams,
    HerglotzMeasure,
    c_from_params,
    p_from_measure,
    starlike_from_p,
    verify_membership,
)
from .extremal import extremal_witness
from .functionals import (
    InverseCoefficients,
    SchlichtCoefficients,
    A_from_c,
    a_from_c,
    h3_direct,
    h3_inverse,
    h3_inverse_poly,
    hankel_det,
    inverse_from_direct,
)
from .invariance import sample_campaign
from .series import TruncatedSeries, compose, derive, mul, revert

__all__ = [
    "__version__",
    "CaratheodoryParams",
    "HerglotzMeasure",
    "c_from_params",
    "p_from_measure",
    "starlike_from_p",
    "verify_membership",
    "extremal_witness",
    "InverseCoefficients",
    "SchlichtCoefficients",
    "A_from_c",
    "a_from_c",
    "h3_direct",
    "h3_inverse",
    "h3_inverse_poly",
    "hankel_det",
    "inverse_from_direct",
    "sample_campaign",
    "TruncatedSeries",
    "compose",
    "derive",
    "mul",
    "revert",
]
