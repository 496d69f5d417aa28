"""The bounding chain ``9216 |H| <= |g1| + |g2||eta| + |g3||eta|^2 + |v| <= M``.

``g_chain`` evaluates the coefficient expressions obtained by re-deriving the
grouping symbolically (see :func:`.symbolic.derive_chain`).  The typeset
``g1`` carries its ``2c^2 delta^2`` term outside the ``(4 - c^2)^2`` factor and
does not satisfy the identity; it is kept as :func:`printed_g_chain` for
comparison only.

``majorant_m`` has three readings:

``corrected`` (default)
    ``h1 = x^2 (4-c^2)^2 (2c^2 + |36 - 13c^2| x + 2c^2 x^2)``.  This is the
    triangle-inequality majorant of the re-derived ``g1``; the absolute value
    matters for ``c > sqrt(36/13)``.
``printed``
    The h-list as typeset, ``h1 = x^2 (4-c^2)^2 (2c^2 + (36-13c^2) x) + 2c^2 x^2``.
``case35``
    The grouping used on the face ``y = 0``, i.e. ``corrected`` without the
    absolute value.

Only ``corrected`` dominates the chain everywhere; the other two fail for
large ``c`` (see :func:`triangle_dominance_check`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..caratheodory import CaratheodoryParams, lemma_coefficients, sample_params
from ..functionals import A_from_c, hankel_det_batch, H3_INVERSE_SCALE

__all__ = [
    "g_chain",
    "printed_g_chain",
    "h_terms",
    "majorant_m",
    "DominanceReport",
    "triangle_dominance_check",
    "g_chain_identity_error",
    "READINGS",
]

READINGS = ("corrected", "printed", "case35")
OMEGA_TOL = 1e-12


def _conj(z):
    return np.conj(z) if isinstance(z, np.ndarray) else z.conjugate()


def _chain(c, delta, eta):
    sq = (4 - c * c) ** 2
    dd = delta * _conj(delta)
    ee = eta * _conj(eta)
    g1 = delta * delta * sq * (2 * c * c - (36 - 13 * c * c) * delta + 2 * c * c * delta * delta)
    g2 = -8 * c * delta * sq * (1 + delta) * (1 - dd)
    g3 = -8 * sq * (8 + dd) * (1 - dd)
    v = 72 * delta * sq * (1 - dd) * (1 - ee)
    return g1, g2, g3, v


def g_chain(p: CaratheodoryParams):
    """``(g1, g2, g3, v)`` with ``9216 H_3(1)(f^{-1}) = g1 + g2 eta + g3 eta^2 + v rho``."""
    return _chain(p.c1, p.delta, p.eta)


def printed_g_chain(p: CaratheodoryParams):
    c, delta = p.c1, p.delta
    sq = (4 - c * c) ** 2
    g1 = delta * delta * sq * (2 * c * c - (36 - 13 * c * c) * delta) + 2 * c * c * delta * delta
    _, g2, g3, v = _chain(c, delta, p.eta)
    return g1, g2, g3, v


def h_terms(c, x, reading: str = "corrected"):
    """``(h1, h2, h3, h4)`` at real ``c, x`` (scalars or arrays)."""
    sq = (4 - c * c) ** 2
    k = 36 - 13 * c * c
    if reading == "corrected":
        h1 = x * x * sq * (2 * c * c + abs(k) * x + 2 * c * c * x * x)
    elif reading == "case35":
        h1 = x * x * sq * (2 * c * c + k * x + 2 * c * c * x * x)
    elif reading == "printed":
        h1 = x * x * sq * (2 * c * c + k * x) + 2 * c * c * x * x
    else:
        raise ValueError(f"unknown reading {reading!r}; expected one of {READINGS}")
    h2 = 8 * c * x * sq * (1 + x) * (1 - x * x)
    h3 = 8 * sq * (8 + x * x) * (1 - x * x)
    h4 = 72 * x * sq * (1 - x * x)
    return h1, h2, h3, h4


def _check_omega(c, x, y):
    for name, v, hi in (("c", c, 2.0), ("x", x, 1.0), ("y", y, 1.0)):
        a = np.asarray(v, dtype=float)
        if np.any(a < -OMEGA_TOL) or np.any(a > hi + OMEGA_TOL) or np.any(np.isnan(a)):
            raise ValueError(f"{name} outside [0, {hi:g}]")


def majorant_m(c, x, y, reading: str = "corrected"):
    """``M(c, x, y) = h1 + h2 y + h3 y^2 + h4 (1 - y^2)`` on the cuboid."""
    _check_omega(c, x, y)
    h1, h2, h3, h4 = h_terms(c, x, reading)
    return h1 + h2 * y + h3 * y * y + h4 * (1 - y * y)


@dataclass
class DominanceReport:
    samples: int
    seed: int
    reading: str
    tolerance: float
    triangle_violations: int
    majorant_violations: int
    worst_triangle_margin: float
    worst_majorant_margin: float
    worst_params: tuple
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.triangle_violations == 0 and self.majorant_violations == 0


def triangle_dominance_check(samples: int, seed: int, reading: str = "corrected",
                             boundary_bias: float | None = None,
                             tol: float = 1e-9) -> DominanceReport:
    """Sample the parametrization and test both links of the chain.

    The middle term weights ``|g2|`` and ``|g3|`` by ``|eta|`` and ``|eta|^2``
    (the triangle inequality on ``g1 + g2 eta + g3 eta^2 + v rho`` with
    ``|rho| <= 1``).  ``9216 H`` is computed independently of the chain, as the
    Hankel determinant of the inverse coefficients.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    c1, delta, eta, rho = sample_params(rng, samples, boundary_bias)
    c2, c3, c4 = lemma_coefficients(c1, delta, eta, rho)
    A = A_from_c(c1.astype(complex), c2, c3, c4)
    seq = np.stack([np.ones(samples, complex), *A], axis=1)
    lhs = np.abs(H3_INVERSE_SCALE * hankel_det_batch(seq, 3, 1))

    g1, g2, g3, v = _chain(c1, delta, eta)
    ey = np.abs(eta)
    middle = np.abs(g1) + np.abs(g2) * ey + np.abs(g3) * ey**2 + np.abs(v)
    m = majorant_m(c1, np.abs(delta), ey, reading)

    tri = lhs - middle
    maj = middle - m
    worst = int(np.argmax(np.maximum(tri, maj)))
    return DominanceReport(
        samples=samples, seed=seed, reading=reading, tolerance=tol,
        triangle_violations=int(np.count_nonzero(tri > tol)),
        majorant_violations=int(np.count_nonzero(maj > tol)),
        worst_triangle_margin=float(tri.max()),
        worst_majorant_margin=float(maj.max()),
        worst_params=(float(c1[worst]), complex(delta[worst]), complex(eta[worst]), complex(rho[worst])),
    )


def g_chain_identity_error(samples: int, seed: int, printed: bool = False) -> float:
    """Max ``|9216 H - (g1 + g2 eta + g3 eta^2 + v rho)|`` over seeded draws."""
    rng = np.random.default_rng(seed)
    c1, delta, eta, rho = sample_params(rng, samples)
    c2, c3, c4 = lemma_coefficients(c1, delta, eta, rho)
    A = A_from_c(c1.astype(complex), c2, c3, c4)
    seq = np.stack([np.ones(samples, complex), *A], axis=1)
    h = H3_INVERSE_SCALE * hankel_det_batch(seq, 3, 1)
    if printed:
        sq = (4 - c1 * c1) ** 2
        g1 = delta**2 * sq * (2 * c1**2 - (36 - 13 * c1**2) * delta) + 2 * c1**2 * delta**2
        _, g2, g3, v = _chain(c1, delta, eta)
    else:
        g1, g2, g3, v = _chain(c1, delta, eta)
    return float(np.max(np.abs(h - (g1 + g2 * eta + g3 * eta**2 + v * rho))))
