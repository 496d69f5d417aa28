"""Members of the Carathéodory class P and the starlike functions they drive.

Three routes into the class are provided:

* :func:`c_from_params` -- the classical parametrization of ``c_2, c_3, c_4``
  by ``c_1 in [0, 2]`` and three points ``delta, eta, rho`` of the closed disk;
* :func:`p_from_measure` -- finite atomic Herglotz measures on the circle;
* :func:`sample_params` -- seeded random draws of the parametrization.

:func:`starlike_from_p` solves ``z f' = (alpha + (1 - alpha) p) f`` for the
Taylor coefficients of a starlike function of order ``alpha``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .series import TruncatedSeries

__all__ = [
    "CaratheodoryParams",
    "HerglotzMeasure",
    "MembershipReport",
    "lemma_coefficients",
    "c_from_params",
    "p_from_measure",
    "starlike_from_p",
    "herglotz_starlike",
    "verify_membership",
    "sample_params",
    "sample_unit_disk",
    "toeplitz_min_eigenvalue",
]

MODULUS_TOL = 1e-12


def _exceeds_one(z) -> bool:
    if isinstance(z, (float, complex)):
        return abs(z) > 1 + MODULUS_TOL
    return abs(z) > 1


@dataclass(frozen=True)
class CaratheodoryParams:
    """``(c1, delta, eta, rho)`` with ``c1`` real in ``[0, 2]`` and the rest in the closed disk."""

    c1: object
    delta: object = 0
    eta: object = 0
    rho: object = 0

    def __post_init__(self):
        c1 = self.c1
        if isinstance(c1, complex):
            if c1.imag != 0:
                raise ValueError(f"c1 must be real, got {c1!r}")
            object.__setattr__(self, "c1", c1.real)
        if not (0 <= self.c1 <= 2):
            raise ValueError(f"c1 must lie in [0, 2], got {self.c1!r}")
        for name in ("delta", "eta", "rho"):
            if _exceeds_one(getattr(self, name)):
                raise ValueError(f"|{name}| must be <= 1, got {getattr(self, name)!r}")


def _conj(z):
    if isinstance(z, np.ndarray):
        return np.conj(z)
    return z.conjugate()


def lemma_coefficients(c1, delta, eta, rho):
    """``(c2, c3, c4)`` from ``(c1, delta, eta, rho)``.

    Works on exact scalars, complex floats, or numpy arrays.  No range checks;
    :func:`c_from_params` is the validated entry point.  Both ``4 - c1^2``
    factors in the ``c3`` line are read as ``4 - c1**2``.
    """
    t = 4 - c1 * c1
    dd = delta * _conj(delta)
    ee = eta * _conj(eta)
    c2 = (c1 * c1 + delta * t) / 2
    c3 = (c1**3 + 2 * t * c1 * delta - t * c1 * delta * delta
          + 2 * t * (1 - dd) * eta) / 4
    c4 = (c1**4
          + t * delta * (c1 * c1 * (delta * delta - 3 * delta + 3) + 4 * delta)
          - 4 * t * (1 - dd) * (c1 * (delta - 1) * eta + _conj(delta) * eta * eta
                                - (1 - ee) * rho)) / 8
    return c2, c3, c4


def c_from_params(p: CaratheodoryParams):
    return lemma_coefficients(p.c1, p.delta, p.eta, p.rho)


@dataclass(frozen=True)
class HerglotzMeasure:
    """Finite probability measure on the unit circle, as ``(weight, point)`` atoms."""

    atoms: tuple

    def __post_init__(self):
        atoms = tuple((w, x) for w, x in self.atoms)
        if not atoms:
            raise ValueError("measure needs at least one atom")
        object.__setattr__(self, "atoms", atoms)
        total = sum(w for w, _ in atoms)
        exact = all(not isinstance(v, (float, complex)) for a in atoms for v in a)
        for w, x in atoms:
            if w < 0:
                raise ValueError(f"negative weight {w!r}")
            if exact:
                if x * _conj(x) != 1:
                    raise ValueError(f"atom {x!r} is off the unit circle")
            elif abs(abs(x) - 1) > MODULUS_TOL:
                raise ValueError(f"atom {x!r} is off the unit circle")
        if (total != 1) if exact else abs(total - 1) > MODULUS_TOL:
            raise ValueError(f"weights sum to {total!r}, not 1")

    @classmethod
    def roots_of_unity(cls, k: int) -> "HerglotzMeasure":
        """Equal weights on the k-th roots of unity; drives ``(1 + z^k)/(1 - z^k)``."""
        return cls(tuple((1.0 / k, cmath.exp(2j * math.pi * j / k)) for j in range(k)))

    @classmethod
    def from_angles(cls, weights: Sequence[float], angles: Sequence[float]) -> "HerglotzMeasure":
        return cls(tuple((float(w), cmath.exp(1j * float(t))) for w, t in zip(weights, angles)))

    def moment(self, n: int):
        return sum(w * x**n for w, x in self.atoms)


def p_from_measure(m: HerglotzMeasure, order: int) -> TruncatedSeries:
    """``p(z) = sum_k w_k (1 + x_k z)/(1 - x_k z)``, i.e. ``c_n = 2 sum_k w_k x_k^n``."""
    return TruncatedSeries([1] + [2 * m.moment(n) for n in range(1, order + 1)], order)


def starlike_from_p(p: TruncatedSeries, alpha=Fraction(1, 2), order: int | None = None) -> TruncatedSeries:
    """Coefficients ``a_1 .. a_N`` of ``f`` with ``z f'/f = alpha + (1 - alpha) p``.

    Comparing coefficients gives ``(n - 1) a_n = (1 - alpha) sum_{k=1}^{n-1} c_k a_{n-k}``
    with ``a_1 = 1``.  ``p`` must reach order ``N - 1``.
    """
    if p[0] != 1:
        raise ValueError(f"p must have constant term 1, got {p[0]!r}")
    if order is None:
        order = p.order + 1
    if p.order < order - 1:
        raise ValueError(f"p of order {p.order} cannot determine f to order {order}")
    if not (0 <= alpha < 1):
        raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
    beta = 1 - alpha
    a = [0 * p[0], p[0]]
    for n in range(2, order + 1):
        s = 0
        for k in range(1, n):
            s = s + p[k] * a[n - k]
        a.append(beta * s / (n - 1))
    return TruncatedSeries(a, order)


def herglotz_starlike(m: HerglotzMeasure, alpha: float = 0.5):
    """Closed form ``f(z) = z prod_k (1 - x_k z)^(-2 (1 - alpha) w_k)`` and its derivative.

    Returns ``(f, df)`` callables on complex scalars or arrays.
    """
    ws = np.array([w for w, _ in m.atoms], dtype=float)
    xs = np.array([x for _, x in m.atoms], dtype=complex)
    expo = -2.0 * (1.0 - alpha) * ws

    def f(z):
        z = np.asarray(z, dtype=complex)
        out = z.copy()
        for e, x in zip(expo, xs):
            out = out * (1 - x * z) ** e
        return out

    def df(z):
        z = np.asarray(z, dtype=complex)
        logd = 1 / z + sum(-e * x / (1 - x * z) for e, x in zip(expo, xs))
        return f(z) * logd

    return f, df


@dataclass
class MembershipReport:
    alpha: float
    min_real_part: float
    argmin: complex
    n_points: int
    tolerance: float
    passed: bool


def verify_membership(f, alpha: float, radii: Sequence[float] | None = None,
                      n_angles: int = 2048, *, derivative: Callable | None = None,
                      tol: float = 1e-9) -> MembershipReport:
    """Sample ``Re(z f'(z)/f(z))`` on concentric circles and compare with ``alpha``.

    This is a falsification check: a pass means no sampled point violated the
    inequality, not that ``f`` belongs to the class.

    ``f`` is a :class:`TruncatedSeries` (evaluated as a polynomial) or a
    callable, in which case ``derivative`` must be given.
    """
    if radii is None:
        radii = np.linspace(0.05, 0.999, 40)
    radii = np.asarray(radii, dtype=float)
    if np.any(radii <= 0) or np.any(radii >= 1):
        raise ValueError("radii must lie in (0, 1)")
    theta = np.linspace(0, 2 * np.pi, n_angles, endpoint=False)
    z = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()

    if isinstance(f, TruncatedSeries):
        fs = TruncatedSeries.floating(f.coeffs)
        coeffs = np.array(fs.coeffs, dtype=complex)
        dcoeffs = coeffs[1:] * np.arange(1, len(coeffs))
        fv = np.polyval(coeffs[::-1], z)
        dv = np.polyval(dcoeffs[::-1], z)
    else:
        if derivative is None:
            raise ValueError("callable f needs its derivative")
        with np.errstate(all="ignore"):
            fv = np.asarray(f(z), dtype=complex)
            dv = np.asarray(derivative(z), dtype=complex)
    if np.any(fv == 0) or not (np.all(np.isfinite(fv)) and np.all(np.isfinite(dv))):
        raise ValueError("f has a zero or singularity on the sampling grid")
    q = (z * dv / fv).real
    i = int(np.argmin(q))
    lo = float(q[i])
    return MembershipReport(alpha=float(alpha), min_real_part=lo, argmin=complex(z[i]),
                            n_points=int(z.size), tolerance=tol,
                            passed=bool(lo > alpha - tol))


def sample_unit_disk(rng: np.random.Generator, size: int, boundary_bias: float | None = None) -> np.ndarray:
    """Points of the closed unit disk.

    Default: uniform, by rejection from the square.  With ``boundary_bias = b``
    the modulus is Beta(b, 1)-distributed (mass pushed toward the circle) and the
    argument is uniform.
    """
    if boundary_bias is not None:
        r = rng.beta(boundary_bias, 1.0, size)
        return r * np.exp(1j * rng.uniform(0, 2 * np.pi, size))
    out = np.empty(size, dtype=complex)
    filled = 0
    while filled < size:
        need = size - filled
        pts = rng.uniform(-1, 1, (2, 2 * need + 8))
        z = pts[0] + 1j * pts[1]
        z = z[np.abs(z) <= 1][:need]
        out[filled:filled + z.size] = z
        filled += z.size
    return out


def sample_params(rng: np.random.Generator, size: int, boundary_bias: float | None = None):
    """Arrays ``(c1, delta, eta, rho)``; ``c1`` uniform on ``[0, 2]``."""
    c1 = rng.uniform(0.0, 2.0, size)
    delta = sample_unit_disk(rng, size, boundary_bias)
    eta = sample_unit_disk(rng, size, boundary_bias)
    rho = sample_unit_disk(rng, size, boundary_bias)
    return c1, delta, eta, rho


def toeplitz_min_eigenvalue(c1, c2, c3, c4) -> np.ndarray:
    """Smallest eigenvalue of the Hermitian Toeplitz matrix ``[c_{j-k}]`` with ``c_0 = 2``.

    The coefficients are realizable by a member of P iff this matrix is positive
    semidefinite.  Accepts scalars or equal-length arrays.
    """
    cs = [np.broadcast_to(np.asarray(v, dtype=complex), np.broadcast(c1, c2, c3, c4).shape)
          for v in (2, c1, c2, c3, c4)]
    shape = cs[0].shape
    T = np.empty(shape + (5, 5), dtype=complex)
    for j in range(5):
        for k in range(5):
            T[..., j, k] = cs[j - k] if j >= k else np.conj(cs[k - j])
    return np.linalg.eigvalsh(T)[..., 0]
