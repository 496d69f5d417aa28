"""Sampling ``|H_3(1)(f)|`` and ``|H_3(1)(f^{-1})|`` over random Herglotz measures.

Each measure has ``atoms`` points with uniform angles and Dirichlet(1, ..., 1)
weights.  Samples are drawn in fixed-size blocks, block ``b`` from
``numpy.random.default_rng([seed, b])``, so the output does not depend on how
blocks are spread over workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .caratheodory import HerglotzMeasure
from .functionals import a_from_c, hankel_det_batch, inverse_from_direct, SchlichtCoefficients

__all__ = [
    "SampleBlock",
    "SamplingReport",
    "sample_block",
    "sample_campaign",
    "measure_h3",
    "BLOCK_SIZE",
    "BOUND",
]

BLOCK_SIZE = 10_000
BOUND = 1.0 / 9.0


@dataclass
class SampleBlock:
    seed: int
    block: int
    start: int
    weights: np.ndarray
    angles: np.ndarray
    a: np.ndarray        # columns a_2..a_5
    A: np.ndarray        # columns A_2..A_5
    h3_direct: np.ndarray
    h3_inverse: np.ndarray

    def rows(self) -> Iterator[dict]:
        for i in range(self.weights.shape[0]):
            yield {
                "seed": self.seed,
                "sample": self.start + i,
                "weights": tuple(self.weights[i]),
                "angles": tuple(self.angles[i]),
                **{f"a{k + 2}": self.a[i, k] for k in range(4)},
                **{f"A{k + 2}": self.A[i, k] for k in range(4)},
                "h3_direct": self.h3_direct[i],
                "h3_inverse": self.h3_inverse[i],
            }


def _coefficients(weights: np.ndarray, points: np.ndarray):
    c = [2 * np.sum(weights * points**n, axis=1) for n in range(1, 5)]
    a = a_from_c(*c)
    A = inverse_from_direct(a)
    ones = np.ones_like(c[0])
    h_dir = hankel_det_batch(np.stack([ones, *a], axis=1), 3, 1)
    h_inv = hankel_det_batch(np.stack([ones, *A], axis=1), 3, 1)
    return np.stack(a, axis=1), np.stack(A, axis=1), h_dir, h_inv


def sample_block(seed: int, block: int, size: int, atoms: int) -> SampleBlock:
    rng = np.random.default_rng([seed, block])
    weights = rng.dirichlet(np.ones(atoms), size=size)
    angles = rng.uniform(0.0, 2 * np.pi, size=(size, atoms))
    a, A, h_dir, h_inv = _coefficients(weights, np.exp(1j * angles))
    return SampleBlock(seed, block, block * BLOCK_SIZE, weights, angles, a, A, h_dir, h_inv)


def measure_h3(m: HerglotzMeasure) -> tuple:
    """``(|H_3(1)(f)|, |H_3(1)(f^{-1})|)`` for the order-1/2 starlike ``f`` driven by ``m``."""
    w = np.array([[float(wk) for wk, _ in m.atoms]])
    x = np.array([[complex(xk) for _, xk in m.atoms]])
    _, _, h_dir, h_inv = _coefficients(w, x)
    return float(abs(h_dir[0])), float(abs(h_inv[0]))


@dataclass
class SamplingReport:
    samples: int
    atoms: int
    seed: int
    tolerance: float
    max_h3_direct: float
    max_h3_inverse: float
    argmax_direct: int
    argmax_inverse: int
    offending_samples: list = field(default_factory=list)
    blocks: list = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.offending_samples


def _block_task(args):
    seed, b, size, atoms = args
    return sample_block(seed, b, size, atoms)


def sample_campaign(samples: int, atoms: int, seed: int, tolerance: float = 1e-9,
                    workers: int = 1, keep_blocks: bool = False) -> SamplingReport:
    """Draw ``samples`` measures and check both maxima against ``1/9 + tolerance``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not (1 <= atoms <= 64):
        raise ValueError("atoms must lie in [1, 64]")
    tasks = []
    for b in range(-(-samples // BLOCK_SIZE)):
        tasks.append((seed, b, min(BLOCK_SIZE, samples - b * BLOCK_SIZE), atoms))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_block_task, tasks))
    else:
        blocks = [_block_task(t) for t in tasks]

    h_dir = np.abs(np.concatenate([b.h3_direct for b in blocks]))
    h_inv = np.abs(np.concatenate([b.h3_inverse for b in blocks]))
    bad = np.flatnonzero((h_dir > BOUND + tolerance) | (h_inv > BOUND + tolerance))
    return SamplingReport(
        samples=samples, atoms=atoms, seed=seed, tolerance=tolerance,
        max_h3_direct=float(h_dir.max()), max_h3_inverse=float(h_inv.max()),
        argmax_direct=int(h_dir.argmax()), argmax_inverse=int(h_inv.argmax()),
        offending_samples=[int(i) for i in bad],
        blocks=blocks if keep_blocks else [],
    )
