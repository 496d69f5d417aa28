"""Shared oracles and the acceptance summary hook.

The oracles here are deliberately independent of the package: sympy series
expansion for Lagrange inversion, sympy matrices for determinants, and the
cofactor expansion of the 3x3 Hankel determinant written out by hand.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp

ACCEPTANCE_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running checks")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_fraction(rng: random.Random, bound: int = 9, den: int = 7) -> Fraction:
    return Fraction(rng.randint(-bound * den, bound * den), rng.randint(1, den))


def lagrange_inverse(tail, order: int) -> list:
    """``A_n = (1/n) [z^{n-1}] (z / f(z))^n`` via sympy, for ``f = z + tail[0] z^2 + ...``."""
    z = sp.Symbol("z")
    f = z + sum(sp.Rational(t.numerator, t.denominator) * z ** (k + 2) for k, t in enumerate(tail))
    h = sp.series(z / f, z, 0, order).removeO()
    out = [Fraction(0), Fraction(1)]
    for n in range(2, order + 1):
        coeff = sp.expand(h**n).coeff(z, n - 1) / n
        out.append(Fraction(int(sp.numer(coeff)), int(sp.denom(coeff))))
    return out


def cofactor_h3(a2, a3, a4, a5):
    """Hand expansion of ``det [[1, a2, a3], [a2, a3, a4], [a3, a4, a5]]``."""
    return 2 * a2 * a3 * a4 - a3**3 - a4**2 + a3 * a5 - a2**2 * a5


@pytest.fixture
def rng():
    return random.Random(20240917)
