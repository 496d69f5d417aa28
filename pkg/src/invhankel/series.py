"""Truncated formal power series.

A :class:`TruncatedSeries` stores the Taylor coefficients ``c_0 .. c_N`` of a
power series together with its truncation order ``N``.  Coefficients are plain
Python scalars, so the same code runs in two numeric modes:

* exact mode -- :class:`fractions.Fraction` (or any exact number type that
  supports ``+ - * /``, e.g. sympy Gaussian rationals), used for every identity
  check;
* float mode -- ``complex``, used for scanning and sampling.

Nothing here ever reads past index ``N`` or grows ``N`` silently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "TruncatedSeries",
    "mul",
    "derive",
    "compose",
    "revert",
]


def _is_zero(v) -> bool:
    return v == 0


class TruncatedSeries:
    """Immutable truncated power series ``c_0 + c_1 z + ... + c_N z^N``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = tuple(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 1:
            raise ValueError(f"truncation order must be >= 1, got {order}")
        if len(cs) > order + 1:
            raise ValueError(
                f"{len(cs)} coefficients do not fit truncation order {order}"
            )
        cs = cs + (0,) * (order + 1 - len(cs))
        object.__setattr__(self, "_coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def exact(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedSeries":
        """Series with every coefficient converted to ``Fraction``."""
        return cls((Fraction(c) for c in coeffs), order)

    @classmethod
    def floating(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedSeries":
        """Series with every coefficient converted to ``complex``."""
        return cls((complex(c) for c in coeffs), order)

    @classmethod
    def identity(cls, order: int, exact: bool = True) -> "TruncatedSeries":
        one, zero = (Fraction(1), Fraction(0)) if exact else (1 + 0j, 0j)
        return cls((zero, one) + (zero,) * (order - 1), order)

    @classmethod
    def normalized(cls, tail: Sequence, order: int | None = None,
                   exact: bool = True) -> "TruncatedSeries":
        """``z + tail[0] z^2 + tail[1] z^3 + ...`` (class-A shape)."""
        head = (0, 1) + tuple(tail)
        return cls.exact(head, order) if exact else cls.floating(head, order)

    # -- basic protocol ---------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r}, order={self.order})"

    def is_normalized(self) -> bool:
        return _is_zero(self._coeffs[0]) and self._coeffs[1] == 1

    def is_exact(self) -> bool:
        return all(not isinstance(c, (float, complex)) for c in self._coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("truncate cannot raise the order")
        return TruncatedSeries(self._coeffs[: order + 1], order)

    def padded(self, order: int) -> "TruncatedSeries":
        """Same series viewed at a higher order (explicit zero padding)."""
        if order < self.order:
            raise ValueError("padded cannot lower the order")
        return TruncatedSeries(self._coeffs, order)

    def __call__(self, z):
        """Evaluate the polynomial part at ``z`` (scalar or numpy array)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * z + c
        return acc

    # -- arithmetic -------------------------------------------------------

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(
                (a + b for a, b in zip(self._coeffs, other._coeffs)), self.order
            )
        return TruncatedSeries(
            (self._coeffs[0] + other,) + self._coeffs[1:], self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-a for a in self._coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return TruncatedSeries((a * other for a in self._coeffs), self.order)

    def __rmul__(self, other):
        return self * other


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    a._check_order(b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = 0
        for i in range(k + 1):
            s = s + ac[i] * bc[k - i]
        out.append(s)
    return TruncatedSeries(out, n)


def derive(a: TruncatedSeries) -> TruncatedSeries:
    """Term-wise derivative, re-padded to the input order with a trailing zero."""
    cs = a.coeffs
    zero = cs[0] * 0
    return TruncatedSeries([k * cs[k] for k in range(1, len(cs))] + [zero], a.order)


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(z))`` truncated at order ``N``; ``g`` must have zero constant term."""
    f._check_order(g)
    if not _is_zero(g.coeffs[0]):
        raise ValueError("inner series must have zero constant term")
    n = f.order
    fc = f.coeffs
    acc = TruncatedSeries([fc[n]], n)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, g) + fc[k]
    return acc


def revert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of a normalized series.

    Solves ``f(g(w)) = w + O(w^{N+1})`` one order at a time: once
    ``g_1 .. g_{n-1}`` are known, ``[w^n] f(g) = g_n + sum_{k>=2} f_k [w^n] g^k``
    and the sum only involves earlier coefficients.
    """
    if not f.is_normalized():
        raise ValueError("revert needs a normalized series (c0 = 0, c1 = 1)")
    n = f.order
    fc = f.coeffs
    one = fc[1]
    zero = one * 0
    g = [zero, one] + [zero] * (n - 1)
    for m in range(2, n + 1):
        gs = TruncatedSeries(g, n)
        power = gs
        total = zero
        for k in range(2, m + 1):
            power = mul(power, gs)
            total = total + fc[k] * power.coeffs[m]
        g[m] = -total
    return TruncatedSeries(g, n)
