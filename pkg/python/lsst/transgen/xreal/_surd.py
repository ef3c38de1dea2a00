"""Exact values of the form ``q * sqrt(r)``."""

from __future__ import annotations

__all__ = ("Surd",)

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError
from ..numth import squarefree_decomposition

_RADICAND_FACTOR_LIMIT = 10**12
"""Largest integer split into square and squarefree parts by factorization;
larger radicands are only recognized when they are perfect squares.
"""


@dataclass(frozen=True)
class Surd:
    """The real number ``coefficient * sqrt(radicand)``.

    ``radicand`` is a squarefree positive integer, and is 1 whenever the
    value is rational (including zero).
    """

    coefficient: Fraction
    radicand: int = 1

    @classmethod
    def rational(cls, value: Fraction | int) -> Surd:
        return cls(Fraction(value), 1)

    @classmethod
    def sqrt_of(cls, value: Fraction) -> Surd | None:
        """Exact square root of a nonnegative rational, or `None` when the
        radicand is too large to reduce.
        """
        if value < 0:
            raise DomainError(f"Square root of negative value {value}")
        num = value.numerator * value.denominator
        root = math.isqrt(num)
        if root * root == num:
            return cls(Fraction(root, value.denominator))
        if num > _RADICAND_FACTOR_LIMIT:
            return None
        s, r = squarefree_decomposition(num)
        return cls(Fraction(s, value.denominator), r)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1 or self.coefficient == 0

    def __neg__(self) -> Surd:
        return Surd(-self.coefficient, self.radicand)

    def __add__(self, other: Surd) -> Surd | None:
        if other.coefficient == 0:
            return self
        if self.coefficient == 0:
            return other
        if self.radicand != other.radicand:
            return None
        return _normalized(self.coefficient + other.coefficient, self.radicand)

    def __sub__(self, other: Surd) -> Surd | None:
        return self + (-other)

    def __mul__(self, other: Surd) -> Surd:
        g = math.gcd(self.radicand, other.radicand)
        radicand = (self.radicand // g) * (other.radicand // g)
        return _normalized(self.coefficient * other.coefficient * g, radicand)

    def __truediv__(self, other: Surd) -> Surd:
        if other.coefficient == 0:
            raise DomainError("Division by exact zero")
        # 1 / (q sqrt(r)) == sqrt(r) / (q r)
        inverse = Surd(1 / (other.coefficient * other.radicand), other.radicand)
        return self * inverse

    def floor(self) -> int:
        q = self.coefficient
        if self.is_rational:
            return math.floor(q)
        # sqrt(a^2 r) is irrational, so its quotient by b is never an integer.
        a, b = abs(q.numerator), q.denominator
        root_floor = math.isqrt(a * a * self.radicand) // b
        return root_floor if q > 0 else -root_floor - 1

    def compare(self, other: Surd) -> int:
        """Return -1, 0 or 1 as ``self`` is below, equal to or above
        ``other``.
        """
        s1 = _sign(self.coefficient)
        s2 = _sign(other.coefficient)
        if s1 != s2:
            return -1 if s1 < s2 else 1
        if s1 == 0:
            return 0
        left = self.coefficient**2 * self.radicand
        right = other.coefficient**2 * other.radicand
        order = (left > right) - (left < right)
        return order if s1 > 0 else -order

    def as_fraction(self) -> Fraction | None:
        return self.coefficient if self.is_rational else None


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _normalized(coefficient: Fraction, radicand: int) -> Surd:
    if coefficient == 0:
        return Surd(Fraction(0), 1)
    return Surd(coefficient, radicand)
