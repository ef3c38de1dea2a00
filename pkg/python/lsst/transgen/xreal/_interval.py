"""Outward-rounded interval arithmetic on gmpy2 multiprecision floats."""

from __future__ import annotations

__all__ = ("Interval",)

from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from ..errors import DomainError


def _down(precision: int) -> gmpy2.context:
    return gmpy2.context(precision=precision, round=gmpy2.RoundDown)


def _up(precision: int) -> gmpy2.context:
    return gmpy2.context(precision=precision, round=gmpy2.RoundUp)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` enclosing a real value.

    Endpoints are binary floats of ``precision`` bits. Every operation rounds
    the lower endpoint toward minus infinity and the upper endpoint toward
    plus infinity, so the result encloses the exact result of the operation
    on any pair of enclosed values.
    """

    lo: gmpy2.mpfr
    """Lower endpoint."""

    hi: gmpy2.mpfr
    """Upper endpoint."""

    precision: int
    """Working precision in bits."""

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise ValueError(f"Interval endpoints out of order: [{self.lo}, {self.hi}]")

    @classmethod
    def from_rational(cls, value: Fraction | int, precision: int) -> Interval:
        """Tightest enclosure of a rational at the given precision."""
        q = gmpy2.mpq(value.numerator, value.denominator)
        with _down(precision):
            lo = gmpy2.mpfr(q)
        if gmpy2.mpq(lo) > q:
            lo = gmpy2.next_below(lo)
        with _up(precision):
            hi = gmpy2.mpfr(q)
        if gmpy2.mpq(hi) < q:
            hi = gmpy2.next_above(hi)
        return cls(lo, hi, precision)

    @classmethod
    def pi(cls, precision: int) -> Interval:
        with _down(precision):
            lo = gmpy2.const_pi()
        with _up(precision):
            hi = gmpy2.const_pi()
        return cls(lo, hi, precision)

    @property
    def width(self) -> gmpy2.mpfr:
        with _up(self.precision):
            return self.hi - self.lo

    def contains(self, value: Fraction | int) -> bool:
        """Whether the rational ``value`` lies in the interval."""
        q = gmpy2.mpq(value.numerator, value.denominator)
        return gmpy2.mpq(self.lo) <= q <= gmpy2.mpq(self.hi)

    def floor_bounds(self) -> tuple[int, int]:
        """Smallest and largest possible floor of the enclosed value."""
        return int(gmpy2.floor(self.lo)), int(gmpy2.floor(self.hi))

    def __add__(self, other: Interval) -> Interval:
        p = min(self.precision, other.precision)
        with _down(p):
            lo = self.lo + other.lo
        with _up(p):
            hi = self.hi + other.hi
        return Interval(lo, hi, p)

    def __sub__(self, other: Interval) -> Interval:
        p = min(self.precision, other.precision)
        with _down(p):
            lo = self.lo - other.hi
        with _up(p):
            hi = self.hi - other.lo
        return Interval(lo, hi, p)

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo, self.precision)

    def __mul__(self, other: Interval) -> Interval:
        p = min(self.precision, other.precision)
        pairs = [(a, b) for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        with _down(p):
            lo = min(a * b for a, b in pairs)
        with _up(p):
            hi = max(a * b for a, b in pairs)
        return Interval(lo, hi, p)

    def __truediv__(self, other: Interval) -> Interval:
        if other.lo <= 0 <= other.hi:
            raise DomainError(f"Division by an interval containing zero: [{other.lo}, {other.hi}]")
        p = min(self.precision, other.precision)
        pairs = [(a, b) for a in (self.lo, self.hi) for b in (other.lo, other.hi)]
        with _down(p):
            lo = min(a / b for a, b in pairs)
        with _up(p):
            hi = max(a / b for a, b in pairs)
        return Interval(lo, hi, p)

    def sqrt(self) -> Interval:
        if self.lo < 0:
            raise DomainError(f"Square root of an interval with negative part: [{self.lo}, {self.hi}]")
        with _down(self.precision):
            lo = gmpy2.sqrt(self.lo)
        with _up(self.precision):
            hi = gmpy2.sqrt(self.hi)
        return Interval(lo, hi, self.precision)

    def ln(self) -> Interval:
        self._check_log_domain()
        with _down(self.precision):
            lo = gmpy2.log(self.lo)
        with _up(self.precision):
            hi = gmpy2.log(self.hi)
        return Interval(lo, hi, self.precision)

    def log2(self) -> Interval:
        self._check_log_domain()
        with _down(self.precision):
            lo = gmpy2.log2(self.lo)
        with _up(self.precision):
            hi = gmpy2.log2(self.hi)
        return Interval(lo, hi, self.precision)

    def exp2(self) -> Interval:
        with _down(self.precision):
            lo = gmpy2.exp2(self.lo)
        with _up(self.precision):
            hi = gmpy2.exp2(self.hi)
        return Interval(lo, hi, self.precision)

    def _check_log_domain(self) -> None:
        if self.lo <= 0:
            raise DomainError(f"Logarithm of an interval that is not positive: [{self.lo}, {self.hi}]")
