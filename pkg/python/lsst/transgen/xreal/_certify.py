"""Certified floors and comparisons with precision escalation."""

from __future__ import annotations

__all__ = (
    "C1DecimalReport",
    "active_precision_cap",
    "c1_decimal_report",
    "certified_floor",
    "certified_le",
    "certified_lt",
    "precision_cap",
    "precision_schedule",
)

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from ..config import MIN_PRECISION, env_precision_cap
from ..errors import AmbiguousComparison, AmbiguousFloor, ConfigError
from ._expr import ConstantId, Const, RealExpr, evaluate, exact
from ._interval import Interval

_active_cap: ContextVar[int | None] = ContextVar("transgen_precision_cap", default=None)


def active_precision_cap() -> int:
    """Precision cap in force: the innermost `precision_cap` block, else
    the environment, else the default.
    """
    cap = _active_cap.get()
    return env_precision_cap() if cap is None else cap


@contextmanager
def precision_cap(cap: int) -> Iterator[int]:
    """Set the precision cap for certified operations within a block.

    Parameters
    ----------
    cap
        Largest working precision in bits, at least 64.
    """
    if cap < MIN_PRECISION:
        raise ConfigError(f"Precision cap must be at least {MIN_PRECISION}, got {cap}")
    token = _active_cap.set(cap)
    try:
        yield cap
    finally:
        _active_cap.reset(token)


def precision_schedule(cap: int | None = None) -> Iterator[int]:
    """Yield 64, 128, 256, ... ending exactly at the cap."""
    cap = active_precision_cap() if cap is None else cap
    precision = MIN_PRECISION
    while precision < cap:
        yield precision
        precision *= 2
    yield cap


def certified_floor(expr: RealExpr) -> int:
    """Compute the floor of a real expression with a proof of correctness.

    Exact surd values are floored with integer square roots. Otherwise the
    expression is enclosed at increasing precision until the enclosure
    contains no integer in its interior.

    Raises
    ------
    AmbiguousFloor
        Raised if the enclosure at the cap still straddles an integer, which
        usually means the value is an integer that the exact path cannot
        recognize.
    """
    logger = logging.getLogger(__name__)

    value = exact(expr)
    if value is not None:
        return value.floor()
    enclosure: Interval | None = None
    for precision in precision_schedule():
        enclosure = evaluate(expr, precision)
        low, high = enclosure.floor_bounds()
        if low == high:
            return low
        logger.debug("Floor of %s ambiguous at %d bits: floors %d..%d", expr, precision, low, high)
    assert enclosure is not None
    raise AmbiguousFloor(expr, enclosure)


def _compare(lhs: RealExpr, rhs: RealExpr, strict: bool) -> bool:
    logger = logging.getLogger(__name__)

    if lhs == rhs:
        return not strict
    a, b = exact(lhs), exact(rhs)
    if a is not None and b is not None:
        order = a.compare(b)
        return order < 0 if strict else order <= 0
    precision = MIN_PRECISION
    for precision in precision_schedule():
        left = evaluate(lhs, precision)
        right = evaluate(rhs, precision)
        if left.hi < right.lo:
            return True
        if left.lo > right.hi:
            return False
        if not strict and left.hi == right.lo:
            return True
        if strict and left.lo == right.hi:
            return False
        logger.debug("Comparison of %s with %s ambiguous at %d bits", lhs, rhs, precision)
    raise AmbiguousComparison(lhs, rhs, precision)


def certified_le(lhs: RealExpr, rhs: RealExpr) -> bool:
    """Decide ``lhs <= rhs`` with certainty.

    Raises
    ------
    AmbiguousComparison
        Raised if the enclosures still overlap at the precision cap.
    """
    return _compare(lhs, rhs, strict=False)


def certified_lt(lhs: RealExpr, rhs: RealExpr) -> bool:
    """Decide ``lhs < rhs`` with certainty.

    Raises
    ------
    AmbiguousComparison
        Raised if the enclosures still overlap at the precision cap.
    """
    return _compare(lhs, rhs, strict=True)


C1_TABLE_DECIMAL = "0.920581"
C1_PROSE_DECIMAL = "0.920584"


@dataclass(frozen=True)
class C1DecimalReport:
    """Which printed six-digit decimal of ``c1`` its definition supports."""

    lo: Fraction
    """Lower end of the certified enclosure."""

    hi: Fraction
    """Upper end of the certified enclosure."""

    truncated: str
    """The value truncated to six decimals."""

    rounded: str
    """The value rounded to six decimals."""

    table_decimal: str = C1_TABLE_DECIMAL
    prose_decimal: str = C1_PROSE_DECIMAL

    @property
    def table_matches(self) -> bool:
        return self.table_decimal in (self.truncated, self.rounded)

    @property
    def prose_matches(self) -> bool:
        return self.prose_decimal in (self.truncated, self.rounded)


def c1_decimal_report(precision: int = 256) -> C1DecimalReport:
    """Evaluate ``c1`` from its definition and compare with the two printed
    decimal strings.
    """
    enclosure = evaluate(Const(ConstantId.C1), precision)
    lo = _to_fraction(enclosure.lo)
    hi = _to_fraction(enclosure.hi)
    scale = 10**6
    truncated = {_decimal(int(x * scale), scale) for x in (lo, hi)}
    rounded = {_decimal(round(x * scale), scale) for x in (lo, hi)}
    if len(truncated) != 1 or len(rounded) != 1:
        raise AmbiguousFloor(Const(ConstantId.C1), enclosure)
    return C1DecimalReport(lo=lo, hi=hi, truncated=truncated.pop(), rounded=rounded.pop())


def _decimal(units: int, scale: int) -> str:
    whole, frac = divmod(units, scale)
    return f"{whole}.{frac:06d}"


def _to_fraction(x: gmpy2.mpfr) -> Fraction:
    q = gmpy2.mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))
