"""Exception hierarchy shared by the transgen subpackages."""

from __future__ import annotations

__all__ = (
    "AmbiguousComparison",
    "AmbiguousFloor",
    "BoundInputError",
    "ConfigError",
    "DomainError",
    "MissingDataError",
    "NumberTheoryError",
    "ResourceGuardError",
    "TableIntegrityError",
    "TransgenError",
)

from typing import Any


class TransgenError(Exception):
    """Base class for all errors raised by transgen."""


class NumberTheoryError(TransgenError, ValueError):
    """An integer argument is outside the domain of an arithmetic function,
    for example a non-prime ``p`` passed to `~lsst.transgen.numth.p_part`.
    """


class DomainError(TransgenError, ArithmeticError):
    """An interval enclosure left the domain of an operation.

    Raised for the logarithm of an enclosure that is not strictly positive,
    the square root of a negative enclosure and division by an enclosure that
    contains zero. Enclosures are never widened to hide these cases.
    """


class AmbiguousFloor(TransgenError):
    """The floor of an expression could not be decided at the precision cap.

    Parameters
    ----------
    expr
        The expression whose floor was requested.
    enclosure
        The last enclosure computed, at the precision cap.
    """

    def __init__(self, expr: Any, enclosure: Any) -> None:
        super().__init__(
            f"Floor of {expr} is undecided at {enclosure.precision} bits: {enclosure}. "
            "The value may be an exact integer; review it by hand or raise the precision cap."
        )
        self.expr = expr
        self.enclosure = enclosure


class AmbiguousComparison(TransgenError):
    """A comparison between two expressions could not be decided at the
    precision cap.
    """

    def __init__(self, lhs: Any, rhs: Any, precision: int) -> None:
        super().__init__(f"Comparison {lhs} <= {rhs} is undecided at {precision} bits.")
        self.lhs = lhs
        self.rhs = rhs
        self.precision = precision


class BoundInputError(TransgenError, ValueError):
    """Arguments to a bound formula violate its preconditions."""


class ResourceGuardError(TransgenError):
    """An oracle or sweep was asked to exceed its resource guard."""


class MissingDataError(TransgenError):
    """A computation needs the optional ``as(m)`` data file.

    Parameters
    ----------
    m
        The block size whose composition-length maximum is missing, if a
        single one is responsible.
    """

    def __init__(self, message: str, m: int | None = None) -> None:
        super().__init__(message)
        self.m = m


class TableIntegrityError(TransgenError):
    """An embedded data table is malformed or fails its checksum."""


class ConfigError(TransgenError, ValueError):
    """Invalid run configuration."""
