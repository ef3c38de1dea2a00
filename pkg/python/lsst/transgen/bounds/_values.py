"""Bound values with derivation traces, and the solubility context."""

from __future__ import annotations

__all__ = ("BoundValue", "BoundScalar", "SolubilityContext", "TraceStep", "maximum", "minimum")

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from ..errors import BoundInputError

BoundScalar = Union[Fraction, float]
"""An exact nonnegative rational, or `math.inf`."""


class SolubilityContext(str, Enum):
    """Selects ``D = E_sol`` or ``D = E`` in the chief series bounds."""

    SOLUBLE = "soluble-transitive"
    """The group has a subgroup with soluble transitive top projection."""

    GENERAL = "general"


@dataclass(frozen=True)
class TraceStep:
    """One step of a bound derivation."""

    rule: str
    """Slug naming the inequality applied, for example ``"e-bound"``."""

    detail: str = ""
    """Operands and intermediate values."""

    def __str__(self) -> str:
        return f"{self.rule}: {self.detail}" if self.detail else self.rule


def _as_scalar(value: int | Fraction | float) -> BoundScalar:
    if isinstance(value, float):
        if value != math.inf:
            raise BoundInputError(f"Only +inf is allowed as a float bound, got {value}")
        return value
    return Fraction(value)


@dataclass(frozen=True)
class BoundValue:
    """A nonnegative bound, exact or infinite, with its derivation."""

    value: BoundScalar
    """Exact value, or `math.inf`."""

    trace: tuple[TraceStep, ...] = ()
    """Derivation steps, innermost first."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", _as_scalar(self.value))
        if self.value < 0:
            raise BoundInputError(f"Bounds are nonnegative, got {self.value}")

    @classmethod
    def of(cls, value: int | Fraction | float, rule: str, detail: str = "") -> BoundValue:
        return cls(_as_scalar(value), (TraceStep(rule, detail),))

    @property
    def is_finite(self) -> bool:
        return self.value != math.inf

    def floor(self) -> int | float:
        """Integer floor, or `math.inf`."""
        return math.floor(self.value) if self.is_finite else math.inf

    def step(self, rule: str, detail: str = "") -> BoundValue:
        """Append a step to the trace."""
        return BoundValue(self.value, (*self.trace, TraceStep(rule, detail)))

    def floored(self, rule: str = "floor") -> BoundValue:
        if isinstance(self.value, Fraction) and self.value.denominator != 1:
            return BoundValue(Fraction(self.floor()), (*self.trace, TraceStep(rule, f"floor({self.value})")))
        return self

    def scaled(self, factor: int | Fraction | float) -> BoundValue:
        """Multiply by a nonnegative factor; ``0 * inf == 0``."""
        factor = _as_scalar(factor)
        if factor == 0:
            return BoundValue(Fraction(0), (*self.trace, TraceStep("scale", "0 * term")))
        return BoundValue(self.value * factor, (*self.trace, TraceStep("scale", f"{_fmt(factor)} * term")))

    def __add__(self, other: BoundValue | int | Fraction) -> BoundValue:
        if isinstance(other, BoundValue):
            return BoundValue(self.value + other.value, (*self.trace, *other.trace))
        return BoundValue(self.value + _as_scalar(other), self.trace)

    __radd__ = __add__

    def __int__(self) -> int:
        if not self.is_finite:
            raise OverflowError("Infinite bound has no integer value")
        return int(self.floor())

    def __str__(self) -> str:
        return _fmt(self.value)


def _fmt(value: BoundScalar) -> str:
    return "inf" if value == math.inf else str(value)


def minimum(values: Iterable[tuple[str, BoundValue]], rule: str) -> BoundValue:
    """The smallest of several labelled bounds; the trace keeps the chosen
    operand's derivation and lists all operands.
    """
    options = list(values)
    if not options:
        raise BoundInputError("Minimum of no bounds")
    label, best = min(options, key=lambda item: item[1].value)
    detail = ", ".join(f"{name}={_fmt(v.value)}" for name, v in options)
    return best.step(rule, f"min({detail}) -> {label}")


def maximum(values: Iterable[tuple[str, BoundValue]], rule: str) -> BoundValue:
    """The largest of several labelled bounds, for when every alternative
    may occur.
    """
    options = list(values)
    if not options:
        raise BoundInputError("Maximum of no bounds")
    label, worst = max(options, key=lambda item: item[1].value)
    detail = ", ".join(f"{name}={_fmt(v.value)}" for name, v in options)
    return worst.step(rule, f"max({detail}) -> {label}")
