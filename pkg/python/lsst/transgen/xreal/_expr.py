"""Expression trees for the real-valued quantities in generator bounds.

Trees are immutable and hashable. Python arithmetic operators on nodes (and
on mixtures of nodes with `int` and `~fractions.Fraction`) build new trees;
nothing is evaluated until `evaluate` or `exact` is called.
"""

from __future__ import annotations

__all__ = (
    "C1_BOUND",
    "C1_DEGREE",
    "Add",
    "Const",
    "ConstantId",
    "Div",
    "Exp2",
    "Ln",
    "Lit",
    "Log",
    "Mul",
    "Neg",
    "Pi",
    "Operand",
    "RealExpr",
    "Sqrt",
    "Sub",
    "as_expr",
    "const",
    "constant_definition",
    "constant_interval",
    "evaluate",
    "exact",
    "exp2",
    "lit",
    "ln",
    "log2",
    "logp",
    "power",
    "sqrt",
)

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ..errors import DomainError
from ._interval import Interval
from ._surd import Surd

Operand = Union["RealExpr", int, Fraction]

_EXP2_EXACT_LIMIT = 1 << 16
"""Largest exponent magnitude for which `Exp2` of a rational is expanded
exactly.
"""


class ConstantId(str, Enum):
    """Named real constants of the generator bounds."""

    B = "b"
    """``sqrt(2 / pi)``."""

    B1 = "b1"
    """``sqrt(2) * b``."""

    C = "c"
    """``sqrt(3) / 2``."""

    C1 = "c1"
    """``1512660 * sqrt(log2(2**19 * 15)) / (2**19 * 15)``."""

    C0 = "c0"
    """``log_9(48) + log_9(24) / 3``."""

    CPRIME = "cprime"
    """``ln(2) / 1.25506``."""

    B0 = "b0"
    """``2 / cprime``."""


def as_expr(value: Operand) -> RealExpr:
    """Wrap an `int` or `~fractions.Fraction` as a literal; expressions pass
    through.
    """
    if isinstance(value, RealExpr):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Lit(Fraction(value))
    raise TypeError(f"Cannot use {value!r} in a real expression")


class RealExpr:
    """Base class of expression nodes."""

    __slots__ = ()

    def enclose(self, precision: int) -> Interval:
        """Enclosure of the node at ``precision`` bits; use `evaluate`,
        which caches shared subtrees.
        """
        raise NotImplementedError

    def exact(self) -> Surd | None:
        """Exact value when it is a surd, otherwise `None`."""
        return None

    def __add__(self, other: Operand) -> RealExpr:
        return Add(self, as_expr(other))

    def __radd__(self, other: Operand) -> RealExpr:
        return Add(as_expr(other), self)

    def __sub__(self, other: Operand) -> RealExpr:
        return Sub(self, as_expr(other))

    def __rsub__(self, other: Operand) -> RealExpr:
        return Sub(as_expr(other), self)

    def __mul__(self, other: Operand) -> RealExpr:
        return Mul(self, as_expr(other))

    def __rmul__(self, other: Operand) -> RealExpr:
        return Mul(as_expr(other), self)

    def __truediv__(self, other: Operand) -> RealExpr:
        return Div(self, as_expr(other))

    def __rtruediv__(self, other: Operand) -> RealExpr:
        return Div(as_expr(other), self)

    def __neg__(self) -> RealExpr:
        return Neg(self)


@dataclass(frozen=True, eq=True)
class Lit(RealExpr):
    """Rational literal."""

    value: Fraction

    def enclose(self, precision: int) -> Interval:
        return Interval.from_rational(self.value, precision)

    def exact(self) -> Surd | None:
        return Surd.rational(self.value)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, eq=True)
class Const(RealExpr):
    """Named constant."""

    cid: ConstantId

    def enclose(self, precision: int) -> Interval:
        return constant_interval(self.cid, precision)

    def exact(self) -> Surd | None:
        if self.cid is ConstantId.C:
            return Surd(Fraction(1, 2), 3)
        return None

    def __str__(self) -> str:
        return self.cid.value


@dataclass(frozen=True, eq=True)
class Pi(RealExpr):
    """The constant pi."""

    def enclose(self, precision: int) -> Interval:
        return Interval.pi(precision)

    def __str__(self) -> str:
        return "pi"


@dataclass(frozen=True, eq=True)
class Add(RealExpr):
    left: RealExpr
    right: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.left, precision) + evaluate(self.right, precision)

    def exact(self) -> Surd | None:
        a, b = exact(self.left), exact(self.right)
        return None if a is None or b is None else a + b

    def __str__(self) -> str:
        return f"({self.left} + {self.right})"


@dataclass(frozen=True, eq=True)
class Sub(RealExpr):
    left: RealExpr
    right: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.left, precision) - evaluate(self.right, precision)

    def exact(self) -> Surd | None:
        a, b = exact(self.left), exact(self.right)
        return None if a is None or b is None else a - b

    def __str__(self) -> str:
        return f"({self.left} - {self.right})"


@dataclass(frozen=True, eq=True)
class Mul(RealExpr):
    left: RealExpr
    right: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.left, precision) * evaluate(self.right, precision)

    def exact(self) -> Surd | None:
        a, b = exact(self.left), exact(self.right)
        return None if a is None or b is None else a * b

    def __str__(self) -> str:
        return f"({self.left} * {self.right})"


@dataclass(frozen=True, eq=True)
class Div(RealExpr):
    left: RealExpr
    right: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.left, precision) / evaluate(self.right, precision)

    def exact(self) -> Surd | None:
        a, b = exact(self.left), exact(self.right)
        return None if a is None or b is None else a / b

    def __str__(self) -> str:
        return f"{self.left} / ({self.right})"


@dataclass(frozen=True, eq=True)
class Neg(RealExpr):
    arg: RealExpr

    def enclose(self, precision: int) -> Interval:
        return -evaluate(self.arg, precision)

    def exact(self) -> Surd | None:
        a = exact(self.arg)
        return None if a is None else -a

    def __str__(self) -> str:
        return f"-{self.arg}"


@dataclass(frozen=True, eq=True)
class Sqrt(RealExpr):
    arg: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.arg, precision).sqrt()

    def exact(self) -> Surd | None:
        a = exact(self.arg)
        if a is None or not a.is_rational:
            return None
        return Surd.sqrt_of(a.coefficient)

    def __str__(self) -> str:
        return f"sqrt({self.arg})"


@dataclass(frozen=True, eq=True)
class Log(RealExpr):
    """Logarithm to an integer base; base 2 is the default ``log``."""

    arg: RealExpr
    base: int = 2

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"Logarithm base must be an integer >= 2, got {self.base}")

    def enclose(self, precision: int) -> Interval:
        x = evaluate(self.arg, precision)
        if self.base == 2:
            return x.log2()
        return x.ln() / Interval.from_rational(self.base, precision).ln()

    def exact(self) -> Surd | None:
        a = exact(self.arg)
        if a is None or not a.is_rational:
            return None
        q = a.coefficient
        if q <= 0:
            raise DomainError(f"Logarithm of nonpositive value {q}")
        if q.denominator == 1:
            k = _exact_log(q.numerator, self.base)
            return None if k is None else Surd.rational(k)
        if q.numerator == 1:
            k = _exact_log(q.denominator, self.base)
            return None if k is None else Surd.rational(-k)
        return None

    def __str__(self) -> str:
        return f"log{self.base}({self.arg})"


@dataclass(frozen=True, eq=True)
class Ln(RealExpr):
    """Natural logarithm."""

    arg: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.arg, precision).ln()

    def exact(self) -> Surd | None:
        a = exact(self.arg)
        if a is not None and a.is_rational and a.coefficient == 1:
            return Surd.rational(0)
        return None

    def __str__(self) -> str:
        return f"ln({self.arg})"


@dataclass(frozen=True, eq=True)
class Exp2(RealExpr):
    """Power of two with a real exponent."""

    arg: RealExpr

    def enclose(self, precision: int) -> Interval:
        return evaluate(self.arg, precision).exp2()

    def exact(self) -> Surd | None:
        a = exact(self.arg)
        if a is None or not a.is_rational:
            return None
        twice = 2 * a.coefficient
        if twice.denominator != 1 or abs(twice.numerator) > 2 * _EXP2_EXACT_LIMIT:
            return None
        k, half = divmod(twice.numerator, 2)
        return Surd(Fraction(2) ** k, 2 if half else 1)

    def __str__(self) -> str:
        return f"2^({self.arg})"


def _exact_log(n: int, base: int) -> int | None:
    k = 0
    while n % base == 0:
        n //= base
        k += 1
    return k if n == 1 else None


@lru_cache(maxsize=1 << 16)
def evaluate(expr: RealExpr, precision: int) -> Interval:
    """Enclose the value of ``expr`` at ``precision`` bits.

    Parameters
    ----------
    expr
        Expression to evaluate.
    precision
        Working precision in bits.

    Returns
    -------
    enclosure
        Interval containing the exact value.

    Raises
    ------
    DomainError
        Raised if a logarithm argument is not certainly positive, a divisor
        may be zero, or a square root argument may be negative.
    """
    return expr.enclose(precision)


@lru_cache(maxsize=1 << 14)
def exact(expr: RealExpr) -> Surd | None:
    """Exact surd value of ``expr``, or `None` if the expression is not
    reducible to one.
    """
    return expr.exact()


def constant_definition(cid: ConstantId) -> RealExpr:
    """Defining expression of a named constant."""
    return _DEFINITIONS[cid]


@lru_cache(maxsize=256)
def constant_interval(cid: ConstantId, precision: int) -> Interval:
    """Enclosure of a named constant, cached per precision."""
    return evaluate(constant_definition(cid), precision)


def lit(value: int | Fraction | str) -> Lit:
    """Rational literal; strings are parsed by `~fractions.Fraction`."""
    return Lit(Fraction(value))


def const(cid: ConstantId | str) -> Const:
    return Const(ConstantId(cid))


def sqrt(x: Operand) -> RealExpr:
    return Sqrt(as_expr(x))


def log2(x: Operand) -> RealExpr:
    return Log(as_expr(x), 2)


def logp(x: Operand, base: int) -> RealExpr:
    return Log(as_expr(x), base)


def ln(x: Operand) -> RealExpr:
    return Ln(as_expr(x))


def exp2(x: Operand) -> RealExpr:
    return Exp2(as_expr(x))


def power(x: Operand, exponent: Operand) -> RealExpr:
    """``x ** exponent`` for positive x, as ``2 ** (exponent * log2 x)``."""
    return Exp2(as_expr(exponent) * Log(as_expr(x), 2))


C1_DEGREE = 2**19 * 15
"""Degree whose tabulated bound defines ``c1``."""

C1_BOUND = 1512660
"""Tabulated bound at `C1_DEGREE`; ``floor(c1 d / sqrt(log d))`` equals it
exactly there."""

_DEFINITIONS: dict[ConstantId, RealExpr] = {
    ConstantId.B: Sqrt(lit(2) / Pi()),
    ConstantId.B1: Sqrt(lit(2)) * Const(ConstantId.B),
    ConstantId.C: Sqrt(lit(3)) / 2,
    ConstantId.C1: C1_BOUND * Sqrt(Log(lit(C1_DEGREE))) / C1_DEGREE,
    ConstantId.C0: Log(lit(48), 9) + Log(lit(24), 9) / 3,
    ConstantId.CPRIME: Ln(lit(2)) / lit("1.25506"),
    ConstantId.B0: 2 / Const(ConstantId.CPRIME),
}
