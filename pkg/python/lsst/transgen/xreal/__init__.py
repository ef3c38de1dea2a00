"""Certified real arithmetic: expression trees over the named constants,
directed-rounding interval enclosures, exact surd shortcuts, and floors and
comparisons that are either proven or reported as ambiguous.
"""

from ._certify import (
    C1DecimalReport,
    active_precision_cap,
    c1_decimal_report,
    certified_floor,
    certified_le,
    certified_lt,
    precision_cap,
    precision_schedule,
)
from ._expr import (
    C1_BOUND,
    C1_DEGREE,
    Add,
    Const,
    ConstantId,
    Div,
    Exp2,
    Ln,
    Lit,
    Log,
    Mul,
    Neg,
    Operand,
    Pi,
    RealExpr,
    Sqrt,
    Sub,
    as_expr,
    const,
    constant_definition,
    constant_interval,
    evaluate,
    exact,
    exp2,
    lit,
    ln,
    log2,
    logp,
    power,
    sqrt,
)
from ._interval import Interval
from ._surd import Surd

__all__ = (
    "C1_BOUND",
    "C1_DEGREE",
    "Add",
    "C1DecimalReport",
    "Const",
    "ConstantId",
    "Div",
    "Exp2",
    "Interval",
    "Lit",
    "Ln",
    "Log",
    "Mul",
    "Neg",
    "Operand",
    "Pi",
    "RealExpr",
    "Sqrt",
    "Sub",
    "Surd",
    "active_precision_cap",
    "as_expr",
    "c1_decimal_report",
    "certified_floor",
    "certified_le",
    "certified_lt",
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
    "precision_cap",
    "precision_schedule",
    "sqrt",
)
