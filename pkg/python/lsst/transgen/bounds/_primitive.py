"""Bounds for primitive groups and the large-block ratio."""

from __future__ import annotations

__all__ = (
    "HoltBound",
    "composition_cap_expr",
    "holt_bound",
    "large_block_ratio",
    "pyber_ab_bound",
    "pyber_composition_bound",
    "pyber_nonab_bound",
)

from dataclasses import dataclass

from ..errors import BoundInputError
from ..xreal import ConstantId, Operand, RealExpr, as_expr, certified_floor, const, exp2, log2, sqrt


def _check_m(m: int) -> None:
    if m < 2:
        raise BoundInputError(f"Primitive degree must be at least 2, got {m}")


def composition_cap_expr(m: int, nonabelian: bool = False) -> RealExpr:
    """``(1 + c0) log m - log(24) / 3``, plus ``log m`` when nonabelian
    factors are counted too.
    """
    _check_m(m)
    coefficient = (2 if nonabelian else 1) + const(ConstantId.C0)
    return coefficient * log2(m) - log2(24) / 3


def pyber_ab_bound(m: int) -> int:
    """Cap on the abelian composition length of a primitive group of
    degree ``m``: ``floor((1 + c0) log m - log(24) / 3)``.
    """
    return certified_floor(composition_cap_expr(m))


def pyber_nonab_bound(m: int) -> int:
    """Cap on the nonabelian chief length, ``floor(log m)``."""
    _check_m(m)
    return m.bit_length() - 1


def pyber_composition_bound(m: int) -> int:
    """Composition length cap ``floor((2 + c0) log m - log(24) / 3)``."""
    return certified_floor(composition_cap_expr(m, nonabelian=True))


@dataclass(frozen=True)
class HoltBound:
    """Generator bound ``floor(log m)`` for primitive groups of degree m."""

    value: int

    exception: bool
    """True for ``m = 3``, where ``S3`` needs two generators."""


def holt_bound(m: int) -> HoltBound:
    _check_m(m)
    return HoltBound(value=m.bit_length() - 1, exception=m == 3)


def large_block_ratio(e: Operand, z: Operand, w: Operand) -> RealExpr:
    """``(e b1 + c1) sqrt(z + w) / (2**z sqrt(w))``.

    Decreasing in ``w`` for fixed ``e`` and ``z``.
    """
    e_, z_, w_ = as_expr(e), as_expr(z), as_expr(w)
    return (e_ * const(ConstantId.B1) + const(ConstantId.C1)) * sqrt(z_ + w_) / (exp2(z_) * sqrt(w_))
