"""Generation bounds for submodules of induced modules: ``E(n, p)``,
``E_sol(n, p)`` and the orbit-count bounds built from them.
"""

from __future__ import annotations

__all__ = (
    "OrbitPart",
    "e_bound",
    "e_sol_bound",
    "induced_bound",
    "log_form_bound",
    "log_form_expr",
    "orbit_bound",
    "soluble_orbit_bound",
)

import math
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from ..errors import BoundInputError
from ..numth import factorize, lpp, p_part, ws
from ..xreal import ConstantId, RealExpr, certified_floor, certified_le, const, lit, log2, sqrt
from ._values import BoundValue, SolubilityContext

LOG_FORM_SWITCH = 1261
"""Smallest ``n`` for which the log-form bound uses its square-root
branch.
"""


class OrbitPart(str, Enum):
    """The five forms of the induced-module bound."""

    SOLUBLE = "soluble"
    """``min(a, chi1) * n_p`` for soluble groups."""

    ORBIT_SUM = "orbit-sum"
    """``a * sum(E_sol(t_i, p))`` over the orbits of a soluble subgroup."""

    COPRIME_PART = "coprime-part"
    """``min(a, chi1) * n / n_r`` for a prime ``r != p``."""

    CHI_WIDTH = "chi-width"
    """``chi * floor(b * n / sqrt(log_p n_p))``; needs ``n_p > 1``."""

    GENERAL = "general"
    """``a * E(n, p)``."""


def _check_n(n: int) -> None:
    if n < 2:
        raise BoundInputError(f"Bounds need n >= 2, got {n}")


@lru_cache(maxsize=1 << 16)
def e_bound(n: int, p: int) -> BoundValue:
    """``E(n, p) = min(floor(b n / sqrt((p - 1) log_p n_p)), n / lpp(n/n_p))``.

    The first operand is infinite when ``p`` does not divide ``n``.

    Parameters
    ----------
    n
        Index, at least 2.
    p
        Prime characteristic.

    Returns
    -------
    bound
        The exact integer value of ``E(n, p)``.
    """
    _check_n(n)
    n_p = p_part(n, p)
    rational = n // lpp(n // n_p)
    if n_p == 1:
        return BoundValue.of(rational, "e-bound", f"E({n},{p}) = n/lpp(n/n_p) = {rational}; n_p = 1")
    k = factorize(n).exponent(p)
    width = const(ConstantId.B) * n / sqrt((p - 1) * k)
    if certified_le(lit(rational), width):
        return BoundValue.of(
            rational, "e-bound", f"E({n},{p}) = n/lpp(n/n_p) = {rational} <= b n/sqrt({(p - 1) * k})"
        )
    floored = certified_floor(width)
    value = min(floored, rational)
    return BoundValue.of(
        value, "e-bound", f"E({n},{p}) = min(floor(b n/sqrt({(p - 1) * k})) = {floored}, {rational})"
    )


@lru_cache(maxsize=1 << 16)
def e_sol_bound(n: int, p: int) -> BoundValue:
    """``E_sol(n, p) = min(ws(n), n_p)``, exact and unfloored."""
    _check_n(n)
    n_p = p_part(n, p)
    w = ws(n)
    value = min(w, Fraction(n_p))
    return BoundValue.of(value, "e-sol-bound", f"E_sol({n},{p}) = min(ws={w}, n_p={n_p})")


def induced_bound(n: int, p: int, ctx: SolubilityContext) -> BoundValue:
    """``D(n, p)``: `e_sol_bound` in the soluble context, `e_bound`
    otherwise.
    """
    return e_sol_bound(n, p) if ctx is SolubilityContext.SOLUBLE else e_bound(n, p)


def _min_dim(a: int, chi1: int | float) -> int | float:
    if a < 0:
        raise BoundInputError(f"Dimension must be nonnegative, got {a}")
    return min(a, chi1)


def orbit_bound(
    part: OrbitPart,
    n: int,
    p: int,
    a: int = 1,
    chi: int | float = math.inf,
    chi1: int | float = math.inf,
    r: int | None = None,
    orbit_sizes: Sequence[int] | None = None,
) -> BoundValue:
    """Bound on the number of generators of a submodule of an induced
    module of dimension ``a * n``.

    Parameters
    ----------
    part
        Which form of the bound to evaluate.
    n
        Index of the inducing subgroup.
    p
        Characteristic.
    a
        Dimension of the inducing module.
    chi, chi1
        Orbit counts on the nonzero module elements, possibly infinite.
    r
        Prime different from ``p``; required for `OrbitPart.COPRIME_PART`.
    orbit_sizes
        Orbit sizes of a soluble subgroup, summing to ``n``; required for
        `OrbitPart.ORBIT_SUM`.

    Raises
    ------
    BoundInputError
        Raised if the part's preconditions do not hold.
    """
    _check_n(n)
    match part:
        case OrbitPart.SOLUBLE:
            n_p = p_part(n, p)
            factor = _min_dim(a, chi1)
            return BoundValue.of(n_p, "orbit-soluble", f"n_p = {n_p}").scaled(factor)
        case OrbitPart.ORBIT_SUM:
            if orbit_sizes is None or any(t < 1 for t in orbit_sizes) or sum(orbit_sizes) != n:
                raise BoundInputError(f"Orbit sizes {orbit_sizes} do not partition {n}")
            total = sum((e_sol_bound(t, p).value if t > 1 else Fraction(1) for t in orbit_sizes), Fraction(0))
            return BoundValue.of(total, "orbit-sum", f"sum E_sol(t_i,{p}) over {list(orbit_sizes)}").scaled(a)
        case OrbitPart.COPRIME_PART:
            if r is None or r == p:
                raise BoundInputError(f"Coprime part needs a prime r != p, got r={r}")
            n_r = p_part(n, r)
            factor = _min_dim(a, chi1)
            value = BoundValue.of(Fraction(n, n_r), "orbit-coprime-part", f"n/n_{r} = {n}/{n_r}")
            return value.scaled(factor)
        case OrbitPart.CHI_WIDTH:
            n_p = p_part(n, p)
            if n_p == 1:
                raise BoundInputError(f"Chi-width bound needs p | n, got n={n}, p={p}")
            k = factorize(n).exponent(p)
            floored = certified_floor(const(ConstantId.B) * n / sqrt(k))
            value = BoundValue.of(floored, "orbit-chi-width", f"floor(b {n}/sqrt({k})) = {floored}")
            return value.scaled(chi)
        case OrbitPart.GENERAL:
            return e_bound(n, p).step("orbit-general", f"{a} * E({n},{p})").scaled(a)
    raise BoundInputError(f"Unknown orbit bound part {part!r}")


def soluble_orbit_bound(n: int, p: int, a: int) -> BoundValue:
    """``a * E_sol(n, p)``, valid when a soluble subgroup acts transitively
    on the cosets.
    """
    return e_sol_bound(n, p).step("soluble-orbit", f"{a} * E_sol({n},{p})").scaled(a)


def log_form_expr(n: int, a: int | Fraction) -> RealExpr:
    """Unfloored log form: ``2 a n / (c' log n)`` below `LOG_FORM_SWITCH`,
    ``a b1 n / sqrt(log n)`` from it on.
    """
    _check_n(n)
    if n < LOG_FORM_SWITCH:
        return lit(2 * Fraction(a) * n) / (const(ConstantId.CPRIME) * log2(n))
    return lit(Fraction(a) * n) * const(ConstantId.B1) / sqrt(log2(n))


def log_form_bound(n: int, p: int, a: int, by_p_part: bool = False) -> BoundValue:
    """Bound on ``a * E(n, p)`` depending only on ``n`` and ``a``.

    Parameters
    ----------
    n
        Index, at least 2.
    p
        Characteristic; used only when ``by_p_part`` is set.
    a
        Module dimension or composition length.
    by_p_part
        Choose the branch from ``n_p`` against ``sqrt(n)`` rather than from
        the switch at ``n = 1261``.
    """
    _check_n(n)
    if a == 0:
        return BoundValue.of(0, "log-form", "a = 0")
    if by_p_part:
        n_p = p_part(n, p)
        if n_p * n_p >= n:
            expr: RealExpr = lit(Fraction(a) * n) * const(ConstantId.B1) / sqrt(log2(n))
            branch = "n_p >= sqrt(n): a b1 n/sqrt(log n)"
        else:
            expr = lit(2 * Fraction(a) * n) / (const(ConstantId.CPRIME) * log2(n))
            branch = "n_p < sqrt(n): 2an/(c' log n)"
    else:
        expr = log_form_expr(n, a)
        branch = "2an/(c' log n)" if n < LOG_FORM_SWITCH else "a b1 n/sqrt(log n)"
    value = certified_floor(expr)
    return BoundValue.of(value, "log-form", f"n={n}, a={a}, {branch} -> {value}")

