"""Bounds on ``d(G)`` for a transitive group ``G`` inside a wreath product
``H wr S``, built from a chief series of the primitive component ``R``.
"""

from __future__ import annotations

__all__ = (
    "SplitPart",
    "chief_series_bound",
    "log_form_series_bound",
    "mersenne_series_bound",
    "orbit_count_bound",
    "s4_block_bound",
    "split_exponent_bound",
    "split_exponent_expr",
)

import math
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction

from ..errors import BoundInputError
from ..mersenne import MersenneTriple
from ..numth import factorize, p_part, ws
from ..xreal import ConstantId, RealExpr, certified_floor, const, lit, log2, power, sqrt
from ._induced import _check_n, induced_bound, log_form_bound
from ._profiles import ChiefFactorProfile
from ._values import BoundValue, SolubilityContext, minimum


def _context_name(ctx: SolubilityContext) -> str:
    return "E_sol" if ctx is SolubilityContext.SOLUBLE else "E"


def _factor_sum(
    factors: Sequence[tuple[int, int]], n: int, ctx: SolubilityContext, rule: str
) -> BoundValue:
    total = BoundValue.of(0, rule, f"sum a_i {_context_name(ctx)}(n, p_i) over {list(factors)}")
    for p, a in factors:
        if a < 0:
            raise BoundInputError(f"Negative multiplicity {a} for prime {p}")
        total = total + induced_bound(n, p, ctx).scaled(a)
    return total


def chief_series_bound(
    profile: ChiefFactorProfile, n: int, ctx: SolubilityContext, d_s: BoundValue
) -> BoundValue:
    """``sum(a_i D(n, p_i)) + c_nonab + d_S``, floored once at the end.

    Parameters
    ----------
    profile
        Chief factors of the primitive component of degree ``m``.
    n
        Degree of the block stabilizer action, at least 2.
    ctx
        Chooses ``D = E_sol`` or ``D = E``.
    d_s
        Bound on the number of generators of the top group.
    """
    _check_n(n)
    total = _factor_sum(profile.abelian, n, ctx, "chief-series")
    total = total + profile.c_nonab + d_s
    detail = f"{profile} at n={n}, + c_nonab={profile.c_nonab} + d_S={d_s}"
    return total.step("chief-series", detail).floored()


def mersenne_series_bound(a: int, triple: MersenneTriple, d_s: BoundValue, start: int = 0) -> BoundValue:
    """``a * sum_{k=start..r} 2**t binom(r, k) E_sol(3 p**k, 2) + d_S``.

    ``p = 2**e - 1`` is odd, so every ``E_sol(3 p**k, 2)`` is 1 and the sum
    collapses to ``a 2**t 2**r`` for ``start=0`` and ``a 2**t (2**r - 1)``
    for ``start=1``.

    Parameters
    ----------
    a
        Composition length of the primitive component.
    triple
        The Mersenne triple ``(e, r, t)``.
    d_s
        Bound on the number of generators of the top group.
    start
        First index of the sum, 0 or 1.
    """
    if a < 0:
        raise BoundInputError(f"Composition length must be nonnegative, got {a}")
    if start not in (0, 1):
        raise BoundInputError(f"Sum must start at k=0 or k=1, got {start}")
    count = 2**triple.r - start
    value = a * 2**triple.t * count
    term = BoundValue.of(
        value,
        "mersenne-series",
        f"{a} * 2^{triple.t} * sum_(k={start}..{triple.r}) binom({triple.r},k) E_sol(3*{triple.p}^k,2)"
        f" with E_sol(3*{triple.p}^k,2) = 1 -> {value}",
    )
    return (term + d_s).step("mersenne-series", f"{triple} start={start} + d_S={d_s}")


def orbit_count_bound(
    n: int,
    p: int,
    a: int,
    chi: int | float,
    chi1: int | float,
    r: int,
    d_x: int,
    rest: Sequence[tuple[int, int]],
    ctx: SolubilityContext,
    d_s: BoundValue,
    with_b: bool = False,
) -> BoundValue:
    """Chief series bound with one abelian factor ``p**a`` bounded through
    the orbit counts ``chi`` and ``chi1`` of a subgroup ``X``.

    In the general context the factor contributes the least of
    ``chi floor(n / sqrt(log_p n_p)) + d(X)``, ``chi1 n / n_r + d(X)`` and
    ``a E(n, p)``; in the soluble context the least of ``chi ws(n) + d(X)``,
    ``chi1 n_p + d(X)`` and ``a E_sol(n, p)``.

    Parameters
    ----------
    n, p, a
        Index, characteristic and dimension of the distinguished factor.
    chi, chi1
        Orbit counts, possibly `math.inf`.
    r
        Prime different from ``p``.
    d_x
        Number of generators of ``X``.
    rest
        ``(p_i, a_i)`` for the remaining abelian factors.
    ctx
        Solubility context.
    d_s
        Bound on the number of generators of the top group.
    with_b
        Use ``chi floor(b n / sqrt(log_p n_p))`` for the first general
        operand instead of the form without ``b``.
    """
    _check_n(n)
    if r == p:
        raise BoundInputError(f"Need a prime r != p, got r = p = {p}")
    if d_x < 0:
        raise BoundInputError(f"d(X) must be nonnegative, got {d_x}")
    n_p = p_part(n, p)
    operands: list[tuple[str, BoundValue]] = []
    if ctx is SolubilityContext.SOLUBLE:
        width = BoundValue.of(ws(n), "orbit-count-width", f"ws({n}) = {ws(n)}").scaled(chi) + d_x
        operands.append(("chi*ws(n)+d(X)", width))
        operands.append(("chi1*n_p+d(X)", BoundValue.of(n_p, "orbit-count-p-part").scaled(chi1) + d_x))
    else:
        if n_p == 1:
            width = BoundValue.of(math.inf, "orbit-count-width", f"n_{p} = 1")
        else:
            k = factorize(n).exponent(p)
            scale: RealExpr = const(ConstantId.B) * n if with_b else lit(n)
            floored = certified_floor(scale / sqrt(k))
            form = "floor(b n/sqrt(log_p n_p))" if with_b else "floor(n/sqrt(log_p n_p))"
            width = BoundValue.of(floored, "orbit-count-width", f"{form} = {floored}").scaled(chi) + d_x
        operands.append(("chi*width+d(X)", width))
        n_r = p_part(n, r)
        coprime = BoundValue.of(Fraction(n, n_r), "orbit-count-coprime", f"n/n_{r} = {n}/{n_r}")
        operands.append(("chi1*n/n_r+d(X)", coprime.scaled(chi1) + d_x))
    operands.append((f"a*{_context_name(ctx)}(n,p)", induced_bound(n, p, ctx).scaled(a)))
    best = minimum(operands, "orbit-count")
    total = best + _factor_sum(rest, n, ctx, "orbit-count-rest") + d_s
    return total.step("orbit-count", f"n={n}, p={p}, a={a}, ctx={ctx.value}, + d_S={d_s}").floored()


def s4_block_bound(n: int, ctx: SolubilityContext, d_s: BoundValue) -> BoundValue:
    """``2 D(n, 2) + D(n, 3) + 1 + d_S``, for blocks of size 4 acted on
    by ``S4``.
    """
    _check_n(n)
    total = induced_bound(n, 2, ctx).scaled(2) + induced_bound(n, 3, ctx) + 1 + d_s
    return total.step("s4-block", f"2 D({n},2) + D({n},3) + 1 + d_S={d_s}").floored()


class SplitPart(str, Enum):
    """Ways of splitting the composition factors by an exponent ``alpha``."""

    COPRIME = "coprime"
    """All abelian factors through ``n / ((1 - alpha) c' log n)``."""

    DOMINANT = "dominant"
    """``n_p >= n**alpha``: the ``p``-factors take the square-root form."""

    COMPLEMENT = "complement"
    """``n_p <= n**(1 - alpha)``: the roles of ``p`` and ``p'`` swap."""


def _check_alpha(alpha: Fraction) -> None:
    if not 0 < alpha < 1:
        raise BoundInputError(f"alpha must lie strictly between 0 and 1, got {alpha}")


def _split_terms(
    part: SplitPart, n: int, alpha: Fraction, a_p: int, a_pprime: int, a_ab: int
) -> list[tuple[str, RealExpr]]:
    if part is SplitPart.COPRIME:
        if a_ab == 0:
            return []
        coprime = lit(Fraction(a_ab) * n / (1 - alpha)) / (const(ConstantId.CPRIME) * log2(n))
        return [("a_ab n/((1-alpha) c' log n)", coprime)]
    if part is SplitPart.DOMINANT:
        power_coeff, sqrt_coeff = a_pprime, a_p
    else:
        power_coeff, sqrt_coeff = a_p, a_pprime
    terms: list[tuple[str, RealExpr]] = []
    if power_coeff:
        terms.append((f"{power_coeff} n^(1-alpha)", power_coeff * power(n, 1 - alpha)))
    if sqrt_coeff:
        terms.append(
            (
                f"{sqrt_coeff} sqrt(1/alpha) b n/sqrt(log n)",
                sqrt_coeff * sqrt(1 / alpha) * const(ConstantId.B) * n / sqrt(log2(n)),
            )
        )
    return terms


def split_exponent_expr(
    part: SplitPart,
    n: int,
    alpha: Fraction,
    a_p: int,
    a_pprime: int,
    a_ab: int,
    c_nonab: int,
    d_s: RealExpr | int,
) -> RealExpr:
    """Unfloored right-hand side of `split_exponent_bound`, with ``d_S``
    given as an expression.
    """
    _check_n(n)
    _check_alpha(Fraction(alpha))
    expr: RealExpr = lit(c_nonab) + d_s
    for _, term in _split_terms(part, n, Fraction(alpha), a_p, a_pprime, a_ab):
        expr = expr + term
    return expr


def split_exponent_bound(
    part: SplitPart,
    n: int,
    alpha: Fraction,
    a_p: int,
    a_pprime: int,
    a_ab: int,
    c_nonab: int,
    d_s: BoundValue,
) -> BoundValue:
    """Chief series bound with the abelian factors split at ``n**alpha``.

    Each term is floored separately, then ``c_nonab + d_S`` is added.

    Parameters
    ----------
    part
        Which split to apply.
    n
        Index, at least 2.
    alpha
        Rational exponent in ``(0, 1)``.
    a_p, a_pprime, a_ab
        Abelian composition factors of order ``p``, prime to ``p``, and in
        total.
    c_nonab
        Number of nonabelian chief factors.
    d_s
        Bound on the number of generators of the top group.
    """
    _check_n(n)
    alpha = Fraction(alpha)
    _check_alpha(alpha)
    total = BoundValue.of(c_nonab, "split-exponent", f"c_nonab = {c_nonab}")
    for label, term in _split_terms(part, n, alpha, a_p, a_pprime, a_ab):
        floored = certified_floor(term)
        total = total + BoundValue.of(floored, "split-exponent-term", f"floor({label}) = {floored}")
    return (total + d_s).step("split-exponent", f"{part.value}, n={n}, alpha={alpha}, + d_S={d_s}")


def log_form_series_bound(n: int, a: int, d_s: BoundValue) -> BoundValue:
    """`log_form_bound` for composition length ``a`` plus ``d_S``."""
    return (log_form_bound(n, 2, a) + d_s).step("log-form-series", f"n={n}, a={a}, + d_S={d_s}")
