"""Bounds for the individual cases of an imprimitive group of degree
``d = m * n`` with minimal block size ``m``.
"""

from __future__ import annotations

__all__ = (
    "EXCEPTIONAL_ODD_PARTS",
    "block_log_bound",
    "exceptional_bound",
    "imprimitive_case_bound",
    "mersenne_case_bound",
    "profile_bound",
)

from ..bounds import (
    BoundValue,
    SolubilityContext,
    chief_series_bound,
    e_bound,
    holt_bound,
    maximum,
    mersenne_series_bound,
    minimum,
    s4_block_bound,
)
from ..errors import BoundInputError
from ..mersenne import MersenneTriple
from ..numth import factorize
from ._store import DegreeStore

EXCEPTIONAL_ODD_PARTS = (5, 15)
"""Odd parts ``v`` of the exceptional degrees ``2**k * v``."""


def _dt(n: int, store: DegreeStore) -> BoundValue:
    value = store.dt_upper(n)
    return BoundValue.of(value, "dt", f"dt({n}) <= {value}")


def block_log_bound(m: int, n: int, store: DegreeStore) -> BoundValue:
    """``n floor(log m) + dt(n)``."""
    log_m = m.bit_length() - 1
    term = BoundValue.of(n * log_m, "block-log", f"{n} * floor(log {m}) = {n * log_m}")
    return term + _dt(n, store)


def profile_bound(m: int, n: int, ctx: SolubilityContext, store: DegreeStore) -> BoundValue | None:
    """Chief series bound maximized over the tabulated primitive groups of
    degree ``m``; `None` when none are tabulated.
    """
    profiles = store.tables.profiles_for(m)
    if not profiles:
        return None
    d_s = _dt(n, store)
    return maximum(
        ((profile.name, chief_series_bound(profile, n, ctx, d_s)) for profile in profiles),
        "profile-max",
    )


def imprimitive_case_bound(d: int, m: int, n: int, ctx: SolubilityContext, store: DegreeStore) -> BoundValue:
    """Best bound on ``d(G)`` for ``G`` of degree ``d`` with minimal block
    size ``m`` and ``n`` blocks.

    The least of the block-log bound, the ``S4`` bound when ``m == 4`` and
    the profile bound when degree-``m`` profiles are tabulated.

    Parameters
    ----------
    d
        Degree, equal to ``m * n``.
    m
        Block size, at least 2.
    n
        Number of blocks, at least 2.
    ctx
        Solubility context for the chief series bounds.
    store
        Degree store supplying ``dt(n)``.

    Raises
    ------
    BoundInputError
        Raised if ``m * n != d`` or either factor is below 2.
    """
    if m * n != d or m < 2 or n < 2:
        raise BoundInputError(f"Need d = m * n with m, n >= 2, got d={d}, m={m}, n={n}")
    options = [("block-log", block_log_bound(m, n, store))]
    if m == 4:
        options.append(("s4-block", s4_block_bound(n, ctx, _dt(n, store))))
    profiles = profile_bound(m, n, ctx, store)
    if profiles is not None:
        options.append(("profile", profiles))
    return minimum(options, "imprimitive-case")


def mersenne_case_bound(d: int, triple: MersenneTriple, store: DegreeStore) -> BoundValue:
    """Bound for blocks of size 2 whose block action has no soluble
    transitive subgroup: the larger of the two sum ranges of the Mersenne
    series bound with ``a = 1`` and ``d_S = dt(d / 2)``.
    """
    if d != 2 * triple.degree:
        raise BoundInputError(f"Triple {triple} does not describe degree {d}: need d/2 = {triple.degree}")
    d_s = _dt(d // 2, store)
    return maximum(
        (
            (f"k>={start}", mersenne_series_bound(1, triple, d_s, start=start))
            for start in (0, 1)
        ),
        "mersenne-case",
    )


def _split_exceptional(d: int) -> tuple[int, int]:
    k = (d & -d).bit_length() - 1
    v = d >> k
    if v not in EXCEPTIONAL_ODD_PARTS:
        raise BoundInputError(f"{d} is not of the form 2^k * v with v in {EXCEPTIONAL_ODD_PARTS}")
    return k, v


def exceptional_bound(d: int, f_g: int, store: DegreeStore) -> BoundValue:
    """Bound for ``G`` of degree ``d = 2**k * v`` with ``f_g`` nested
    2-blocks.

    ``sum_{i=1..f_g} E(2**(k-i) v, 2)`` plus a bound for the
    transitive quotient of degree ``s = 2**(k-f_g) v``. The quotient may be
    primitive or have any minimal block size ``r > 2``, so its bound is the
    largest of the primitive bound and the imprimitive case bounds.

    Parameters
    ----------
    d
        Exceptional degree ``2**k * v``, ``v`` in ``{5, 15}``.
    f_g
        Number of 2-blocks, ``0 <= f_g <= k``.
    store
        Degree store supplying ``dt``.
    """
    k, v = _split_exceptional(d)
    if not 0 <= f_g <= k:
        raise BoundInputError(f"f_G must lie in 0..{k}, got {f_g}")
    total = BoundValue.of(0, "two-block-chain", f"{f_g} 2-blocks")
    for i in range(1, f_g + 1):
        total = total + e_bound(2 ** (k - i) * v, 2)
    s = 2 ** (k - f_g) * v
    primitive = holt_bound(s).value
    options = [("primitive", BoundValue.of(primitive, "primitive", f"floor(log {s}) = {primitive}"))]
    for r in factorize(s).divisors():
        if r > 2 and s // r >= 2:
            options.append((f"r={r}", imprimitive_case_bound(s, r, s // r, SolubilityContext.GENERAL, store)))
    quotient = maximum(options, "quotient")
    return (total + quotient).step("exceptional", f"d={d}, f_G={f_g}, quotient degree {s}")
