"""Cartesian products of chains and their rank statistics."""

from __future__ import annotations

__all__ = (
    "ChainProduct",
    "chain_product_bound",
    "rank_level_counts",
    "uniform_chain_bound",
    "width_rank",
)

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from ..numth import factorize
from ..xreal import ConstantId, certified_floor, const, lit, sqrt


@dataclass(frozen=True)
class ChainProduct:
    """The poset ``C(k1) x ... x C(kt)`` ordered coordinatewise.

    The divisors of ``prod(p_i ** (k_i - 1))`` for distinct primes
    ``p_i``, ordered by divisibility, form such a poset.
    """

    sizes: tuple[int, ...]
    """Chain sizes ``k_i``; chains of size 1 are allowed and change
    nothing.
    """

    def __post_init__(self) -> None:
        if any(k < 1 for k in self.sizes):
            raise ValueError(f"Chain sizes must be positive, got {self.sizes}")
        object.__setattr__(self, "sizes", tuple(self.sizes))

    @classmethod
    def from_divisors(cls, n: int) -> ChainProduct:
        """The divisor lattice of ``n``."""
        return cls(tuple(e + 1 for _, e in factorize(n)))

    @classmethod
    def uniform(cls, p: int, t: int) -> ChainProduct:
        """``t`` chains of size ``p``."""
        return cls((p,) * t)

    @property
    def cardinality(self) -> int:
        return math.prod(self.sizes)

    @property
    def rank(self) -> int:
        """Rank ``K`` of the top element, ``sum(k_i - 1)``."""
        return sum(k - 1 for k in self.sizes)

    @property
    def comparable_pairs(self) -> int:
        """Number of pairs ``x < y``."""
        return math.prod(k * (k + 1) // 2 for k in self.sizes) - self.cardinality


def rank_level_counts(poset: ChainProduct) -> list[int]:
    """Sizes of the rank levels ``R_0, ..., R_K``.

    Entry ``k`` is the coefficient of ``x**k`` in
    ``prod(1 + x + ... + x**(k_i - 1))``.
    """
    counts = [1]
    for k in poset.sizes:
        if k == 1:
            continue
        prefix = [0, *accumulate(counts)]
        top = len(counts) + k - 1
        counts = [prefix[min(j + 1, len(counts))] - prefix[max(j - k + 1, 0)] for j in range(top)]
    return counts


def width_rank(poset: ChainProduct) -> int:
    """Width from the middle rank level, ``|R_(K // 2)|``."""
    return rank_level_counts(poset)[poset.rank // 2]


def chain_product_bound(poset: ChainProduct) -> Fraction:
    """Exact width bound ``(n / 2**K) * binom(K, K // 2)``.

    Raises
    ------
    ValueError
        Raised if the poset has fewer than two elements.
    """
    n = poset.cardinality
    if n < 2:
        raise ValueError("The width bound needs at least two elements")
    k = poset.rank
    return Fraction(n * math.comb(k, k // 2), 2**k)


def uniform_chain_bound(p: int, t: int) -> int:
    """``floor(b * p**t / sqrt(t * (p - 1)))``, the width bound for ``t``
    chains of size ``p``.
    """
    if p < 2 or t < 1:
        raise ValueError(f"Need p >= 2 and t >= 1, got p={p}, t={t}")
    return certified_floor(const(ConstantId.B) * lit(p**t) / sqrt(t * (p - 1)))
