"""Mersenne exponents and the ``(e, r, t)`` triples that describe the
insoluble minimally transitive groups of degree ``3 * 2**m``.
"""

from __future__ import annotations

__all__ = (
    "MersenneTriple",
    "check_orbit_identity",
    "enumerate_triples",
    "is_mersenne_exponent",
    "lucas_lehmer",
    "mersenne_exponents",
    "orbit_profile",
    "triple_table",
)

import math
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import gmpy2

from .errors import BoundInputError
from .numth import is_prime

MIN_MERSENNE_EXPONENT = 5
"""Triples use Mersenne primes ``p = 2**e - 1 >= 31``."""


def lucas_lehmer(e: int) -> bool:
    """Lucas-Lehmer test of ``2**e - 1`` for an odd prime ``e``."""
    if e < 3 or not is_prime(e):
        raise ValueError(f"Lucas-Lehmer needs an odd prime exponent, got {e}")
    m = gmpy2.mpz(2) ** e - 1
    s = gmpy2.mpz(4)
    for _ in range(e - 2):
        s = (s * s - 2) % m
    return s == 0


@lru_cache(maxsize=1024)
def is_mersenne_exponent(e: int) -> bool:
    """Whether ``2**e - 1`` is prime."""
    if e < 2:
        return False
    if e == 2:
        return True
    # 2**e - 1 is divisible by 2**d - 1 for every divisor d of e.
    if not is_prime(e):
        return False
    return lucas_lehmer(e)


def mersenne_exponents(limit: int) -> list[int]:
    """Mersenne exponents ``e <= limit`` in increasing order."""
    return [e for e in range(2, limit + 1) if is_mersenne_exponent(e)]


@dataclass(frozen=True, order=True)
class MersenneTriple:
    """Parameters ``(e, r, t)`` with ``m = e * r + t``.

    The normal subgroup of the minimally transitive group is a direct product
    of ``r`` copies of ``L2(p)`` for the Mersenne prime ``p = 2**e - 1``.
    """

    e: int
    r: int
    t: int

    t1: int | None = None
    """Optional split ``0 <= t1 <= t`` of the 2-part of the orbit
    structure.
    """

    def __post_init__(self) -> None:
        if self.r < 1 or self.t < 0:
            raise BoundInputError(f"Invalid triple {self.as_tuple()}: need r >= 1 and t >= 0")
        if self.e < MIN_MERSENNE_EXPONENT or not is_mersenne_exponent(self.e):
            raise BoundInputError(
                f"Invalid triple {self.as_tuple()}: 2**{self.e} - 1 is not a Mersenne prime >= 31"
            )
        if self.t1 is not None and not 0 <= self.t1 <= self.t:
            raise BoundInputError(f"t1={self.t1} outside 0..{self.t}")

    @property
    def p(self) -> int:
        return 2**self.e - 1

    @property
    def m(self) -> int:
        return self.e * self.r + self.t

    @property
    def degree(self) -> int:
        """``3 * 2**m``."""
        return 3 * 2**self.m

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.e, self.r, self.t)

    def __str__(self) -> str:
        return f"({self.e},{self.r},{self.t})"


def enumerate_triples(m: int) -> tuple[MersenneTriple, ...]:
    """All triples with ``e * r + t == m``, ordered by ``e`` then ``r``.

    Degrees ``3 * 2**m`` with ``m < 5`` have no triples.
    """
    if m < 1:
        raise BoundInputError(f"m must be positive, got {m}")
    return tuple(
        MersenneTriple(e, r, m - e * r)
        for e in mersenne_exponents(m)
        if e >= MIN_MERSENNE_EXPONENT
        for r in range(1, m // e + 1)
    )


def orbit_profile(triple: MersenneTriple, t1: int) -> list[tuple[int, int]]:
    """Orbit lengths and multiplicities ``(3 * p**k * 2**(t - t1),
    binom(r, k) * 2**t1)`` for ``k = 0..r``.
    """
    if not 0 <= t1 <= triple.t:
        raise BoundInputError(f"t1={t1} outside 0..{triple.t}")
    p = triple.p
    return [(3 * p**k * 2 ** (triple.t - t1), math.comb(triple.r, k) * 2**t1) for k in range(triple.r + 1)]


def check_orbit_identity(e: int, r: int) -> bool:
    """``sum(binom(r, k) * 3 * p**k) == 3 * (p + 1)**r`` with
    ``p = 2**e - 1``.
    """
    if not is_mersenne_exponent(e) or r < 1:
        raise BoundInputError(f"Need a Mersenne exponent and r >= 1, got e={e}, r={r}")
    p = 2**e - 1
    return sum(math.comb(r, k) * 3 * p**k for k in range(r + 1)) == 3 * (p + 1) ** r


def triple_table(m_values: Iterable[int]) -> dict[int, tuple[MersenneTriple, ...]]:
    """Triples keyed by degree ``3 * 2**m``, for the degrees that have any."""
    table = {}
    for m in m_values:
        triples = enumerate_triples(m)
        if triples:
            table[3 * 2**m] = triples
    return table
