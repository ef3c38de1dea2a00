"""Exact prime factorization."""

from __future__ import annotations

__all__ = ("Factorization", "factorize", "squarefree_decomposition")

import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from ..errors import NumberTheoryError
from ._primes import MILLER_RABIN_LIMIT, is_prime, primes_up_to

_TRIAL_PRIMES = tuple(primes_up_to(1000))

_TRIAL_DIVISION_LIMIT = 10**7
"""Largest divisor tried when a composite cofactor remains after the small
primes.
"""


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer.

    The empty factorization represents 1.
    """

    n: int
    """The factorized integer."""

    factors: tuple[tuple[int, int], ...]
    """``(prime, exponent)`` pairs with strictly increasing primes."""

    def __post_init__(self) -> None:
        product = 1
        previous = 1
        for p, e in self.factors:
            if p <= previous or e < 1:
                raise NumberTheoryError(f"Malformed factorization {self.factors}")
            previous = p
            product *= p**e
        if product != self.n:
            raise NumberTheoryError(f"Factors {self.factors} multiply to {product}, not {self.n}")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        """Distinct primes in increasing order."""
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        """Exponent of ``p`` in ``n`` (0 when ``p`` does not divide ``n``)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divisors(self) -> list[int]:
        """All positive divisors of ``n`` in increasing order."""
        divisors = [1]
        for p, e in self.factors:
            divisors = [d * p**i for d in divisors for i in range(e + 1)]
        return sorted(divisors)

    def multiply_out(self) -> int:
        """Recompute ``n`` from the factors."""
        return math.prod(p**e for p, e in self.factors)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Factorize a positive integer.

    Parameters
    ----------
    n
        Integer to factorize, ``n >= 1``.

    Returns
    -------
    factorization
        The prime factorization of ``n``.

    Raises
    ------
    NumberTheoryError
        Raised if ``n < 1`` or if a composite cofactor has no prime factor
        below the trial division limit.
    """
    if n < 1:
        raise NumberTheoryError(f"Cannot factorize {n}; n must be positive")
    factors: list[tuple[int, int]] = []
    remaining = n
    for p in _TRIAL_PRIMES:
        if p * p > remaining:
            break
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append((p, e))
    if remaining > 1:
        factors.extend(_factor_cofactor(remaining, n))
    factors.sort()
    return Factorization(n=n, factors=tuple(factors))


def _factor_cofactor(m: int, n: int) -> list[tuple[int, int]]:
    """Factor a cofactor with no prime divisor below 1000."""
    if m < MILLER_RABIN_LIMIT and is_prime(m):
        return [(m, 1)]
    factors: list[tuple[int, int]] = []
    d = _TRIAL_PRIMES[-1] + 2
    while d * d <= m:
        if d > _TRIAL_DIVISION_LIMIT:
            raise NumberTheoryError(f"Factorization of {n} is outside the supported range")
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
            if m < MILLER_RABIN_LIMIT and m > 1 and is_prime(m):
                break
        d += 2
    if m > 1:
        factors.append((m, 1))
    return factors


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * r`` with ``r`` squarefree.

    Returns
    -------
    s, r
        The square part root and the squarefree kernel.
    """
    s = 1
    r = 1
    for p, e in factorize(n):
        s *= p ** (e // 2)
        if e % 2:
            r *= p
    return s, r
