"""Arithmetic functions of a positive integer: p-parts, the largest prime
power divisor, the rank statistics omega, omega1 and K, and the antichain
width bound ws.
"""

from __future__ import annotations

__all__ = ("big_k", "binom", "lpp", "omega", "omega1", "p_part", "ws")

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import NumberTheoryError
from ._factor import factorize
from ._primes import is_prime


def p_part(n: int, p: int) -> int:
    """Return the ``p``-part ``n_p`` of ``n``.

    Parameters
    ----------
    n
        Positive integer.
    p
        Prime.

    Raises
    ------
    NumberTheoryError
        Raised if ``n < 1`` or ``p`` is not prime.
    """
    if n < 1:
        raise NumberTheoryError(f"n must be positive, got {n}")
    if not is_prime(p):
        raise NumberTheoryError(f"{p} is not prime")
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def lpp(n: int) -> int:
    """Largest prime-power divisor of ``n``; ``lpp(1) == 1``."""
    return max((p**e for p, e in factorize(n)), default=1)


def omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return sum(e for _, e in factorize(n))


def omega1(n: int) -> int:
    """Sum of the prime factors of ``n`` counted with multiplicity."""
    return sum(p * e for p, e in factorize(n))


def big_k(n: int) -> int:
    """``omega1(n) - omega(n)``, the rank of the divisor lattice of ``n``
    read as a product of chains of sizes ``p``.
    """
    return sum((p - 1) * e for p, e in factorize(n))


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient, 0 when ``k > n``."""
    if n < 0 or k < 0:
        raise NumberTheoryError(f"binom requires nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


@lru_cache(maxsize=65536)
def ws(n: int) -> Fraction:
    """Width bound ``(n / 2**K) * binom(K, K // 2)`` with ``K = big_k(n)``.

    The value is exact; no floor is applied.

    Raises
    ------
    NumberTheoryError
        Raised if ``n < 2``.
    """
    if n < 2:
        raise NumberTheoryError(f"ws(n) requires n >= 2, got {n}")
    k = big_k(n)
    return Fraction(n * math.comb(k, k // 2), 2**k)
