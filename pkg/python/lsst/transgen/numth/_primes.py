"""Primality testing and prime sieves."""

from __future__ import annotations

__all__ = (
    "MILLER_RABIN_LIMIT",
    "is_prime",
    "lpp_table",
    "prime_pi",
    "primes_up_to",
)

import bisect
from functools import lru_cache

import gmpy2

from ..errors import NumberTheoryError

_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
"""Miller-Rabin bases that are deterministic below `MILLER_RABIN_LIMIT`.
"""

MILLER_RABIN_LIMIT = 3_317_044_064_679_887_385_961_981
"""Smallest strong pseudoprime to all of `_WITNESSES`.
"""

_SMALL_LIMIT = 1000


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    return tuple(primes_up_to(_SMALL_LIMIT))


def primes_up_to(n: int) -> list[int]:
    """List the primes less than or equal to ``n``.

    Parameters
    ----------
    n
        Inclusive upper limit.

    Returns
    -------
    primes
        Primes in increasing order.
    """
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(gmpy2.isqrt(n)) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_pi(n: int) -> int:
    """Count the primes less than or equal to ``n``."""
    if n <= _SMALL_LIMIT:
        return bisect.bisect_right(_small_primes(), n)
    return len(primes_up_to(n))


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division by the primes below 1000, then strong probable-prime
    tests to the first twelve prime bases, which is a proof of primality
    below `MILLER_RABIN_LIMIT`.

    Raises
    ------
    NumberTheoryError
        Raised if ``n`` has no small factor and is at least
        `MILLER_RABIN_LIMIT`.
    """
    if n < 2:
        return False
    for p in _small_primes():
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _SMALL_LIMIT * _SMALL_LIMIT:
        return True
    if n >= MILLER_RABIN_LIMIT:
        raise NumberTheoryError(f"Primality of {n} is outside the deterministic range")
    mpz_n = gmpy2.mpz(n)
    return all(gmpy2.is_strong_prp(mpz_n, a) for a in _WITNESSES)


def lpp_table(n_max: int) -> list[int]:
    """Largest prime-power divisor of every integer up to ``n_max``.

    Parameters
    ----------
    n_max
        Inclusive upper limit.

    Returns
    -------
    table
        ``table[n]`` is ``lpp(n)`` for ``1 <= n <= n_max``; ``table[0]`` is 0.
    """
    table = [1] * (n_max + 1)
    table[0] = 0
    for p in primes_up_to(n_max):
        q = p
        while q <= n_max:
            for multiple in range(q, n_max + 1, q):
                if table[multiple] < q:
                    table[multiple] = q
            q *= p
    return table
