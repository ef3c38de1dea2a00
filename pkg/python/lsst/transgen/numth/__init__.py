"""Exact integer and rational arithmetic: factorization, p-parts, the
largest prime-power divisor, the omega statistics and the width bound ws.
"""

from ._arith import big_k, binom, lpp, omega, omega1, p_part, ws
from ._factor import Factorization, factorize, squarefree_decomposition
from ._primes import MILLER_RABIN_LIMIT, is_prime, lpp_table, prime_pi, primes_up_to

__all__ = (
    "MILLER_RABIN_LIMIT",
    "Factorization",
    "big_k",
    "binom",
    "factorize",
    "is_prime",
    "lpp",
    "lpp_table",
    "omega",
    "omega1",
    "p_part",
    "prime_pi",
    "primes_up_to",
    "squarefree_decomposition",
    "ws",
)
