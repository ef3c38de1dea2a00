"""Finite sweep for blocks of size 2 with ``n < 10**66`` and a small odd
part.
"""

from __future__ import annotations

__all__ = ("DENSE_K", "K_STRIDE", "odd_parts", "sweep_two_block_finite", "two_block_points")

import logging
import math
from collections.abc import Iterable, Iterator
from itertools import product

from ..bounds import e_bound
from ..config import RunConfig
from ..engine import DegreeStore, populate_store
from ..errors import BoundInputError
from ..numth import factorize
from ._report import SweepReport
from ._small_blocks import LARGE_N

ODD_PRIMES = (3, 5, 7, 11, 13, 17)

DENSE_K = 40
"""Every ``k`` up to this value is tested in the sampled mode; this covers
every tabulated degree.
"""

K_STRIDE = 8
"""Spacing of the sampled ``k`` above `DENSE_K`."""


def odd_parts() -> list[int]:
    """The 96 odd parts ``3**l3 * 5**l5 * ... * 17**l17`` with ``l3 <= 2``
    and the other exponents at most 1, increasing. ``q = 1`` is included.
    """
    ranges = [range(3)] + [range(2)] * (len(ODD_PRIMES) - 1)
    return sorted(math.prod(p**e for p, e in zip(ODD_PRIMES, exponents)) for exponents in product(*ranges))


def _check_odd_part(q: int) -> None:
    if q < 1 or q % 2 == 0:
        raise BoundInputError(f"Odd part must be a positive odd integer, got {q}")
    for p, e in factorize(q):
        if p not in ODD_PRIMES or e > (2 if p == 3 else 1):
            raise BoundInputError(f"{q} is not a product of allowed prime powers of 3, ..., 17")


def two_block_points(q: int, exhaustive: bool = False) -> Iterator[int]:
    """Values ``n = 2**k q`` tested for the odd part ``q``, increasing.

    ``k`` runs over ``0 <= k <= k_q = floor(log2(10**66 / q))``; the sampled
    mode keeps every ``k <= DENSE_K``, every `K_STRIDE`-th ``k`` above it
    and ``k_q``.
    """
    k_q = (LARGE_N // q).bit_length() - 1
    for k in range(k_q + 1):
        n = q << k
        if n < 2:
            continue
        if exhaustive or k <= DENSE_K or k % K_STRIDE == 0 or k == k_q:
            yield n


def sweep_two_block_finite(
    q_values: Iterable[int] | None = None,
    store: DegreeStore | None = None,
    config: RunConfig | None = None,
) -> SweepReport:
    """Check ``E(n, 2) + dt(n) <= dt(2n)`` for ``n = 2**k q``.

    For untabulated ``2n`` the right side is the generic target
    ``floor(2 c n / sqrt(log 2n))``; a tabulated ``2n`` is held to its
    regenerated row.

    Parameters
    ----------
    q_values
        Odd parts to test; all 96 when `None`.
    store
        Degree store resolving ``dt(n)``; regenerated in full first.
    config
        ``exhaustive`` selects every ``k`` instead of the sampled grid.

    Raises
    ------
    BoundInputError
        Raised for an odd part outside the allowed set.
    """
    logger = logging.getLogger(__name__)
    config = RunConfig() if config is None else config
    qs = odd_parts() if q_values is None else sorted(q_values)
    for q in qs:
        _check_odd_part(q)
    store = populate_store(DegreeStore() if store is None else store)

    tested: list[int] = []
    failures: list[int] = []
    for q in qs:
        for n in two_block_points(q, config.exhaustive):
            tested.append(n)
            value = int(e_bound(n, 2)) + store.dt_upper(n)
            if value > store.dt_upper(2 * n):
                logger.warning("E(%d, 2) + dt(%d) = %d exceeds dt(%d)", n, n, value, 2 * n)
                failures.append(n)
        logger.debug("Odd part %d done", q)
    return SweepReport.from_failures(
        "two-block",
        ("E(n,2) + dt(n)", "dt(2n)"),
        None,
        sorted(tested),
        failures,
        note="exhaustive" if config.exhaustive else f"k <= {DENSE_K}, every {K_STRIDE}th k, and k_q",
        details={"q_count": len(qs)},
    )
