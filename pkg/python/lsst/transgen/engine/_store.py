"""The degree store: upper bounds on ``dt(n)`` filled in increasing degree
order.
"""

from __future__ import annotations

__all__ = ("DegreeClass", "DegreeRecord", "DegreeStore", "dt_upper", "generic_target")

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from ..errors import BoundInputError
from ..tables import EmbeddedTables, degree_expr, load_tables
from ..xreal import ConstantId, certified_floor, const, log2, sqrt


class DegreeClass(str, Enum):
    """Where a degree's bound comes from."""

    SMALL = "small-degree"
    SMOOTH = "smooth"
    EXCEPTIONAL = "exceptional"
    GENERIC = "generic"


@lru_cache(maxsize=1 << 16)
def generic_target(d: int) -> int:
    """``floor(c d / sqrt(log d))``."""
    if d < 2:
        raise BoundInputError(f"Degree must be at least 2, got {d}")
    return certified_floor(const(ConstantId.C) * d / sqrt(log2(d)))


@dataclass(frozen=True)
class DegreeRecord:
    """A degree with its certified upper bound on ``dt(d)``."""

    d: int
    degree_class: DegreeClass
    bound: int

    f: int | None = None
    """Least number of 2-blocks from which `bound` is needed, for
    exceptional degrees.
    """

    printed: int | None = None
    """The printed bound, when the degree is tabulated."""

    printed_f: int | None = None

    @property
    def d_expr(self) -> str:
        return degree_expr(self.d)

    @property
    def delta(self) -> int | None:
        """``bound - printed``; negative when the computed bound is
        smaller.
        """
        return None if self.printed is None else self.bound - self.printed

    @property
    def f_matches(self) -> bool | None:
        if self.degree_class is not DegreeClass.EXCEPTIONAL:
            return None
        return self.f == self.printed_f

    @property
    def discrepancy(self) -> bool:
        return bool(self.delta) or self.f_matches is False


class DegreeStore:
    """Append-only map from degree to `DegreeRecord`.

    The store starts with the small-degree table. Tabulated degrees above 32
    are added by table regeneration in strictly increasing order, so every
    bound used for a smaller degree is already final.

    Parameters
    ----------
    tables
        Embedded tables; defaults to the package tables.
    """

    def __init__(self, tables: EmbeddedTables | None = None) -> None:
        self.tables = load_tables() if tables is None else tables
        self._records: dict[int, DegreeRecord] = {
            d: DegreeRecord(d, DegreeClass.SMALL, bound, printed=bound)
            for d, bound in sorted(self.tables.small_degrees.items())
        }
        self._top = max(self._records)

    def __contains__(self, d: object) -> bool:
        return d in self._records

    def __getitem__(self, d: int) -> DegreeRecord:
        return self._records[d]

    def __iter__(self) -> Iterator[DegreeRecord]:
        return iter(self._records.values())

    def __len__(self) -> int:
        return len(self._records)

    @property
    def top(self) -> int:
        """Largest degree stored so far."""
        return self._top

    def get(self, d: int) -> DegreeRecord | None:
        return self._records.get(d)

    def add(self, record: DegreeRecord) -> None:
        """Append a record above every stored degree.

        Raises
        ------
        ValueError
            Raised if the degree is not larger than every stored degree.
        """
        if record.d <= self._top:
            raise ValueError(f"Degree store is append-only: {record.d} <= {self._top}")
        self._records[record.d] = record
        self._top = record.d

    def classify(self, d: int) -> DegreeClass:
        if d <= max(self.tables.small_degrees):
            return DegreeClass.SMALL
        if self.tables.is_smooth_degree(d):
            return DegreeClass.SMOOTH
        if self.tables.is_exceptional_degree(d):
            return DegreeClass.EXCEPTIONAL
        return DegreeClass.GENERIC

    def dt_upper(self, n: int) -> int:
        """Upper bound on the largest ``d(S)`` over transitive ``S`` of
        degree ``n``.

        Tabulated degrees not yet regenerated fall back to their printed
        value.
        """
        logger = logging.getLogger(__name__)
        if n < 2:
            raise BoundInputError(f"Degree must be at least 2, got {n}")
        degree_class = self.classify(n)
        if degree_class is DegreeClass.GENERIC:
            return generic_target(n)
        record = self._records.get(n)
        if record is None:
            logger.info("Degree %s not regenerated yet; using its printed bound", degree_expr(n))
            if degree_class is DegreeClass.SMOOTH:
                return self.tables.smooth_degrees[n]
            bound = self.tables.exceptional_degrees[n].bound
        else:
            bound = record.bound
        if degree_class is DegreeClass.EXCEPTIONAL:
            # Groups with fewer than f 2-blocks satisfy the generic bound.
            return max(bound, generic_target(n))
        return bound


def dt_upper(n: int, store: DegreeStore) -> int:
    """`DegreeStore.dt_upper` as a function."""
    return store.dt_upper(n)
