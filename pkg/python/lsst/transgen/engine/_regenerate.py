"""Regeneration of the smooth and exceptional tables in increasing degree
order.
"""

from __future__ import annotations

__all__ = (
    "ExceptionalEnvelopeRow",
    "exceptional_case_bounds",
    "exceptional_envelope",
    "exceptional_row",
    "populate_store",
    "regenerate_exceptional_table",
    "regenerate_smooth_table",
    "smooth_case_bounds",
)

import logging
from dataclasses import dataclass

from ..bounds import BoundValue, SolubilityContext, holt_bound
from ..mersenne import enumerate_triples
from ..numth import factorize
from ..tables import degree_expr
from ..xreal import C1_BOUND, C1_DEGREE, ConstantId, certified_floor, const, log2, sqrt
from ._cases import exceptional_bound, imprimitive_case_bound, mersenne_case_bound
from ._store import DegreeClass, DegreeRecord, DegreeStore, generic_target


def _three_power_exponent(n: int) -> int | None:
    """``m`` with ``n == 3 * 2**m``, or `None`."""
    if n % 3:
        return None
    q = n // 3
    return q.bit_length() - 1 if q & (q - 1) == 0 else None


def smooth_case_bounds(d: int, store: DegreeStore) -> list[tuple[str, dict[str, int], BoundValue]]:
    """Every case bound for a smooth degree ``d``.

    The primitive case, each block size ``m >= 2`` with at least two blocks
    (the soluble context for ``m = 2``), and for ``d / 2 = 3 * 2**m`` each
    Mersenne triple.
    """
    primitive = holt_bound(d).value
    cases: list[tuple[str, dict[str, int], BoundValue]] = [
        ("primitive", {}, BoundValue.of(primitive, "primitive", f"floor(log {d}) = {primitive}"))
    ]
    for m in factorize(d).divisors():
        n = d // m
        if m < 2 or n < 2:
            continue
        ctx = SolubilityContext.SOLUBLE if m == 2 else SolubilityContext.GENERAL
        cases.append(("blocks", {"m": m, "n": n}, imprimitive_case_bound(d, m, n, ctx, store)))
    exponent = _three_power_exponent(d // 2) if d % 2 == 0 else None
    if exponent is not None and exponent >= 1:
        for triple in enumerate_triples(exponent):
            params = {"e": triple.e, "r": triple.r, "t": triple.t}
            cases.append(("mersenne", params, mersenne_case_bound(d, triple, store)))
    return cases


def _smooth_row(d: int, store: DegreeStore) -> DegreeRecord:
    cases = smooth_case_bounds(d, store)
    bound = max(int(b) for _, _, b in cases)
    return DegreeRecord(d, DegreeClass.SMOOTH, bound, printed=store.tables.smooth_degrees[d])


def exceptional_case_bounds(d: int, store: DegreeStore) -> list[tuple[str, dict[str, int], BoundValue]]:
    """Every case bound for an exceptional degree ``d`` outside the 2-block
    chain.

    The primitive case, blocks of size 2 in the soluble context
    (``"soluble-blocks"``) and in general, and each block size ``m > 2``
    with at least two blocks.
    """
    primitive = holt_bound(d).value
    cases: list[tuple[str, dict[str, int], BoundValue]] = [
        ("primitive", {}, BoundValue.of(primitive, "primitive", f"floor(log {d}) = {primitive}"))
    ]
    half = d // 2
    soluble = imprimitive_case_bound(d, 2, half, SolubilityContext.SOLUBLE, store)
    cases.append(("soluble-blocks", {"m": 2, "n": half}, soluble))
    for m in factorize(d).divisors():
        n = d // m
        if m < 2 or n < 2:
            continue
        bound = imprimitive_case_bound(d, m, n, SolubilityContext.GENERAL, store)
        cases.append(("blocks", {"m": m, "n": n}, bound))
    return cases


def exceptional_row(d: int, store: DegreeStore) -> tuple[DegreeRecord, list[int]]:
    """The regenerated record for an exceptional degree and the 2-block
    chain bound for each ``f_G`` in ``0..k``.

    ``f`` is the least ``f_G >= 1`` whose chain bound exceeds the generic
    target, and the record's bound is then the largest chain bound over
    ``f_G >= f``. Without such an ``f`` the bound is the largest of
    `exceptional_case_bounds`.
    """
    k = (d & -d).bit_length() - 1
    per_f = [int(exceptional_bound(d, f_g, store)) for f_g in range(k + 1)]
    target = generic_target(d)
    f = next((f_g for f_g in range(1, k + 1) if per_f[f_g] > target), None)
    if f is None:
        bound = max(int(b) for _, _, b in exceptional_case_bounds(d, store))
    else:
        bound = max(per_f[f:])
    printed = store.tables.exceptional_degrees[d]
    record = DegreeRecord(
        d, DegreeClass.EXCEPTIONAL, bound, f=f, printed=printed.bound, printed_f=printed.f
    )
    return record, per_f

def populate_store(store: DegreeStore, up_to: int | None = None) -> DegreeStore:
    """Regenerate every tabulated degree up to ``up_to`` not yet in the
    store, in increasing order.
    """
    logger = logging.getLogger(__name__)
    tables = store.tables
    degrees = sorted(set(tables.smooth_degrees) | set(tables.exceptional_degrees))
    for d in degrees:
        if up_to is not None and d > up_to:
            break
        if d in store:
            continue
        if tables.is_smooth_degree(d):
            record = _smooth_row(d, store)
        else:
            record, _ = exceptional_row(d, store)
        store.add(record)
        logger.info("Regenerated %s (%d): bound %d, f %s", record.d_expr, d, record.bound, record.f)
        if record.discrepancy:
            logger.warning(
                "%s differs from the printed row: bound %d vs %s, f %s vs %s",
                record.d_expr,
                record.bound,
                record.printed,
                record.f,
                record.printed_f,
            )
    return store


def regenerate_smooth_table(store: DegreeStore | None = None) -> list[DegreeRecord]:
    """Regenerated smooth rows, in the printed order."""
    store = populate_store(DegreeStore() if store is None else store)
    return [store[row.degree] for row in store.tables.smooth]


def regenerate_exceptional_table(store: DegreeStore | None = None) -> list[DegreeRecord]:
    """Regenerated exceptional rows, in the printed order."""
    store = populate_store(DegreeStore() if store is None else store)
    return [store[row.degree] for row in store.tables.exceptional]


@dataclass(frozen=True)
class ExceptionalEnvelopeRow:
    """An exceptional bound checked against ``floor(c1 d / sqrt(log d))``."""

    d: int
    bound: int
    printed: int
    envelope: int

    @property
    def d_expr(self) -> str:
        return degree_expr(self.d)

    @property
    def holds(self) -> bool:
        return max(self.bound, self.printed) <= self.envelope


def _c1_envelope(d: int) -> int:
    if d == C1_DEGREE:
        # c1 is defined by this row, so the envelope is an exact integer.
        return C1_BOUND
    return certified_floor(const(ConstantId.C1) * d / sqrt(log2(d)))


def exceptional_envelope(store: DegreeStore | None = None) -> list[ExceptionalEnvelopeRow]:
    """Check every regenerated and printed exceptional row against the
    ``c1`` envelope.
    """
    store = populate_store(DegreeStore() if store is None else store)
    rows = []
    for row in store.tables.exceptional:
        envelope = _c1_envelope(row.degree)
        rows.append(ExceptionalEnvelopeRow(row.degree, store[row.degree].bound, row.bound, envelope))
    return rows