"""Per-degree certification: every case the induction needs at degree
``d``, each checked against its target.
"""

from __future__ import annotations

__all__ = (
    "BAND_LIMIT",
    "CaseEvaluation",
    "CaseStatus",
    "Certificate",
    "SMALL_BLOCK_LIMIT",
    "Verdict",
    "certify",
    "large_block_closed_form",
)

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from ..bounds import (
    BoundValue,
    SolubilityContext,
    TraceStep,
    composition_cap_expr,
    e_bound,
    holt_bound,
    log_form_series_bound,
    minimum,
    pyber_composition_bound,
)
from ..errors import BoundInputError, MissingDataError
from ..numth import factorize
from ..tables import degree_expr
from ..xreal import ConstantId, RealExpr, certified_floor, const, log2, sqrt
from ._cases import block_log_bound, exceptional_bound, imprimitive_case_bound, profile_bound
from ._regenerate import populate_store, smooth_case_bounds
from ._store import DegreeClass, DegreeStore, generic_target

SMALL_BLOCK_LIMIT = 9
"""Largest block size certified through the imprimitive case bound alone."""

BAND_LIMIT = 480
"""Largest block size whose bound may need the composition-length data."""


class CaseStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class Verdict(str, Enum):
    """Overall result of a certificate."""

    PASS = "pass"
    FAIL = "fail"
    INCOMPLETE = "incomplete"
    """Some case was skipped for missing data and none failed."""


@dataclass(frozen=True)
class CaseEvaluation:
    """One case of the induction at a fixed degree."""

    case_id: str
    """``"small-degree"``, ``"primitive"``, ``"blocks"``, ``"soluble-blocks"``,
    ``"mersenne"`` or ``"two-block-chain"``.
    """

    parameters: Mapping[str, int]
    """``m`` and ``n`` for block cases, ``e``, ``r`` and ``t`` for Mersenne
    cases, ``f_G`` for the 2-block chain.
    """

    value: int | None
    """Bound on ``d(G)``; `None` when skipped."""

    target: int
    status: CaseStatus

    attaining: tuple[str, ...] = ()
    """Labels of every alternative attaining the chosen bound."""

    note: str = ""
    trace: tuple[TraceStep, ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class Certificate:
    """All case evaluations for a degree."""

    d: int
    degree_class: DegreeClass
    target: int
    """The bound being certified: the stored bound for tabulated degrees,
    the generic target otherwise.
    """

    cases: tuple[CaseEvaluation, ...]

    f: int | None = None
    """Least number of 2-blocks needing the stored bound, for exceptional
    degrees.
    """

    @property
    def d_expr(self) -> str:
        return degree_expr(self.d)

    @property
    def verdict(self) -> Verdict:
        statuses = {case.status for case in self.cases}
        if CaseStatus.FAIL in statuses:
            return Verdict.FAIL
        if CaseStatus.SKIPPED in statuses:
            return Verdict.INCOMPLETE
        return Verdict.PASS

    @property
    def worst_value(self) -> int | None:
        values = [case.value for case in self.cases if case.value is not None]
        return max(values) if values else None

    @property
    def worst(self) -> tuple[CaseEvaluation, ...]:
        """Every case attaining the largest value."""
        worst = self.worst_value
        if worst is None:
            return ()
        return tuple(case for case in self.cases if case.value == worst)


def _attaining(bound: BoundValue) -> tuple[str, ...]:
    if not bound.trace:
        return ()
    detail = bound.trace[-1].detail
    if not detail.startswith(("min(", "max(")):
        return ()
    # "min(label=value, ...) -> label"
    inner = detail[4:].rpartition(") -> ")[0]
    pairs = [item.rsplit("=", 1) for item in inner.split(", ") if "=" in item]
    return tuple(label for label, value in pairs if value == str(bound))


def _evaluate(case_id: str, parameters: Mapping[str, int], bound: BoundValue, target: int) -> CaseEvaluation:
    value = int(bound)
    return CaseEvaluation(
        case_id=case_id,
        parameters=dict(parameters),
        value=value,
        target=target,
        status=CaseStatus.PASS if value <= target else CaseStatus.FAIL,
        attaining=_attaining(bound),
        trace=bound.trace,
    )


def _primitive_case(d: int, target: int) -> CaseEvaluation:
    value = holt_bound(d).value
    return _evaluate("primitive", {}, BoundValue.of(value, "primitive", f"floor(log {d}) = {value}"), target)


def _dt(n: int, store: DegreeStore) -> BoundValue:
    value = store.dt_upper(n)
    return BoundValue.of(value, "dt", f"dt({n}) <= {value}")


def large_block_closed_form(m: int, n: int) -> RealExpr:
    """``([(2 + c0) log m - log(24) / 3] b0 + c1) n / sqrt(log n)``.

    Bounds ``d(G)`` for minimal block size ``m`` and ``n`` blocks with the
    ``d(S)`` contribution already included.

    Raises
    ------
    BoundInputError
        Raised if ``n < 2``.
    """
    if n < 2:
        raise BoundInputError(f"Need at least two blocks, got n={n}")
    cap = composition_cap_expr(m, nonabelian=True)
    return (cap * const(ConstantId.B0) + const(ConstantId.C1)) * n / sqrt(log2(n))


def _band_case(
    m: int, n: int, store: DegreeStore, target: int, as_data: Mapping[int, int] | None
) -> CaseEvaluation:
    d_s = _dt(n, store)
    options = [("block-log", block_log_bound(m, n, store))]
    profiles = profile_bound(m, n, SolubilityContext.GENERAL, store)
    if profiles is not None:
        options.append(("profile", profiles))
    options.append(("pyber", log_form_series_bound(n, pyber_composition_bound(m), d_s)))
    as_m = None if as_data is None else as_data.get(m)
    if as_m is not None:
        options.append(("as(m)", log_form_series_bound(n, as_m, d_s)))
    evaluation = _evaluate("blocks", {"m": m, "n": n}, minimum(options, "band-case"), target)
    if evaluation.status is CaseStatus.FAIL and as_m is None:
        error = MissingDataError(f"Block size {m} needs the composition-length value as({m})", m=m)
        return CaseEvaluation(
            case_id="blocks",
            parameters={"m": m, "n": n},
            value=None,
            target=target,
            status=CaseStatus.SKIPPED,
            note=str(error),
            trace=evaluation.trace,
        )
    return evaluation


def _large_case(m: int, n: int, store: DegreeStore, target: int) -> CaseEvaluation:
    closed = certified_floor(large_block_closed_form(m, n))
    options = [
        ("block-log", block_log_bound(m, n, store)),
        ("closed-form", BoundValue.of(closed, "large-block", f"closed form at m={m}, n={n} = {closed}")),
    ]
    return _evaluate("blocks", {"m": m, "n": n}, minimum(options, "large-block-case"), target)


def _block_cases(
    d: int, store: DegreeStore, target: int, as_data: Mapping[int, int] | None, min_m: int
) -> list[CaseEvaluation]:
    cases = []
    for m in factorize(d).divisors():
        n = d // m
        if m < min_m or n < 2:
            continue
        if m == 2:
            bound = e_bound(n, 2) + _dt(n, store)
            cases.append(_evaluate("blocks", {"m": m, "n": n}, bound, target))
        elif m <= SMALL_BLOCK_LIMIT:
            bound = imprimitive_case_bound(d, m, n, SolubilityContext.GENERAL, store)
            cases.append(_evaluate("blocks", {"m": m, "n": n}, bound, target))
        elif m <= BAND_LIMIT:
            cases.append(_band_case(m, n, store, target, as_data))
        else:
            cases.append(_large_case(m, n, store, target))
    return cases


def _soluble_pair_case(d: int, store: DegreeStore, target: int) -> CaseEvaluation:
    n = d // 2
    bound = imprimitive_case_bound(d, 2, n, SolubilityContext.SOLUBLE, store)
    return _evaluate("soluble-blocks", {"m": 2, "n": n}, bound, target)


def _smooth_cases(d: int, store: DegreeStore, target: int) -> list[CaseEvaluation]:
    return [
        _evaluate(case_id, params, bound, target) for case_id, params, bound in smooth_case_bounds(d, store)
    ]


def _exceptional_cases(
    d: int, store: DegreeStore, as_data: Mapping[int, int] | None, f: int | None
) -> list[CaseEvaluation]:
    bound = store[d].bound
    if f is None:
        # Every case is held to the stored bound.
        return [
            _primitive_case(d, bound),
            _soluble_pair_case(d, store, bound),
            *_block_cases(d, store, bound, as_data, min_m=2),
        ]
    # Soluble or with fewer than f 2-blocks: the generic target.
    generic = generic_target(d)
    cases = [
        _primitive_case(d, generic),
        _soluble_pair_case(d, store, generic),
        *_block_cases(d, store, generic, as_data, min_m=3),
    ]
    k = (d & -d).bit_length() - 1
    # f_G = 0 is covered by the primitive and block cases above.
    for f_g in range(1, k + 1):
        target = generic if f_g < f else bound
        cases.append(_evaluate("two-block-chain", {"f_G": f_g}, exceptional_bound(d, f_g, store), target))
    return cases


def certify(
    d: int, store: DegreeStore | None = None, as_data: Mapping[int, int] | None = None
) -> Certificate:
    """Certify the generator bound at degree ``d``.

    Tabulated degrees are regenerated into ``store`` first, in increasing
    order, so every ``dt(n)`` used is final.

    Parameters
    ----------
    d
        Degree, at least 2.
    store
        Degree store; a fresh one is created when `None`.
    as_data
        Composition-length values ``as(m)`` for block sizes
        ``10 <= m <= 480``.

    Returns
    -------
    certificate
        The case evaluations. A degree up to 32 is a base case; a smooth
        degree checks its case set against the stored bound; an exceptional
        degree with an ``f`` checks the 2-block chain against the stored
        bound from ``f`` 2-blocks on and every other case against the
        generic target, and one without checks its case set against the
        stored bound; every other degree checks the primitive case and
        every block size against the generic target.

    Raises
    ------
    BoundInputError
        Raised if ``d < 2``.
    """
    logger = logging.getLogger(__name__)
    if d < 2:
        raise BoundInputError(f"Degree must be at least 2, got {d}")
    store = DegreeStore() if store is None else store
    degree_class = store.classify(d)
    if degree_class is DegreeClass.SMALL:
        value = store[d].bound
        base = CaseEvaluation(
            "small-degree", {"d": d}, value, value, CaseStatus.PASS, note="small-degree table"
        )
        return Certificate(d, degree_class, value, (base,))

    populate_store(store, up_to=d)
    f = None
    match degree_class:
        case DegreeClass.SMOOTH:
            target = store[d].bound
            cases = _smooth_cases(d, store, target)
        case DegreeClass.EXCEPTIONAL:
            f = store[d].f
            target = store[d].bound
            cases = _exceptional_cases(d, store, as_data, f)
        case _:
            target = generic_target(d)
            cases = [_primitive_case(d, target), *_block_cases(d, store, target, as_data, min_m=2)]

    certificate = Certificate(d, degree_class, target, tuple(cases), f=f)
    logger.debug(
        "Certified %s (%s): %s, worst %s against %d",
        certificate.d_expr,
        degree_class.value,
        certificate.verdict.value,
        certificate.worst_value,
        target,
    )
    return certificate
