"""Threshold sweeps for the closed-form inequalities of the small block
sizes ``2 <= m <= 9``.

Each sub-case bounds ``d(G)`` for ``G`` of degree ``m n`` by a closed form
in ``n`` plus ``D(n) = c n / sqrt(log n)`` and claims the bound is at most
``m c n / sqrt(log(m n))`` from a threshold ``N0`` on.
"""

from __future__ import annotations

__all__ = (
    "SUB_CASES",
    "SubCase",
    "check_sub_case",
    "scan_below",
    "sub_case_bounds",
    "sweep_points",
    "sweep_small_blocks",
    "sweep_sub_case",
)

import logging
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from ..bounds import SplitPart, split_exponent_expr
from ..config import RunConfig
from ..errors import BoundInputError
from ..xreal import ConstantId, RealExpr, certified_le, const, lit, log2, precision_cap, sqrt
from ._report import SweepReport, merge_reports

LARGE_N = 10**66
"""Split point of the ``m = 2`` sub-cases."""

BEYOND_STEPS = 64
"""Doublings tested above the threshold of an unscanned sub-case."""


def generic_expr(n: int) -> RealExpr:
    """``D(n) = c n / sqrt(log n)``, the inductive bound on ``d(S)``."""
    return const(ConstantId.C) * n / sqrt(log2(n))


def _target(m: int, n: int) -> RealExpr:
    return m * const(ConstantId.C) * n / sqrt(log2(m * n))


@dataclass(frozen=True)
class SubCase:
    """Closed-form inequality ``lhs(n) <= rhs(n)`` for ``n >= threshold``."""

    case_id: str
    m: int
    threshold: int
    lhs: Callable[[int], RealExpr]
    rhs: Callable[[int], RealExpr]

    scan: bool = True
    """Scan integers above the threshold; otherwise only the threshold and
    its doublings are tested.
    """

    upper: int | None = None
    """Exclusive upper end of the claim."""

    description: str = ""

    def holds(self, n: int) -> bool:
        return certified_le(self.lhs(n), self.rhs(n))


def _lpp_case(n: int) -> RealExpr:
    return lit(Fraction(n, 19)) + generic_expr(n)


def _m2_dominant(n: int) -> RealExpr:
    return const(ConstantId.B) * n * sqrt(lit(Fraction(1000, 858))) / sqrt(log2(n)) + generic_expr(n)


def _m2_coprime(n: int) -> RealExpr:
    return lit(Fraction(1000, 858) * n) / (const(ConstantId.CPRIME) * log2(n)) + generic_expr(n)


def _m6(n: int) -> RealExpr:
    return const(ConstantId.B1) * n / sqrt(log2(n)) + 1 + generic_expr(n)


def _m7(n: int) -> RealExpr:
    return 3 * const(ConstantId.B1) * n / sqrt(log2(n)) + generic_expr(n)


def _split(
    part: SplitPart, alpha: Fraction, a_p: int, a_pprime: int, a_ab: int, c_nonab: int, n: int
) -> RealExpr:
    return split_exponent_expr(part, n, alpha, a_p, a_pprime, a_ab, c_nonab, generic_expr(n))


_SPLIT_PARAMETERS: dict[int, tuple[Fraction, int, int, int, int, dict[SplitPart, int]]] = {
    # m: (alpha, a_p, a_p', a_ab, c_nonab, thresholds)
    # m = 3 dominant: n**(2/3) exceeds sqrt(n), so this check is stronger.
    3: (Fraction(1, 3), 1, 1, 2, 0, {SplitPart.COPRIME: 3824, SplitPart.DOMINANT: 5578}),
    4: (
        Fraction(45, 100),
        2,
        1,
        3,
        1,
        {SplitPart.COPRIME: 115063, SplitPart.DOMINANT: 82517, SplitPart.COMPLEMENT: 44},
    ),
    5: (
        Fraction(2, 5),
        2,
        1,
        3,
        0,
        {SplitPart.COPRIME: 553, SplitPart.DOMINANT: 139, SplitPart.COMPLEMENT: 17},
    ),
    8: (
        Fraction(37, 100),
        3,
        2,
        5,
        0,
        {SplitPart.COPRIME: 273, SplitPart.DOMINANT: 98, SplitPart.COMPLEMENT: 27},
    ),
    9: (
        Fraction(37, 100),
        4,
        3,
        7,
        0,
        {SplitPart.COPRIME: 2336, SplitPart.DOMINANT: 1197, SplitPart.COMPLEMENT: 148},
    ),
}

_ROMAN = {SplitPart.COPRIME: "i", SplitPart.DOMINANT: "ii", SplitPart.COMPLEMENT: "iii"}


def _build_sub_cases() -> dict[str, SubCase]:
    cases = [
        SubCase("m2-lpp19", 2, 2, _lpp_case, partial(_target, 2), upper=LARGE_N, description="lpp(q) >= 19"),
        SubCase(
            "m2-i",
            2,
            LARGE_N,
            _m2_dominant,
            partial(_target, 2),
            scan=False,
            description="n_2 >= n^(858/1000)",
        ),
        SubCase(
            "m2-ii",
            2,
            LARGE_N,
            _m2_coprime,
            partial(_target, 2),
            scan=False,
            description="n/n_2 >= n^(858/1000)",
        ),
        SubCase("m6", 6, 2, _m6, partial(_target, 6)),
        SubCase("m7", 7, 7, _m7, partial(_target, 7)),
    ]
    for m, (alpha, a_p, a_pprime, a_ab, c_nonab, thresholds) in _SPLIT_PARAMETERS.items():
        for part, threshold in thresholds.items():
            cases.append(
                SubCase(
                    f"m{m}-{_ROMAN[part]}",
                    m,
                    threshold,
                    partial(_split, part, alpha, a_p, a_pprime, a_ab, c_nonab),
                    partial(_target, m),
                    description=f"{part.value} split at alpha = {alpha}",
                )
            )
    return {case.case_id: case for case in sorted(cases, key=lambda case: case.case_id)}


SUB_CASES = _build_sub_cases()
"""Every small-block sub-case by id."""


def sub_case_bounds(m: int) -> list[SubCase]:
    """Sub-cases for block size ``m``.

    Raises
    ------
    BoundInputError
        Raised if ``m`` is outside ``2..9``.
    """
    if not 2 <= m <= 9:
        raise BoundInputError(f"Small block sizes are 2..9, got {m}")
    return [case for case in SUB_CASES.values() if case.m == m]


def sweep_points(case: SubCase, span: int, geometric_limit: int) -> Iterator[int]:
    """Integers tested for a sub-case, increasing.

    Scanned sub-cases test ``[N0, N0 + span]`` and then the doublings of
    ``N0`` up to the geometric limit, or up to the exclusive upper end when
    the claim has one. Unscanned sub-cases test ``N0`` and
    `BEYOND_STEPS` doublings of it.
    """
    start = case.threshold
    if not case.scan:
        for j in range(BEYOND_STEPS + 1):
            yield start << j
        return
    limit = start + span
    if case.upper is not None:
        limit = min(limit, case.upper - 1)
    yield from range(start, limit + 1)
    top = (case.upper - 1) if case.upper is not None else geometric_limit
    n = start
    while (n := 2 * n) <= top:
        if n > limit:
            yield n
    if case.upper is not None and top > limit:
        yield top


def check_sub_case(case: SubCase, points: Iterator[int]) -> tuple[list[int], list[int]]:
    """Test every point; returns the tested points and the failures."""
    tested: list[int] = []
    failures: list[int] = []
    for n in points:
        tested.append(n)
        if not case.holds(n):
            failures.append(n)
    return tested, failures


def scan_below(case: SubCase, depth: int) -> int | None:
    """Largest ``n`` below the threshold, at most ``depth`` steps down,
    where the inequality fails.
    """
    for n in range(case.threshold - 1, max(1, case.threshold - depth - 1), -1):
        if not case.holds(n):
            return n
    return None


def sweep_sub_case(
    case_id: str, span: int, geometric_limit: int, below: int = 0, cap: int | None = None
) -> SweepReport:
    """Sweep one sub-case by id; picklable for worker processes."""
    logger = logging.getLogger(__name__)
    case = SUB_CASES[case_id]
    if cap is not None:
        with precision_cap(cap):
            return sweep_sub_case(case_id, span, geometric_limit, below)
    tested, failures = check_sub_case(case, sweep_points(case, span, geometric_limit))
    first_below = scan_below(case, below) if below and case.scan else None
    report = SweepReport.from_failures(
        case_id,
        (str(case.lhs(case.threshold)), str(case.rhs(case.threshold))),
        case.threshold,
        tested,
        failures,
        first_failure_below=first_below,
        note=case.description,
        details={"m": case.m, "upper": case.upper},
    )
    logger.info(
        "Sub-case %s from %d: %s over %d points (first failure below: %s)",
        case_id,
        case.threshold,
        report.status.value,
        report.points,
        first_below,
    )
    return report


def sweep_small_blocks(
    m: int | None = None, config: RunConfig | None = None, below: int = 0
) -> list[SweepReport]:
    """Sweep every sub-case, or those of block size ``m``.

    Parameters
    ----------
    m
        Block size in ``2..9``; all block sizes when `None`.
    config
        Supplies the scan span, the geometric limit, the precision cap and
        the number of worker processes.
    below
        How far below each threshold to look for a failure; 0 disables the
        downward scan.

    Returns
    -------
    reports
        One report per sub-case, in case-id order.
    """
    config = RunConfig() if config is None else config
    cases = list(SUB_CASES.values()) if m is None else sub_case_bounds(m)
    run = partial(
        sweep_sub_case,
        span=config.sweep_span,
        geometric_limit=config.geometric_limit,
        below=below,
        cap=config.precision_cap,
    )
    ids = [case.case_id for case in cases]
    if config.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            reports = list(executor.map(run, ids))
    else:
        reports = [run(case_id) for case_id in ids]
    return merge_reports(reports)
