"""Checks for block sizes ``m >= 10``: the large-block ratio against ``c``
for ``n >= 1261``, the explicit integer comparison for ``n <= 1260``, and
the closed form for ``m >= 481``.
"""

from __future__ import annotations

__all__ = (
    "LARGE_M_SCAN",
    "M16_FALLBACK_START",
    "check_closed_form",
    "check_ratio_case",
    "check_small_index_case",
    "check_sixteen_fallback",
    "sweep_large_blocks",
)

import logging
from collections.abc import Mapping

from ..bounds import LOG_FORM_SWITCH, e_bound, large_block_ratio, log_form_bound
from ..engine import BAND_LIMIT, generic_target, large_block_closed_form
from ..errors import MissingDataError
from ..xreal import ConstantId, certified_lt, const, log2, sqrt
from ._report import SweepReport

LARGE_M_SCAN = 1000
"""Block sizes ``481 <= m < 481 + LARGE_M_SCAN`` tested for the closed
form.
"""

M16_FALLBACK_START = 72
"""From this ``n`` on, block size 16 needs the chief-factor bound."""

_CLOSED_FORM_N = (*range(2, 17), *(2**j for j in range(5, 21)))

_SMALL_INDEX_LIMIT = LOG_FORM_SWITCH - 1


def check_ratio_case(as_data: Mapping[int, int]) -> SweepReport:
    """``f(as(m), log m, log 1261) < c`` for each supplied ``m``."""
    tested = sorted(as_data)
    switch = log2(LOG_FORM_SWITCH)
    failures = [
        m
        for m in tested
        if not certified_lt(large_block_ratio(as_data[m], log2(m), switch), const(ConstantId.C))
    ]
    return SweepReport.from_failures(
        "large-a",
        ("f(as(m), log m, log 1261)", "c"),
        None,
        tested,
        failures,
        note=f"n >= {LOG_FORM_SWITCH}",
    )


def _sixteen_readings(n: int) -> tuple[int, int]:
    # 7 E(n,2) + 2 E(n,3), and the literal E(7n,2) + E(2n,3).
    interpreted = 7 * int(e_bound(n, 2)) + 2 * int(e_bound(n, 3))
    literal = int(e_bound(7 * n, 2)) + int(e_bound(2 * n, 3))
    return interpreted, literal


def check_sixteen_fallback(n_max: int = _SMALL_INDEX_LIMIT) -> SweepReport:
    """The chief-factor bound for block size 16 and
    ``M16_FALLBACK_START <= n <= n_max``, in both readings.

    The report's status follows ``7 E(n,2) + 2 E(n,3) + dt(n)``; failures of
    the literal ``E(7n,2) + E(2n,3) + dt(n)`` are listed in the details.
    """
    tested = list(range(M16_FALLBACK_START, n_max + 1))
    failures = []
    literal_failures = []
    for n in tested:
        target = generic_target(16 * n)
        interpreted, literal = _sixteen_readings(n)
        dt = generic_target(n)
        if interpreted + dt > target:
            failures.append(n)
        if literal + dt > target:
            literal_failures.append(n)
    return SweepReport.from_failures(
        "large-m16",
        ("7 E(n,2) + 2 E(n,3) + floor(c n / sqrt(log n))", "floor(16 c n / sqrt(log 16n))"),
        M16_FALLBACK_START,
        tested,
        failures,
        note="multiplier reading; the literal reading is in the details",
        details={"literal_failures": literal_failures[:20], "literal_failure_count": len(literal_failures)},
    )


def check_small_index_case(as_data: Mapping[int, int], n_max: int = _SMALL_INDEX_LIMIT) -> SweepReport:
    """``min(floor(2 as(m) n / (c' log n)), n floor(log m)) + floor(c n /
    sqrt(log n)) <= floor(c m n / sqrt(log mn))`` for ``2 <= n <= n_max``.

    Block size 16 falls back to the chief-factor bound from
    `M16_FALLBACK_START` on when the comparison fails.
    """
    logger = logging.getLogger(__name__)
    tested = []
    failures = []
    pairs = []
    fallbacks = 0
    for m in sorted(as_data):
        log_m = m.bit_length() - 1
        for n in range(2, n_max + 1):
            d = m * n
            tested.append(d)
            dt = generic_target(n)
            value = min(int(log_form_bound(n, 2, as_data[m])), n * log_m) + dt
            target = generic_target(d)
            if value > target and m == 16 and n >= M16_FALLBACK_START:
                fallbacks += 1
                value = _sixteen_readings(n)[0] + dt
            if value > target:
                failures.append(d)
                pairs.append([m, n])
    logger.info("Small-index case: %d comparisons, %d block size 16 fallbacks", len(tested), fallbacks)
    return SweepReport.from_failures(
        "large-b",
        (
            "min(floor(2 as(m) n/(c' log n)), n floor(log m)) + floor(c n/sqrt(log n))",
            "floor(c mn/sqrt(log mn))",
        ),
        None,
        sorted(set(tested)),
        failures,
        note=f"2 <= n <= {n_max}; failures are degrees m n",
        details={"failing_pairs": pairs[:20], "m16_fallbacks": fallbacks},
    )


def check_closed_form(m_scan: int = LARGE_M_SCAN) -> SweepReport:
    """The closed form is below ``c m n / sqrt(log mn)`` for
    ``m >= BAND_LIMIT + 1`` on a grid of ``n``.
    """
    start = BAND_LIMIT + 1
    tested = []
    failures = []
    pairs = []
    for m in range(start, start + m_scan):
        for n in _CLOSED_FORM_N:
            tested.append(m * n)
            target = const(ConstantId.C) * (m * n) / sqrt(log2(m * n))
            if not certified_lt(large_block_closed_form(m, n), target):
                failures.append(m * n)
                pairs.append([m, n])
    return SweepReport.from_failures(
        "large-closed-form",
        ("([(2+c0) log m - log(24)/3] b0 + c1) n / sqrt(log n)", "c m n / sqrt(log mn)"),
        start,
        sorted(set(tested)),
        failures,
        note=f"{start} <= m < {start + m_scan}, n in {_CLOSED_FORM_N[0]}..{_CLOSED_FORM_N[-1]}",
        details={"failing_pairs": pairs[:20]},
    )


def sweep_large_blocks(as_data: Mapping[int, int] | None = None) -> list[SweepReport]:
    """Every large-block check; the two checks needing ``as(m)`` are skipped
    without data.
    """
    logger = logging.getLogger(__name__)
    reports = [check_closed_form(), check_sixteen_fallback()]
    if as_data is None:
        error = MissingDataError("The composition-length data as(m), 10 <= m <= 480, was not supplied")
        logger.warning("%s; skipping the ratio and small-index checks", error)
        reports += [SweepReport.skipped("large-a", str(error)), SweepReport.skipped("large-b", str(error))]
    else:
        reports += [check_ratio_case(as_data), check_small_index_case(as_data)]
    return sorted(reports, key=lambda report: report.case_id)
