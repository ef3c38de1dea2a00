"""Threshold sweeps and standalone numeric checks, reported as
`SweepReport` records.
"""

from ._large_blocks import (
    LARGE_M_SCAN,
    M16_FALLBACK_START,
    check_closed_form,
    check_ratio_case,
    check_sixteen_fallback,
    check_small_index_case,
    sweep_large_blocks,
)
from ._lemmas import (
    LemmaLimits,
    check_c1_decimal,
    check_central_binomial,
    check_exceptional_envelope,
    check_extremal_family,
    check_prime_power_growth,
    check_rank_width,
    check_wallis,
    load_as_data,
    run_lemma_checks,
)
from ._report import SweepReport, SweepStatus, merge_reports, to_json_lines
from ._small_blocks import (
    LARGE_N,
    SUB_CASES,
    SubCase,
    generic_expr,
    scan_below,
    sub_case_bounds,
    sweep_points,
    sweep_small_blocks,
    sweep_sub_case,
)
from ._two_blocks import odd_parts, sweep_two_block_finite, two_block_points

__all__ = (
    "LARGE_M_SCAN",
    "LARGE_N",
    "M16_FALLBACK_START",
    "SUB_CASES",
    "LemmaLimits",
    "SubCase",
    "SweepReport",
    "SweepStatus",
    "check_c1_decimal",
    "check_central_binomial",
    "check_closed_form",
    "check_exceptional_envelope",
    "check_extremal_family",
    "check_prime_power_growth",
    "check_rank_width",
    "check_ratio_case",
    "check_sixteen_fallback",
    "check_small_index_case",
    "check_wallis",
    "generic_expr",
    "load_as_data",
    "merge_reports",
    "odd_parts",
    "run_lemma_checks",
    "scan_below",
    "sub_case_bounds",
    "sweep_large_blocks",
    "sweep_points",
    "sweep_small_blocks",
    "sweep_sub_case",
    "sweep_two_block_finite",
    "to_json_lines",
    "two_block_points",
)
