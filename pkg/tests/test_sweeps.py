"""Tests for lsst.transgen.sweeps (threshold sweeps and standalone
checks).
"""

from __future__ import annotations

import json
import tempfile
import unittest
from pathlib import Path

import pytest

from lsst.transgen.config import RunConfig
from lsst.transgen.engine import DegreeStore
from lsst.transgen.errors import BoundInputError, ConfigError
from lsst.transgen.sweeps import (
    LARGE_N,
    SUB_CASES,
    LemmaLimits,
    SubCase,
    SweepReport,
    SweepStatus,
    check_c1_decimal,
    check_central_binomial,
    check_extremal_family,
    check_prime_power_growth,
    check_rank_width,
    check_ratio_case,
    check_sixteen_fallback,
    check_wallis,
    load_as_data,
    merge_reports,
    odd_parts,
    scan_below,
    sub_case_bounds,
    sweep_large_blocks,
    sweep_points,
    sweep_small_blocks,
    sweep_sub_case,
    sweep_two_block_finite,
    to_json_lines,
    two_block_points,
)
from lsst.transgen.xreal import lit


def _constant_case(threshold: int, upper: int | None = None, scan: bool = True) -> SubCase:
    return SubCase("test", 2, threshold, lit, lambda n: lit(n), scan=scan, upper=upper)


class SweepReportTestCase(unittest.TestCase):
    """Tests for SweepReport and its JSON-lines form."""

    def test_from_failures(self) -> None:
        report = SweepReport.from_failures("x", ("lhs", "rhs"), 5, range(5, 50), range(10, 40))
        self.assertIs(report.status, SweepStatus.FAILED)
        self.assertEqual(report.verified_range, (5, 49))
        self.assertEqual(report.points, 45)
        self.assertEqual(report.failure_count, 30)
        self.assertEqual(len(report.failures), 20)

    def test_verified(self) -> None:
        report = SweepReport.from_failures("x", ("lhs", "rhs"), None, [3, 1, 2], [])
        self.assertTrue(report.verified)
        self.assertEqual(report.verified_range, (1, 3))

    def test_json_lines(self) -> None:
        reports = merge_reports(
            [SweepReport.skipped("b", "no data"), SweepReport.from_failures("a", ("l", "r"), 1, [1], [])]
        )
        lines = to_json_lines(reports).splitlines()
        self.assertEqual([json.loads(line)["case_id"] for line in lines], ["a", "b"])
        self.assertEqual(json.loads(lines[1])["status"], "skipped")
        # Canonical form: sorted keys, no spaces.
        self.assertTrue(lines[0].startswith('{"case_id":"a","details":{}'))


class SmallBlockTestCase(unittest.TestCase):
    """Tests for the small block sub-cases."""

    def test_ids(self) -> None:
        self.assertEqual(len(SUB_CASES), 19)
        self.assertEqual(list(SUB_CASES), sorted(SUB_CASES))
        self.assertEqual([c.case_id for c in sub_case_bounds(3)], ["m3-i", "m3-ii"])
        self.assertEqual(SUB_CASES["m4-iii"].threshold, 44)
        self.assertEqual(SUB_CASES["m3-ii"].threshold, 5578)
        with self.assertRaises(BoundInputError):
            sub_case_bounds(10)

    def test_holds_at_threshold(self) -> None:
        for case_id, n in [("m5-i", 553), ("m9-iii", 148), ("m6", 2), ("m7", 7), ("m2-lpp19", 2)]:
            with self.subTest(case_id=case_id):
                self.assertTrue(SUB_CASES[case_id].holds(n))

    def test_sweep_points(self) -> None:
        self.assertEqual(list(sweep_points(_constant_case(10), 5, 100)), [10, 11, 12, 13, 14, 15, 20, 40, 80])
        bounded = list(sweep_points(_constant_case(2, upper=20), 5, 10**9))
        self.assertEqual(bounded, [2, 3, 4, 5, 6, 7, 8, 16, 19])
        beyond = list(sweep_points(_constant_case(3, scan=False), 5, 100))
        self.assertEqual(len(beyond), 65)
        self.assertEqual(beyond[-1], 3 << 64)

    def test_scan_below(self) -> None:
        """A case failing below its threshold reports the largest failure."""
        case = SubCase("test", 2, 10, lambda n: lit(7), lit)
        self.assertEqual(scan_below(case, 5), 6)
        self.assertIsNone(scan_below(SUB_CASES["m6"], 5))

    def test_sweep_sub_case(self) -> None:
        report = sweep_sub_case("m6", span=50, geometric_limit=10**4, below=1)
        self.assertTrue(report.verified)
        self.assertEqual(report.threshold, 2)
        self.assertEqual(report.verified_range, (2, 8192))
        self.assertIsNone(report.first_failure_below)

    def test_unscanned(self) -> None:
        report = sweep_sub_case("m2-i", span=10, geometric_limit=10**4)
        self.assertEqual(report.verified_range, (LARGE_N, LARGE_N << 64))
        self.assertTrue(report.verified)

    def test_sweep_block_size(self) -> None:
        config = RunConfig(sweep_span=20, geometric_limit=10**5)
        reports = sweep_small_blocks(5, config)
        self.assertEqual([r.case_id for r in reports], ["m5-i", "m5-ii", "m5-iii"])
        self.assertTrue(all(r.verified for r in reports))


class TwoBlockTestCase(unittest.TestCase):
    """Tests for the odd parts and the sampled grid."""

    def test_odd_parts(self) -> None:
        parts = odd_parts()
        self.assertEqual(len(parts), 96)
        self.assertEqual(parts[:4], [1, 3, 5, 7])
        self.assertEqual(parts[-1], 9 * 5 * 7 * 11 * 13 * 17)

    def test_points(self) -> None:
        points = list(two_block_points(1))
        self.assertEqual(points[0], 2)
        self.assertTrue(all(n < LARGE_N for n in points))
        self.assertEqual(points[-1], 1 << ((LARGE_N.bit_length()) - 1))
        self.assertLess(len(points), len(list(two_block_points(1, exhaustive=True))))
        self.assertEqual(list(two_block_points(3))[0], 3)

    def test_bad_odd_part(self) -> None:
        with self.assertRaises(BoundInputError):
            sweep_two_block_finite([19], store=DegreeStore())


@pytest.mark.slow
def test_two_block_finite(populated_store: DegreeStore) -> None:
    """The sampled grid holds for odd parts outside the exceptional family."""
    report = sweep_two_block_finite([1, 3, 7, 9, 21, 63, 221], store=populated_store)
    assert report.case_id == "two-block"
    assert report.details["q_count"] == 7
    assert report.points > 7 * 40
    assert report.verified


class LemmaTestCase(unittest.TestCase):
    """Tests for the standalone checks."""

    def test_prime_power_growth(self) -> None:
        report = check_prime_power_growth(2000)
        self.assertTrue(report.verified)
        self.assertEqual(report.verified_range, (2, 2000))

    def test_central_binomial(self) -> None:
        self.assertTrue(check_central_binomial(200).verified)

    def test_wallis(self) -> None:
        report = check_wallis(500)
        self.assertTrue(report.verified)
        self.assertTrue(report.details["last"].startswith("0.63"))
        with self.assertRaises(BoundInputError):
            check_wallis(0)

    def test_rank_width(self) -> None:
        report = check_rank_width(64)
        self.assertTrue(report.verified)
        self.assertGreater(report.details["oracle_checks"], 0)

    def test_extremal_family(self) -> None:
        report = check_extremal_family(12)
        self.assertTrue(report.verified)
        self.assertEqual(report.details["generators"]["2"], 6)
        self.assertEqual(report.details["generators"]["3"], 15)
        with self.assertRaises(BoundInputError):
            check_extremal_family(1)

    def test_c1_decimal(self) -> None:
        report = check_c1_decimal()
        self.assertTrue(report.verified)
        self.assertIn("prose", report.note)

    def test_default_limits(self) -> None:
        limits = LemmaLimits()
        self.assertEqual(limits.prime_power_n, 10**6)
        self.assertEqual(limits.central_binomial_k, 10**5)
        self.assertEqual(limits.wallis_t, 10**6)
        self.assertEqual(limits.rank_width_n, 2000)
        self.assertEqual(limits.extremal_k, 64)


class AsDataTestCase(unittest.TestCase):
    """Tests for the composition-length data and the checks using it."""

    def _write(self, text: str) -> Path:
        tmp = tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False)
        with tmp:
            tmp.write(text)
        self.addCleanup(Path(tmp.name).unlink)
        return Path(tmp.name)

    def test_load(self) -> None:
        path = self._write("m,as\n10,3\n16,7\n")
        self.assertEqual(load_as_data(path), {10: 3, 16: 7})

    def test_invalid(self) -> None:
        for text in ["m,value\n10,3\n", "m,as\n10,x\n", "m,as\n9,3\n", "m,as\n10,3\n10,4\n", "m,as\n10,0\n"]:
            with self.subTest(text=text), self.assertRaises(ConfigError):
                load_as_data(self._write(text))

    def test_ratio_case(self) -> None:
        report = check_ratio_case({10: 3, 11: 2})
        self.assertEqual(report.case_id, "large-a")
        self.assertEqual(report.points, 2)

    def test_skipped_without_data(self) -> None:
        reports = {r.case_id: r for r in sweep_large_blocks()}
        self.assertEqual(sorted(reports), ["large-a", "large-b", "large-closed-form", "large-m16"])
        self.assertIs(reports["large-a"].status, SweepStatus.SKIPPED)
        self.assertIn("as(m)", reports["large-b"].note)

    def test_sixteen_fallback(self) -> None:
        report = check_sixteen_fallback(200)
        self.assertEqual(report.threshold, 72)
        self.assertEqual(report.verified_range, (72, 200))
        self.assertIn("literal_failure_count", report.details)
