"""Tests for lsst.transgen.engine (degree store, case bounds, table
regeneration and certificates).
"""

from __future__ import annotations

import unittest

import pytest

from lsst.transgen.bounds import SolubilityContext
from lsst.transgen.engine import (
    CaseEvaluation,
    CaseStatus,
    Certificate,
    DegreeClass,
    DegreeRecord,
    DegreeStore,
    Verdict,
    block_log_bound,
    certify,
    exceptional_bound,
    exceptional_envelope,
    generic_target,
    imprimitive_case_bound,
    large_block_closed_form,
    mersenne_case_bound,
    populate_store,
    regenerate_exceptional_table,
    regenerate_smooth_table,
)
from lsst.transgen.errors import BoundInputError
from lsst.transgen.mersenne import MersenneTriple


class DegreeStoreTestCase(unittest.TestCase):
    """Tests for DegreeStore and generic_target."""

    def setUp(self) -> None:
        self.store = DegreeStore()

    def test_generic_target(self) -> None:
        self.assertEqual(generic_target(36), 13)
        self.assertEqual(generic_target(60), 21)
        with self.assertRaises(BoundInputError):
            generic_target(1)

    def test_small_degrees(self) -> None:
        expected = {8: 4, 16: 6, 24: 6, 27: 6, 32: 10}
        self.assertEqual({d: self.store.dt_upper(d) for d in expected}, expected)
        self.assertEqual(self.store.top, 32)
        self.assertEqual(len(self.store), 31)

    def test_classify(self) -> None:
        self.assertIs(self.store.classify(20), DegreeClass.SMALL)
        self.assertIs(self.store.classify(48), DegreeClass.SMOOTH)
        self.assertIs(self.store.classify(40), DegreeClass.EXCEPTIONAL)
        self.assertIs(self.store.classify(36), DegreeClass.GENERIC)

    def test_printed_fallback(self) -> None:
        """Tabulated degrees not yet regenerated use the printed bound."""
        self.assertEqual(self.store.dt_upper(48), 16)
        self.assertEqual(self.store.dt_upper(36), 13)
        # Exceptional degrees never fall below the generic target.
        self.assertEqual(self.store.dt_upper(40), generic_target(40))

    def test_append_only(self) -> None:
        with self.assertRaises(ValueError):
            self.store.add(DegreeRecord(30, DegreeClass.SMALL, 4))
        self.store.add(DegreeRecord(36, DegreeClass.GENERIC, 13))
        self.assertEqual(self.store.top, 36)

    def test_record(self) -> None:
        record = DegreeRecord(60, DegreeClass.EXCEPTIONAL, 12, printed=15)
        self.assertEqual(record.delta, -3)
        self.assertTrue(record.f_matches)
        self.assertTrue(record.discrepancy)
        self.assertEqual(record.d_expr, "2^2·15")


class CaseBoundTestCase(unittest.TestCase):
    """Tests for the per-case bounds of an imprimitive group."""

    def setUp(self) -> None:
        self.store = DegreeStore()

    def test_block_log(self) -> None:
        self.assertEqual(block_log_bound(3, 12, self.store).value, 16)

    def test_imprimitive(self) -> None:
        general = SolubilityContext.GENERAL
        self.assertEqual(imprimitive_case_bound(36, 3, 12, general, self.store).value, 11)
        self.assertEqual(imprimitive_case_bound(36, 4, 9, general, self.store).value, 9)
        self.assertEqual(imprimitive_case_bound(36, 9, 4, general, self.store).value, 13)
        with self.assertRaises(BoundInputError):
            imprimitive_case_bound(36, 5, 7, general, self.store)

    def test_mersenne_case(self) -> None:
        """The Mersenne case at 3 * 2**20 uses the printed dt(3 * 2**19)."""
        triple = MersenneTriple(5, 1, 14)
        self.assertEqual(mersenne_case_bound(3 * 2**20, triple, self.store).value, 315085)
        with self.assertRaises(BoundInputError):
            mersenne_case_bound(3 * 2**19, triple, self.store)

    def test_exceptional_chain(self) -> None:
        """The quotient takes the worst of its possible structures."""
        self.assertEqual(exceptional_bound(40, 3, self.store).value, 9)
        # Quotient of degree 20: blocks of size 5 give 7.
        self.assertEqual(exceptional_bound(40, 1, self.store).value, 11)
        self.assertEqual(exceptional_bound(40, 0, self.store).value, 11)

    def test_exceptional_preconditions(self) -> None:
        with self.assertRaises(BoundInputError):
            exceptional_bound(48, 1, self.store)
        with self.assertRaises(BoundInputError):
            exceptional_bound(40, 4, self.store)

    def test_closed_form(self) -> None:
        with self.assertRaises(BoundInputError):
            large_block_closed_form(500, 1)


class RegenerationTestCase(unittest.TestCase):
    """Tests for regenerating the tables up to a small degree."""

    def setUp(self) -> None:
        self.store = populate_store(DegreeStore(), up_to=64)

    def test_order(self) -> None:
        self.assertEqual([r.d for r in self.store if r.d > 32], [40, 48, 60, 64])

    def test_values(self) -> None:
        self.assertEqual(self.store[60].bound, 15)
        self.assertIsNone(self.store[60].f)
        self.assertFalse(self.store[60].discrepancy)
        self.assertEqual(self.store[48].bound, 16)
        self.assertEqual(self.store[64].bound, 20)

    def test_known_discrepancy(self) -> None:
        """Degree 40 regenerates to 11 against the printed 9: blocks of
        size 5 acted on by AGL(1,5) give 1 + 2 * 3 + dt(8).
        """
        record = self.store[40]
        self.assertEqual((record.bound, record.printed), (11, 9))
        self.assertIsNone(record.f)
        self.assertTrue(record.discrepancy)


class CertifyTestCase(unittest.TestCase):
    """Tests for certify."""

    def setUp(self) -> None:
        self.store = DegreeStore()

    def test_generic(self) -> None:
        certificate = certify(36, self.store)
        self.assertIs(certificate.degree_class, DegreeClass.GENERIC)
        self.assertEqual(certificate.target, 13)
        self.assertIs(certificate.verdict, Verdict.PASS)
        self.assertEqual(certificate.worst_value, 13)
        self.assertEqual([case.parameters for case in certificate.worst], [{"m": 9, "n": 4}])
        ids = [(case.case_id, dict(case.parameters)) for case in certificate.cases]
        self.assertEqual(ids[0], ("primitive", {}))
        self.assertEqual(
            [p["m"] for case_id, p in ids[1:]],
            [2, 3, 4, 6, 9, 12, 18],
        )

    def test_attaining(self) -> None:
        """Every alternative attaining a case's bound is recorded."""
        certificate = certify(36, self.store)
        case = next(c for c in certificate.cases if c.parameters.get("m") == 4)
        self.assertEqual(case.value, 9)
        self.assertEqual(case.attaining, ("s4-block", "profile"))

    def test_small(self) -> None:
        certificate = certify(20, self.store)
        self.assertIs(certificate.degree_class, DegreeClass.SMALL)
        self.assertEqual(certificate.target, 5)
        self.assertEqual(len(certificate.cases), 1)
        self.assertIs(certificate.verdict, Verdict.PASS)

    def test_smooth(self) -> None:
        certificate = certify(48, self.store)
        self.assertIs(certificate.degree_class, DegreeClass.SMOOTH)
        self.assertEqual(certificate.target, 16)
        self.assertIs(certificate.verdict, Verdict.PASS)
        self.assertEqual(certificate.worst_value, 16)

    def test_exceptional(self) -> None:
        """Without an f every case is held to the stored bound."""
        certificate = certify(40, self.store)
        self.assertIs(certificate.degree_class, DegreeClass.EXCEPTIONAL)
        self.assertIsNone(certificate.f)
        self.assertEqual(certificate.target, 11)
        ids = [(case.case_id, case.parameters.get("m")) for case in certificate.cases]
        self.assertEqual(ids[:2], [("primitive", None), ("soluble-blocks", 2)])
        self.assertEqual([m for case_id, m in ids[2:]], [2, 4, 5, 8, 10, 20])
        self.assertTrue(all(case.target == 11 for case in certificate.cases))
        self.assertIs(certificate.verdict, Verdict.PASS)
        self.assertEqual([case.parameters for case in certificate.worst], [{"m": 5, "n": 8}])

    def test_exceptional_printed(self) -> None:
        certificate = certify(60, self.store)
        self.assertEqual(certificate.target, 15)
        self.assertIs(certificate.verdict, Verdict.PASS)
        self.assertEqual(certificate.worst_value, 15)

    def test_invalid(self) -> None:
        with self.assertRaises(BoundInputError):
            certify(1)

    def test_verdicts(self) -> None:
        passing = CaseEvaluation("primitive", {}, 3, 5, CaseStatus.PASS)
        skipped = CaseEvaluation("blocks", {"m": 11, "n": 2}, None, 5, CaseStatus.SKIPPED)
        failing = CaseEvaluation("blocks", {"m": 2, "n": 11}, 7, 5, CaseStatus.FAIL)
        self.assertIs(Certificate(22, DegreeClass.GENERIC, 5, (passing, skipped)).verdict, Verdict.INCOMPLETE)
        self.assertIs(Certificate(22, DegreeClass.GENERIC, 5, (skipped, failing)).verdict, Verdict.FAIL)
        self.assertEqual(Certificate(22, DegreeClass.GENERIC, 5, (skipped,)).worst, ())


@pytest.mark.slow
def test_smooth_table(populated_store: DegreeStore) -> None:
    """Every regenerated smooth bound is at most the printed one."""
    records = regenerate_smooth_table(populated_store)
    assert len(records) == 23
    assert all(record.bound <= record.printed for record in records if record.printed is not None)


@pytest.mark.slow
def test_exceptional_table(populated_store: DegreeStore) -> None:
    """Every exceptional row regenerates and is compared with the printed
    row.
    """
    records = {record.d: record for record in regenerate_exceptional_table(populated_store)}
    assert len(records) == 58
    assert all(record.printed is not None for record in records.values())
    assert (records[60].bound, records[60].f) == (15, None)
    c1_row = records[2**19 * 15]
    assert (c1_row.printed, c1_row.printed_f) == (1512660, 3)
    for record in records.values():
        if record.f is not None:
            assert record.bound > generic_target(record.d)
        assert record.discrepancy == (record.bound != record.printed or record.f != record.printed_f)


@pytest.mark.slow
def test_exceptional_certificate(populated_store: DegreeStore) -> None:
    """A degree with an f checks every structure, not just the 2-block
    chain.
    """
    d = 2**17 * 5
    certificate = certify(d, populated_store)
    f = populated_store[d].f
    assert certificate.f == f
    assert f is not None
    kinds = {case.case_id for case in certificate.cases}
    assert kinds == {"primitive", "soluble-blocks", "blocks", "two-block-chain"}
    block_sizes = [case.parameters["m"] for case in certificate.cases if case.case_id == "blocks"]
    assert 2 not in block_sizes
    assert {4, 5, 8, 10, 16, 20} <= set(block_sizes)
    generic = generic_target(d)
    for case in certificate.cases:
        if case.case_id != "two-block-chain":
            assert case.target == generic
        elif case.parameters["f_G"] < f:
            assert case.target == generic
        else:
            assert case.target == populated_store[d].bound
    assert [c.parameters["f_G"] for c in certificate.cases if c.case_id == "two-block-chain"] == list(
        range(1, 18)
    )


@pytest.mark.slow
def test_exceptional_envelope(populated_store: DegreeStore) -> None:
    """Every printed exceptional bound lies within the c1 envelope."""
    rows = exceptional_envelope(populated_store)
    assert len(rows) == 58
    assert all(row.printed <= row.envelope for row in rows)
    assert next(row for row in rows if row.d == 2**19 * 15).envelope == 1512660


@pytest.mark.slow
def test_certify_range(populated_store: DegreeStore) -> None:
    """No degree up to 4096 has a failing case."""
    failing = [d for d in range(2, 4097) if certify(d, populated_store).verdict is Verdict.FAIL]
    assert failing == []
