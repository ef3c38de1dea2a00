"""Tests for lsst.transgen.tables (embedded data tables)."""

from __future__ import annotations

import shutil
import tempfile
import unittest
from pathlib import Path

from lsst.transgen.errors import TableIntegrityError
from lsst.transgen.tables import DATA_DIR, EmbeddedTables, degree_expr, load_tables


class DegreeExprTestCase(unittest.TestCase):
    """Tests for degree_expr."""

    def test_format(self) -> None:
        self.assertEqual(degree_expr(655360), "2^17·5")
        self.assertEqual(degree_expr(60), "2^2·15")
        self.assertEqual(degree_expr(2), "2")
        self.assertEqual(degree_expr(64), "2^6")
        self.assertEqual(degree_expr(6), "2·3")
        self.assertEqual(degree_expr(15), "15")

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            degree_expr(0)


class EmbeddedTablesTestCase(unittest.TestCase):
    """Tests for loading and verifying the embedded tables."""

    def test_shape(self) -> None:
        tables = load_tables()
        self.assertEqual(sorted(tables.small_degrees), list(range(2, 33)))
        self.assertEqual(len(tables.smooth), 23)
        self.assertEqual(len(tables.exceptional), 58)
        self.assertEqual(len(tables.mersenne), 15)

    def test_values(self) -> None:
        tables = load_tables()
        self.assertEqual(tables.small_degrees[8], 4)
        self.assertEqual(tables.small_degrees[32], 10)
        self.assertEqual(tables.smooth_degrees[48], 16)
        self.assertEqual(tables.smooth_degrees[3 * 2**20], 546854)
        row = tables.exceptional_degrees[2**17 * 5]
        self.assertEqual((row.f, row.bound), (5, 130900))
        self.assertIsNone(tables.exceptional_degrees[40].f)
        self.assertIn(22, tables.small_degree_groups[8])

    def test_profiles(self) -> None:
        tables = load_tables()
        self.assertEqual([p.name for p in tables.profiles_for(4)], ["A4", "S4"])
        self.assertEqual(tables.profiles_for(11), ())
        self.assertTrue(all(not p.is_soluble for p in tables.profiles_for(24)))

    def test_checksum_mismatch(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            data_dir = Path(tmp) / "data"
            shutil.copytree(DATA_DIR, data_dir)
            path = data_dir / "smooth_degrees.yaml"
            path.write_text(path.read_text().replace("bound: 16}", "bound: 15}"))
            with self.assertRaises(TableIntegrityError):
                EmbeddedTables.load(data_dir)
            # Without verification the edited table loads.
            tables = EmbeddedTables.load(data_dir, verify=False)
            self.assertEqual(tables.smooth_degrees[48], 15)

    def test_missing_file(self) -> None:
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(TableIntegrityError):
                EmbeddedTables.load(tmp)
