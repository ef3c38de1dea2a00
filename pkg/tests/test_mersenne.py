"""Tests for lsst.transgen.mersenne (Mersenne exponents and triples)."""

from __future__ import annotations

import unittest

from lsst.transgen.errors import BoundInputError
from lsst.transgen.mersenne import (
    MersenneTriple,
    check_orbit_identity,
    enumerate_triples,
    lucas_lehmer,
    mersenne_exponents,
    orbit_profile,
    triple_table,
)
from lsst.transgen.tables import load_tables


class LucasLehmerTestCase(unittest.TestCase):
    """Tests for the Lucas-Lehmer test and Mersenne exponents."""

    def test_known(self) -> None:
        self.assertTrue(lucas_lehmer(13))
        self.assertTrue(lucas_lehmer(127))
        self.assertFalse(lucas_lehmer(11))
        self.assertFalse(lucas_lehmer(23))

    def test_exponents(self) -> None:
        self.assertEqual(mersenne_exponents(130), [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127])

    def test_invalid(self) -> None:
        with self.assertRaises(ValueError):
            lucas_lehmer(4)
        with self.assertRaises(ValueError):
            lucas_lehmer(2)


class TripleTestCase(unittest.TestCase):
    """Tests for MersenneTriple and triple enumeration."""

    def test_triple(self) -> None:
        triple = MersenneTriple(5, 1, 14)
        self.assertEqual(triple.p, 31)
        self.assertEqual(triple.m, 19)
        self.assertEqual(triple.degree, 3 * 2**19)
        self.assertEqual(str(triple), "(5,1,14)")

    def test_invalid(self) -> None:
        for args in [(3, 1, 0), (11, 1, 0), (5, 0, 1), (5, 1, -1)]:
            with self.subTest(args=args), self.assertRaises(BoundInputError):
                MersenneTriple(*args)
        with self.assertRaises(BoundInputError):
            MersenneTriple(5, 1, 2, t1=3)

    def test_enumerate(self) -> None:
        self.assertEqual(enumerate_triples(4), ())
        self.assertEqual([t.as_tuple() for t in enumerate_triples(5)], [(5, 1, 0)])
        self.assertEqual(
            [t.as_tuple() for t in enumerate_triples(10)], [(5, 1, 5), (5, 2, 0), (7, 1, 3)]
        )
        with self.assertRaises(BoundInputError):
            enumerate_triples(0)

    def test_printed_table(self) -> None:
        """Enumeration reproduces the printed table exactly."""
        printed = load_tables().mersenne
        regenerated = triple_table(range(1, 20))
        self.assertEqual(set(regenerated), set(printed))
        for n, triples in printed.items():
            with self.subTest(n=n):
                self.assertEqual(regenerated[n], triples)

    def test_orbit_profile(self) -> None:
        triple = MersenneTriple(5, 1, 2)
        profile = orbit_profile(triple, 1)
        self.assertEqual(profile, [(6, 2), (186, 2)])
        self.assertEqual(sum(length * count for length, count in profile), 3 * 2**triple.m)
        with self.assertRaises(BoundInputError):
            orbit_profile(triple, 3)

    def test_orbit_identity(self) -> None:
        for e, r in [(5, 1), (5, 3), (7, 2), (13, 1)]:
            with self.subTest(e=e, r=r):
                self.assertTrue(check_orbit_identity(e, r))
        with self.assertRaises(BoundInputError):
            check_orbit_identity(11, 1)
