"""Tests for lsst.transgen.bounds (induced-module, chief series and
primitive bounds).
"""

from __future__ import annotations

import math
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from lsst.transgen.bounds import (
    BoundValue,
    ChiefFactorProfile,
    OrbitPart,
    SolubilityContext,
    SplitPart,
    chief_series_bound,
    composition_cap_expr,
    e_bound,
    e_sol_bound,
    holt_bound,
    large_block_ratio,
    log_form_bound,
    maximum,
    mersenne_series_bound,
    minimum,
    orbit_bound,
    orbit_count_bound,
    pyber_ab_bound,
    pyber_composition_bound,
    pyber_nonab_bound,
    s4_block_bound,
    split_exponent_bound,
    split_exponent_expr,
)
from lsst.transgen.errors import BoundInputError, TableIntegrityError
from lsst.transgen.mersenne import MersenneTriple
from lsst.transgen.numth import ws
from lsst.transgen.xreal import certified_floor, certified_le, certified_lt, lit, log2

S4 = ChiefFactorProfile(4, "S4", ((2, 2), (3, 1), (2, 1)))
C2 = ChiefFactorProfile(2, "C2", ((2, 1),))
S5 = ChiefFactorProfile(5, "S5", ((2, 1),), ("A5",))


class BoundValueTestCase(unittest.TestCase):
    """Tests for BoundValue arithmetic and traces."""

    def test_arithmetic(self) -> None:
        a = BoundValue.of(Fraction(7, 2), "a")
        b = BoundValue.of(2, "b")
        total = a + b + 1
        self.assertEqual(total.value, Fraction(13, 2))
        self.assertEqual([step.rule for step in total.trace], ["a", "b"])
        self.assertEqual(int(total), 6)
        self.assertEqual(total.floored().value, 6)

    def test_infinite(self) -> None:
        inf = BoundValue.of(math.inf, "chi")
        self.assertFalse(inf.is_finite)
        self.assertEqual(inf.scaled(0).value, 0)
        with self.assertRaises(OverflowError):
            int(inf)

    def test_invalid(self) -> None:
        with self.assertRaises(BoundInputError):
            BoundValue.of(-1, "negative")
        with self.assertRaises(BoundInputError):
            BoundValue.of(1.5, "float")

    def test_min_max_trace(self) -> None:
        options = [("x", BoundValue.of(3, "x")), ("y", BoundValue.of(5, "y"))]
        low = minimum(options, "pick")
        high = maximum(options, "worst")
        self.assertEqual(low.value, 3)
        self.assertEqual(high.value, 5)
        self.assertEqual(low.trace[-1].detail, "min(x=3, y=5) -> x")
        self.assertEqual(str(high.trace[-1]), "worst: max(x=3, y=5) -> y")
        with self.assertRaises(BoundInputError):
            minimum([], "empty")


class InducedBoundTestCase(unittest.TestCase):
    """Tests for E(n, p), E_sol(n, p) and the orbit bounds."""

    def test_e_bound(self) -> None:
        self.assertEqual(e_bound(12, 2).value, 4)
        self.assertEqual(e_bound(8, 2).value, 3)
        self.assertEqual(e_bound(3, 2).value, 1)
        self.assertEqual(e_bound(2, 2).value, 1)
        self.assertEqual(e_bound(9, 3).value, 3)
        self.assertEqual(e_bound(12, 3).value, 3)

    def test_e_sol_bound(self) -> None:
        self.assertEqual(e_sol_bound(8, 2).value, 3)
        self.assertEqual(e_sol_bound(93, 2).value, 1)
        self.assertEqual(e_sol_bound(12, 3).value, 3)
        self.assertEqual(e_sol_bound(12, 2).value, Fraction(4))

    def test_soluble_against_general(self) -> None:
        """For p = 2 the floored soluble bound never exceeds the general one;
        for odd p it can.
        """
        for n in range(2, 5001):
            with self.subTest(n=n):
                self.assertLessEqual(int(e_sol_bound(n, 2)), int(e_bound(n, 2)))
        self.assertEqual(e_sol_bound(3, 3).value, Fraction(3, 2))
        self.assertEqual(int(e_sol_bound(3, 3)), int(e_bound(3, 3)))
        self.assertEqual((e_sol_bound(9, 3).value, e_bound(9, 3).value), (Fraction(9, 2), 3))

    def test_domain(self) -> None:
        with self.assertRaises(BoundInputError):
            e_bound(1, 2)
        with self.assertRaises(BoundInputError):
            e_sol_bound(1, 3)

    def test_orbit_bound(self) -> None:
        self.assertEqual(orbit_bound(OrbitPart.SOLUBLE, 12, 2, a=3, chi1=2).value, 8)
        self.assertEqual(orbit_bound(OrbitPart.COPRIME_PART, 12, 2, r=3).value, 4)
        self.assertEqual(orbit_bound(OrbitPart.GENERAL, 12, 2, a=2).value, 8)
        self.assertEqual(orbit_bound(OrbitPart.CHI_WIDTH, 8, 2, chi=1).value, 3)
        self.assertEqual(orbit_bound(OrbitPart.ORBIT_SUM, 12, 2, orbit_sizes=[8, 4]).value, 5)

    def test_orbit_bound_preconditions(self) -> None:
        with self.assertRaises(BoundInputError):
            orbit_bound(OrbitPart.ORBIT_SUM, 12, 2, orbit_sizes=[8, 3])
        with self.assertRaises(BoundInputError):
            orbit_bound(OrbitPart.COPRIME_PART, 12, 2, r=2)
        with self.assertRaises(BoundInputError):
            orbit_bound(OrbitPart.CHI_WIDTH, 9, 2, chi=1)

    def test_log_form(self) -> None:
        self.assertEqual(log_form_bound(16, 2, 1).value, 14)
        self.assertEqual(log_form_bound(16, 2, 0).value, 0)


@given(st.integers(min_value=2, max_value=5000), st.sampled_from([2, 3, 5, 7]))
def test_e_sol_at_most_ws_and_p_part(n: int, p: int) -> None:
    """E_sol(n, p) never exceeds ws(n), and E(n, p) never exceeds n."""
    value = e_sol_bound(n, p).value
    assert value <= ws(n)
    assert value <= n
    assert e_bound(n, p).value <= n


class ChiefSeriesTestCase(unittest.TestCase):
    """Tests for the wreath product bounds."""

    def test_s4_at_two(self) -> None:
        one = BoundValue.of(1, "dt")
        for ctx in SolubilityContext:
            with self.subTest(ctx=ctx):
                self.assertEqual(chief_series_bound(S4, 2, ctx, one).value, 5)
        self.assertEqual(s4_block_bound(2, SolubilityContext.SOLUBLE, one).value, 5)

    def test_c2_at_twelve(self) -> None:
        d_s = BoundValue.of(4, "dt")
        self.assertEqual(chief_series_bound(C2, 12, SolubilityContext.GENERAL, d_s).value, 8)
        self.assertEqual(s4_block_bound(12, SolubilityContext.GENERAL, d_s).value, 16)

    def test_nonabelian_factor(self) -> None:
        d_s = BoundValue.of(4, "dt")
        value = chief_series_bound(S5, 12, SolubilityContext.GENERAL, d_s).value
        self.assertEqual(value, int(e_bound(12, 2)) + 1 + 4)

    def test_mersenne_series(self) -> None:
        triple = MersenneTriple(5, 1, 14)
        d_s = BoundValue.of(282317, "dt")
        self.assertEqual(mersenne_series_bound(1, triple, d_s).value, 315085)
        self.assertEqual(mersenne_series_bound(1, triple, d_s, start=1).value, 282317 + 2**14)
        with self.assertRaises(BoundInputError):
            mersenne_series_bound(1, triple, d_s, start=2)

    def test_orbit_count(self) -> None:
        d_s = BoundValue.of(4, "dt")
        general = orbit_count_bound(
            12, 2, 2, chi=1, chi1=1, r=3, d_x=1, rest=[], ctx=SolubilityContext.GENERAL, d_s=d_s
        )
        # min(floor(12/sqrt(2)) + 1, 12/3 + 1, 2 E(12,2)) + 4
        self.assertEqual(general.value, 9)
        soluble = orbit_count_bound(
            12, 2, 2, chi=1, chi1=1, r=3, d_x=1, rest=[(3, 1)], ctx=SolubilityContext.SOLUBLE, d_s=d_s
        )
        # min(ws(12) + 1, 4 + 1, 2 E_sol(12,2)) + E_sol(12,3) + 4
        self.assertEqual(soluble.value, 12)
        with self.assertRaises(BoundInputError):
            orbit_count_bound(12, 2, 1, 1, 1, 2, 0, [], SolubilityContext.GENERAL, d_s)

    def test_split_exponent(self) -> None:
        alpha = Fraction(2, 5)
        d_s = BoundValue.of(0, "dt")
        for part in SplitPart:
            with self.subTest(part=part):
                bound = split_exponent_bound(part, 1000, alpha, 2, 1, 3, 0, d_s)
                expr = split_exponent_expr(part, 1000, alpha, 2, 1, 3, 0, 0)
                # Flooring each term can only lower the value.
                self.assertTrue(certified_le(lit(bound.value), expr))
        with self.assertRaises(BoundInputError):
            split_exponent_bound(SplitPart.COPRIME, 1000, Fraction(1), 2, 1, 3, 0, d_s)

    def test_split_coprime_value(self) -> None:
        """The coprime split is 3 n / ((1 - alpha) c' log n) for a_ab = 3."""
        bound = split_exponent_bound(
            SplitPart.COPRIME, 16, Fraction(1, 2), 2, 1, 3, 0, BoundValue.of(0, "dt")
        )
        self.assertEqual(bound.value, log_form_bound(16, 2, 3).value)


class PrimitiveTestCase(unittest.TestCase):
    """Tests for the Holt and Pyber bounds."""

    def test_holt(self) -> None:
        self.assertEqual(holt_bound(3).value, 1)
        self.assertTrue(holt_bound(3).exception)
        self.assertEqual(holt_bound(36).value, 5)
        with self.assertRaises(BoundInputError):
            holt_bound(1)

    def test_pyber(self) -> None:
        self.assertEqual(pyber_nonab_bound(1000), 9)
        self.assertEqual(pyber_ab_bound(2), certified_floor(composition_cap_expr(2)))
        self.assertLess(pyber_ab_bound(480), pyber_composition_bound(480))
        self.assertIn(pyber_composition_bound(480) - pyber_ab_bound(480), (8, 9))

    def test_large_block_ratio_decreasing(self) -> None:
        """The ratio decreases as w grows."""
        low = large_block_ratio(30, log2(100), log2(1261))
        high = large_block_ratio(30, log2(100), log2(10**6))
        self.assertTrue(certified_lt(high, low))


class ProfileTestCase(unittest.TestCase):
    """Tests for ChiefFactorProfile."""

    def test_counts(self) -> None:
        self.assertEqual(S4.a_ab, 4)
        self.assertEqual(S4.a_p(2), 3)
        self.assertEqual(S4.a_pprime(2), 1)
        self.assertEqual(S4.composition_length, 4)
        self.assertTrue(S4.is_soluble)
        self.assertFalse(S5.is_soluble)
        self.assertEqual(S5.composition_length, 2)
        self.assertEqual(str(S4), "S4 [2^2, 3, 2]")

    def test_from_mapping(self) -> None:
        data = {"name": "S5", "abelian": [[2, 1]], "nonabelian": ["A5"]}
        profile = ChiefFactorProfile.from_mapping(5, data)
        self.assertEqual(profile, S5)
        with self.assertRaises(TableIntegrityError):
            ChiefFactorProfile.from_mapping(5, {"abelian": [[2, 1]]})
        with self.assertRaises(TableIntegrityError):
            ChiefFactorProfile(4, "bad", ((4, 1),))


@settings(deadline=None)
@given(
    st.integers(min_value=2, max_value=3000),
    st.lists(st.tuples(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4)), max_size=4),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=100),
    st.integers(min_value=0, max_value=100),
    st.sampled_from(list(SolubilityContext)),
)
def test_chief_series_monotone(
    n: int, factors: list[tuple[int, int]], bump: int, d_s: int, extra: int, ctx: SolubilityContext
) -> None:
    """The chief series bound is nondecreasing in d_S and in each a_i."""
    profile = ChiefFactorProfile(0, "R", tuple(factors))
    base = chief_series_bound(profile, n, ctx, BoundValue.of(d_s, "dt")).value
    assert chief_series_bound(profile, n, ctx, BoundValue.of(d_s + extra, "dt")).value >= base
    for i, (p, a) in enumerate(factors):
        grown = (*factors[:i], (p, a + bump), *factors[i + 1 :])
        bigger = ChiefFactorProfile(0, "R", tuple(grown))
        assert chief_series_bound(bigger, n, ctx, BoundValue.of(d_s, "dt")).value >= base
    assert s4_block_bound(n, ctx, BoundValue.of(d_s + extra, "dt")).value >= s4_block_bound(
        n, ctx, BoundValue.of(d_s, "dt")
    ).value


@settings(deadline=None)
@given(st.integers(min_value=2, max_value=5000), st.integers(0, 6), st.integers(0, 6))
def test_log_form_monotone(n: int, a: int, extra: int) -> None:
    """The log-form bound is nondecreasing in the composition length."""
    assert log_form_bound(n, 2, a + extra).value >= log_form_bound(n, 2, a).value
