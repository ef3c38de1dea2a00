"""Tests for lsst.transgen.numth (factorization, primality and arithmetic
functions).
"""

from __future__ import annotations

import math
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from lsst.transgen.errors import NumberTheoryError
from lsst.transgen.numth import (
    big_k,
    binom,
    factorize,
    is_prime,
    lpp,
    lpp_table,
    omega,
    omega1,
    p_part,
    prime_pi,
    primes_up_to,
    squarefree_decomposition,
    ws,
)


class FactorizeTestCase(unittest.TestCase):
    """Tests for factorize and Factorization."""

    def test_small(self) -> None:
        self.assertEqual(factorize(1).factors, ())
        self.assertEqual(factorize(12).factors, ((2, 2), (3, 1)))
        self.assertEqual(factorize(2**19 * 15).factors, ((2, 19), (3, 1), (5, 1)))

    def test_large_prime_cofactor(self) -> None:
        """A Mersenne prime beyond trial division is recognized."""
        p = 2**61 - 1
        self.assertEqual(factorize(p).factors, ((p, 1),))
        self.assertEqual(factorize(6 * p).factors, ((2, 1), (3, 1), (p, 1)))

    def test_divisors(self) -> None:
        self.assertEqual(factorize(12).divisors(), [1, 2, 3, 4, 6, 12])
        self.assertEqual(factorize(1).divisors(), [1])

    def test_exponent(self) -> None:
        f = factorize(360)
        self.assertEqual(f.exponent(2), 3)
        self.assertEqual(f.exponent(7), 0)
        self.assertEqual(f.primes, (2, 3, 5))

    def test_nonpositive(self) -> None:
        with self.assertRaises(NumberTheoryError):
            factorize(0)

    def test_squarefree_decomposition(self) -> None:
        self.assertEqual(squarefree_decomposition(72), (6, 2))
        self.assertEqual(squarefree_decomposition(49), (7, 1))
        self.assertEqual(squarefree_decomposition(30), (1, 30))


@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_multiplies_out(n: int) -> None:
    """Every factorization multiplies back to n with prime factors."""
    f = factorize(n)
    assert f.multiply_out() == n
    assert all(is_prime(p) for p in f.primes)


class PrimesTestCase(unittest.TestCase):
    """Tests for is_prime, primes_up_to and prime_pi."""

    def test_primes_up_to(self) -> None:
        self.assertEqual(primes_up_to(30), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
        self.assertEqual(primes_up_to(1), [])

    def test_prime_pi(self) -> None:
        self.assertEqual(prime_pi(1000), 168)
        self.assertEqual(prime_pi(10000), 1229)

    def test_is_prime(self) -> None:
        self.assertTrue(is_prime(2))
        self.assertTrue(is_prime(1_000_003))
        self.assertTrue(is_prime(2**61 - 1))
        self.assertFalse(is_prime(1))
        self.assertFalse(is_prime(561))
        self.assertFalse(is_prime(2**67 - 1))

    def test_sieve_agrees(self) -> None:
        primes = set(primes_up_to(5000))
        self.assertEqual({n for n in range(5001) if is_prime(n)}, primes)


class ArithmeticTestCase(unittest.TestCase):
    """Tests for p-parts, lpp, the omega functions and ws."""

    def test_p_part(self) -> None:
        self.assertEqual(p_part(48, 2), 16)
        self.assertEqual(p_part(48, 3), 3)
        self.assertEqual(p_part(35, 2), 1)

    def test_p_part_not_prime(self) -> None:
        with self.assertRaises(NumberTheoryError):
            p_part(48, 4)
        with self.assertRaises(NumberTheoryError):
            p_part(0, 2)

    def test_lpp(self) -> None:
        self.assertEqual(lpp(1), 1)
        self.assertEqual(lpp(12), 4)
        self.assertEqual(lpp(72), 9)
        self.assertEqual(lpp(19), 19)

    def test_lpp_table(self) -> None:
        table = lpp_table(500)
        self.assertEqual(table[0], 0)
        self.assertEqual(table[1:], [lpp(n) for n in range(1, 501)])

    def test_omega(self) -> None:
        self.assertEqual(omega(12), 3)
        self.assertEqual(omega1(12), 7)
        self.assertEqual(big_k(12), 4)
        self.assertEqual(big_k(1), 0)

    def test_binom(self) -> None:
        self.assertEqual(binom(4, 2), 6)
        self.assertEqual(binom(3, 5), 0)
        with self.assertRaises(NumberTheoryError):
            binom(-1, 0)

    def test_ws(self) -> None:
        self.assertEqual(ws(2), Fraction(1))
        self.assertEqual(ws(8), Fraction(3))
        self.assertEqual(ws(12), Fraction(9, 2))

    def test_ws_domain(self) -> None:
        with self.assertRaises(NumberTheoryError):
            ws(1)


@settings(deadline=None)
@given(st.integers(min_value=2, max_value=10**6))
def test_ws_formula(n: int) -> None:
    """ws(n) equals n binom(K, K//2) / 2**K with K = omega1(n) - omega(n)."""
    k = omega1(n) - omega(n)
    assert ws(n) == Fraction(n * math.comb(k, k // 2), 2**k)
