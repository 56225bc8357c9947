import unittest

import sympy

from circulant.core import numtheory
from circulant.core.errors import DomainError

class TestFactorization(unittest.TestCase):

    def test_factorize(self):
        self.assertEqual(((2, 2), (3, 1)), numtheory.factorize(12))
        self.assertEqual(((13, 2),), numtheory.factorize(169))
        self.assertEqual((), numtheory.factorize(1))

        for n in range(1, 500):
            self.assertEqual(sympy.factorint(n), dict(numtheory.factorize(n)))

    def test_square_free(self):
        self.assertTrue(numtheory.is_square_free(30))
        self.assertFalse(numtheory.is_square_free(18))
        self.assertTrue(numtheory.is_square_free(1))

    def test_prime_power(self):
        self.assertEqual((3, 3), numtheory.prime_power(27))
        self.assertEqual((7, 1), numtheory.prime_power(7))
        self.assertIsNone(numtheory.prime_power(12))
        self.assertIsNone(numtheory.prime_power(1))

    def test_domain(self):
        self.assertRaises(DomainError, numtheory.factorize, 0)
        self.assertRaises(DomainError, numtheory.factorize, -3)
        self.assertRaises(DomainError, numtheory.units, 0)

class TestTotient(unittest.TestCase):

    def test_against_sympy(self):
        for n in range(1, 400):
            self.assertEqual(int(sympy.totient(n)), numtheory.euler_phi(n))
            self.assertEqual(sympy.divisors(n), numtheory.divisors(n))

    def test_divisor_sum(self):
        for n in range(1, 10 ** 4 + 1):
            self.assertEqual(n, sum(numtheory.euler_phi(d) for d in numtheory.divisors(n)), n)

    def test_units(self):
        self.assertEqual((1,), numtheory.units(1))
        self.assertEqual((1, 5, 7, 11), numtheory.units(12))
        self.assertEqual(numtheory.euler_phi(169), len(numtheory.units(169)))

class TestPrimality(unittest.TestCase):

    def test_small(self):
        primes = list(n for n in range(200) if numtheory.is_prime(n))
        self.assertEqual(list(sympy.primerange(0, 200)), primes)

    def test_strong_pseudoprimes(self):
        # strong pseudoprimes to several small bases
        for n in (2047, 1373653, 3215031751, 3825123056546413051):
            self.assertFalse(numtheory.is_prime(n))

    def test_beyond_deterministic_bound(self):
        self.assertTrue(numtheory.is_prime(2 ** 89 - 1))
        self.assertFalse(numtheory.is_prime(1000000007 * 998244353 * 1000000009))
        self.assertTrue(numtheory.is_prime(2 ** 127 - 1, rounds=5))

    def test_against_sieve(self):
        limit = 10 ** 6
        sieve = bytearray([1]) * limit
        sieve[0] = sieve[1] = 0
        for p in range(2, int(limit ** 0.5) + 1):
            if sieve[p]:
                sieve[p * p::p] = bytes(len(range(p * p, limit, p)))

        mismatches = list(n for n in range(limit) if bool(sieve[n]) != numtheory.is_prime(n))
        self.assertEqual([], mismatches)

    def test_rounds(self):
        self.assertRaises(DomainError, numtheory.is_prime, 2 ** 89 - 1, 0)

class TestOddPart(unittest.TestCase):

    def test_decomposition(self):
        self.assertEqual((96, 3, 5), numtheory.odd_part_decomposition(96))
        self.assertEqual((13, 13, 0), numtheory.odd_part_decomposition(13))
        self.assertRaises(DomainError, numtheory.odd_part_decomposition, 0)

    def test_round_trip(self):
        mismatches = list()
        for n in range(1, 10 ** 6 + 1):
            m, odd_part, two_exponent = numtheory.odd_part_decomposition(n)
            if m != n or odd_part % 2 != 1 or odd_part << two_exponent != n:
                mismatches.append(n)
        self.assertEqual([], mismatches)

class TestNearlyDoubled(unittest.TestCase):

    def test_below_1000(self):
        pairs = numtheory.nearly_doubled_primes(1000)

        self.assertEqual(21, len(pairs))
        self.assertEqual([3, 5, 13, 37, 61, 73], list(pair.p for pair in pairs[:6]))
        self.assertEqual([2, 3, 7, 19, 31, 37], list(pair.q for pair in pairs[:6]))

        for q, p in pairs:
            self.assertEqual(p, 2 * q - 1)
            self.assertTrue(sympy.isprime(q) and sympy.isprime(p))

class TestCunningham(unittest.TestCase):

    def test_chains(self):
        self.assertEqual([1, 5], numtheory.cunningham_pairs(3, 50))
        self.assertEqual([1, 2, 6, 42], numtheory.cunningham_pairs(9, 50))
        self.assertEqual([1, 9, 37], numtheory.cunningham_pairs(15, 40))
        self.assertEqual([4, 16, 128], numtheory.cunningham_pairs(21, 200))
        self.assertEqual([19, 46], numtheory.cunningham_pairs(27, 50))

    def test_chain_members_are_prime(self):
        for k in numtheory.cunningham_pairs(9, 50):
            self.assertTrue(sympy.isprime(9 * 2 ** k + 1))
            self.assertTrue(sympy.isprime(9 * 2 ** (k + 1) + 1))

    def test_even_ptilde(self):
        self.assertRaises(DomainError, numtheory.cunningham_pairs, 2, 10)
        self.assertRaises(DomainError, numtheory.cunningham_pairs, 0, 10)

if __name__ == '__main__':
    unittest.main()
