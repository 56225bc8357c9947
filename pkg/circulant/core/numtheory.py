'''Elementary number theory: totient, divisors, primality, 2-adic
   decomposition, and the nearly-doubled-prime / Cunningham-chain searches.

   Everything here is a pure function of its arguments.'''

from collections import namedtuple
from functools import lru_cache
import logging
import secrets

from circulant.core.errors import DomainError

log = logging.getLogger(__name__)

# Miller-Rabin with these witnesses is exact below 3.3 * 10^24 > 2^64
WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_BOUND = 2 ** 64
DEFAULT_ROUNDS = 40

OddPartDecomposition = namedtuple('OddPartDecomposition', 'n odd_part two_exponent')
PrimePair = namedtuple('PrimePair', 'q p')

def _require_positive(n):
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError('%r is not an integer' % (n,))
    if n < 1:
        raise DomainError('%d is not a positive integer' % n)

@lru_cache(maxsize=4096)
def factorize(n):
    '''Return the prime factorization of n as a tuple of (prime, exponent)
       pairs, ascending. Trial division; arguments here stay small.

       @param n : int
           a positive integer'''

    _require_positive(n)

    factors = list()
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2

    if n > 1:
        factors.append((n, 1))

    return tuple(factors)

def prime_divisors(n):
    '''Return the distinct prime divisors of n, ascending.

       @param n : int
           a positive integer'''

    return tuple(p for p, _ in factorize(n))

def is_square_free(n):
    '''Return True when no square of a prime divides n.

       @param n : int
           a positive integer'''

    return all(e == 1 for _, e in factorize(n))

def prime_power(n):
    '''Return (p, k) when n = p^k for a prime p and k >= 1, otherwise None.

       @param n : int
           a positive integer'''

    factors = factorize(n)
    if len(factors) == 1:
        return factors[0]
    return None

def euler_phi(n):
    '''Return the number of units modulo n.

       @param n : int
           a positive integer'''

    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result

def divisors(n):
    '''Return the divisors of n in ascending order.

       @param n : int
           a positive integer'''

    result = [1]
    for p, e in factorize(n):
        result = list(d * p ** i for d in result for i in range(e + 1))
    return sorted(result)

def units(n):
    '''Return the multipliers m in 1..n with gcd(m, n) = 1 (for n = 1, just 1).

       @param n : int
           a positive integer'''

    _require_positive(n)

    if n == 1:
        return (1,)

    factors = prime_divisors(n)
    return tuple(m for m in range(1, n) if all(m % p for p in factors))

def _strong_probable_prime(n, d, s, a):
    '''One Miller-Rabin round: is n a strong probable prime to base a, where
       n - 1 = d * 2^s with d odd.'''

    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True

    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True

    return False

def is_prime(n, rounds=DEFAULT_ROUNDS):
    '''Miller-Rabin primality test. Exact below 2^64 (fixed witness set);
       above, the fixed witnesses are followed by `rounds` random ones, so a
       composite slips through with probability at most 4^-rounds.

       @param n : int
           a non-negative integer
       @param rounds : optional, int
           the number of random witnesses used above 2^64'''

    if n < 2:
        return False

    for p in WITNESSES:
        if n % p == 0:
            return n == p

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for a in WITNESSES:
        if not _strong_probable_prime(n, d, s, a):
            return False

    if n < DETERMINISTIC_BOUND:
        return True

    if rounds < 1:
        raise DomainError('rounds must be positive, got %d' % rounds)

    log.debug('probabilistic test of a %d-bit number with %d rounds', n.bit_length(), rounds)
    for _ in range(rounds):
        a = 2 + secrets.randbelow(n - 3)
        if not _strong_probable_prime(n, d, s, a):
            return False

    return True

def odd_part_decomposition(n):
    '''Split n into odd_part * 2^two_exponent.

       @param n : int
           a positive integer'''

    _require_positive(n)

    two_exponent = (n & -n).bit_length() - 1
    return OddPartDecomposition(n, n >> two_exponent, two_exponent)

def nearly_doubled_primes(limit, rounds=DEFAULT_ROUNDS):
    '''Return every prime pair (q, p) with p = 2q - 1 and p <= limit, sorted by
       p.

       @param limit : int
           the largest p to consider
       @param rounds : optional, int
           Miller-Rabin rounds above 2^64'''

    pairs = list()
    q = 2
    while 2 * q - 1 <= limit:
        if is_prime(q, rounds) and is_prime(2 * q - 1, rounds):
            pairs.append(PrimePair(q, 2 * q - 1))
        q += 1

    return pairs

def cunningham_pairs(ptilde, k_max, rounds=DEFAULT_ROUNDS):
    '''Return every k <= k_max for which ptilde * 2^k + 1 and
       ptilde * 2^(k+1) + 1 are both prime, i.e. the smaller index of each
       Cunningham chain of the second kind of length 2 with odd part ptilde.

       @param ptilde : int
           a positive odd integer
       @param k_max : int
           the largest k to test
       @param rounds : optional, int
           Miller-Rabin rounds above 2^64'''

    _require_positive(ptilde)

    if ptilde % 2 == 0:
        raise DomainError('p-tilde must be odd, got %d' % ptilde)

    found = list()
    # the larger member at k is the smaller member at k + 1
    previous = is_prime(ptilde + 1, rounds)
    for k in range(k_max + 1):
        current = is_prime((ptilde << (k + 1)) + 1, rounds)
        if previous and current:
            found.append(k)
        previous = current

    return found
