import logging
from collections import namedtuple
from functools import lru_cache
from math import isqrt

from circulant.core.enumerators.classes import CirculantClass, U
from circulant.core.enumerators.prime import \
    ORDER_TWO_CLASSES, TWICE_PRIME_RULES, prime_enumerator, twice_prime_enumerator
from circulant.core.enumerators.squared import prime_squared_enumerator
from circulant.core.errors import DomainError, UnsupportedOrder
from circulant.core.numtheory import is_prime

log = logging.getLogger(__name__)

PRIME = 'prime'
TWICE_PRIME = 'twice-prime'
PRIME_SQUARED = 'prime-squared'

OrderKind = namedtuple('OrderKind', 'kind p')

def classify_order(n):
    '''Return OrderKind(kind, p) for the order classes with formulas (p,
       2p and p^2 with p an odd prime, plus the prime 2 itself), else None.

       @param n : int
           the order'''

    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError('order must be a positive integer, got %r' % (n,))

    if is_prime(n):
        return OrderKind(PRIME, n)

    if n % 2 == 0 and n > 4 and is_prime(n // 2):
        return OrderKind(TWICE_PRIME, n // 2)

    root = isqrt(n)
    if root * root == n and root > 2 and is_prime(root):
        return OrderKind(PRIME_SQUARED, root)

    return None

def supported(n, klass):
    '''Return True when a formula covers class klass at order n.

       @param n : int
           the order
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)
    kind = classify_order(n)

    if kind is None:
        return False
    if kind.kind == PRIME:
        return kind.p > 2 or klass in ORDER_TWO_CLASSES
    if kind.kind == TWICE_PRIME:
        return klass in TWICE_PRIME_RULES
    return True

@lru_cache(maxsize=4096)
def _formula_count(n, klass):
    kind = classify_order(n)

    if kind.kind == PRIME:
        return prime_enumerator(kind.p, klass)
    if kind.kind == TWICE_PRIME:
        return twice_prime_enumerator(kind.p, klass)
    return prime_squared_enumerator(kind.p, klass)

def count(order, klass, oracle=False, allow_slow=False, config=None):
    '''Count the circulants of one class at one order with the matching
       formula. Orders no formula covers go to the brute-force oracle when
       oracle is set, and raise UnsupportedOrder otherwise.

       @param order : int
           the order n
       @param klass : CirculantClass|str
           the class of circulants
       @param oracle : optional, bool
           fall back to the oracle for orders without a formula
       @param allow_slow : optional, bool
           let the oracle run beyond its default bounds
       @param config : optional, dict
           the settings from circulant.core.config.load_config'''

    klass = CirculantClass.parse(klass)

    if supported(order, klass):
        return _formula_count(order, klass)

    if oracle:
        from circulant.core.oracle.census import enumerate_class

        log.info('order %d class %s: no formula, asking the oracle', order, klass)
        return enumerate_class(order, klass, allow_slow=allow_slow, config=config)

    raise UnsupportedOrder(order, klass)

def directed_not_undirected(order, oracle=False, allow_slow=False, config=None):
    '''Return c_d(n,z) - c_u(n,z), the generating function of the directed
       circulants that are not undirected.

       @param order : int
           the order n'''

    directed = count(order, 'd', oracle=oracle, allow_slow=allow_slow, config=config)
    undirected = count(order, U, oracle=oracle, allow_slow=allow_slow, config=config)

    return directed.by_valency - undirected.by_valency
