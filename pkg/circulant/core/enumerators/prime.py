'''Circulants of prime order p and of twice-prime order 2p.

   Every formula substitutes a class-specific rule into the cycle index of
   the cyclic group of order p-1 (or (p-1)/2 for the undirected classes):

     d   x_r := 1+z^r                         into I_{p-1}
     u   x_r := 1+z^(2r)                      into I_{(p-1)/2}
     o   x_r := 1 (r even), x_r^2 := 1+2z^r   into I_{p-1}
     sd  x_r := 2 (r even), x_r := 0 (r odd)  into I_{p-1}
     su  as sd                                into I_{(p-1)/2}
     t   x_r := 0 (r even), x_r^2 := 2        into I_{p-1}

   and, at order 2p,

     d   x_r := (1+z^r)^2 into I_{p-1}, times (1+z)
     u   x_r := (1+z^(2r))^2 into I_{(p-1)/2}, times (1+z)
     o   x_r := 1 (r even), x_r := 1+2z^r (r odd) into I_{p-1}'''

import logging

from circulant.core.algebra import UniPoly, cycle_index, substitute
from circulant.core.enumerators import rules
from circulant.core.enumerators.classes import \
    CirculantClass, CountResult, D, O, SD, SU, T, U
from circulant.core.errors import DomainError, UnsupportedOrder
from circulant.core.numtheory import is_prime

log = logging.getLogger(__name__)

# class -> (rule factory, True when the index runs over (p-1)/2)
PRIME_RULES = {
    D : (rules.directed, False),
    U : (rules.undirected, True),
    O : (rules.oriented, False),
    SD : (rules.self_complementary, False),
    SU : (rules.self_complementary, True),
    T : (rules.tournament, False),
}

TWICE_PRIME_RULES = {
    D : (rules.directed_doubled, False),
    U : (rules.undirected_doubled, True),
    O : (rules.oriented_doubled, False),
}

# the order-2 substitutions into I_1 are well defined for these
ORDER_TWO_CLASSES = (D, SD)

ONE_PLUS_Z = UniPoly((1, 1))

def _require_prime(p, klass):
    if isinstance(p, bool) or not isinstance(p, int):
        raise DomainError('%r is not an integer' % (p,))

    if not is_prime(p):
        raise DomainError('%d is not prime' % p)

    if p == 2 and klass not in ORDER_TWO_CLASSES:
        raise DomainError('class %s needs an odd prime, got 2' % klass)

def _result(order, klass, poly, provenance='formula'):
    if klass.has_series:
        return CountResult(order, klass, poly.evaluate(1), poly, provenance)

    if poly.degree > 0:
        raise DomainError('class %s produced a non-constant polynomial %r' % (klass, poly))

    return CountResult(order, klass, poly.coefficient(0), None, provenance)

def prime_enumerator(p, klass):
    '''Count the circulants of prime order p.

       @param p : int
           an odd prime (2 is accepted for the classes d and sd)
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)
    _require_prime(p, klass)

    factory, halved = PRIME_RULES[klass]
    m = (p - 1) // 2 if halved else p - 1

    log.debug('order %d class %s: substituting into I_%d', p, klass, m)
    return _result(p, klass, substitute(cycle_index(m), factory()))

def twice_prime_enumerator(p, klass):
    '''Count the circulants of order 2p. Only d, u and o have formulas.

       @param p : int
           an odd prime
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)

    if klass not in TWICE_PRIME_RULES:
        raise UnsupportedOrder(2 * p, klass, 'no twice-prime formula for this class')

    _require_prime(p, klass)
    if p == 2:
        raise DomainError('twice-prime order needs an odd prime, got 2')

    factory, halved = TWICE_PRIME_RULES[klass]
    m = (p - 1) // 2 if halved else p - 1

    poly = substitute(cycle_index(m), factory())
    if klass is not O:
        poly = poly * ONE_PLUS_Z

    log.debug('order %d class %s: substituted into I_%d', 2 * p, klass, m)
    return _result(2 * p, klass, poly)

def formal_undirected(n):
    '''Apply the prime-order undirected formula to any odd n >= 3. For prime n
       the result is the undirected count; for composite n it is a formal
       quantity and is flagged with the provenance 'formal'.

       @param n : int
           an odd integer >= 3'''

    if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise DomainError('formal undirected count needs an odd n >= 3, got %r' % (n,))

    poly = substitute(cycle_index((n - 1) // 2), rules.undirected())
    provenance = 'formula' if is_prime(n) else 'formal'

    return CountResult(n, U, poly.evaluate(1), poly, provenance)
