import logging
from collections import namedtuple

from circulant.core.algebra import GAUSSIAN_UNIT, UniPoly, eval_poly
from circulant.core.enumerators.classes import CirculantClass, D, O, U
from circulant.core.enumerators.dispatch import count
from circulant.core.errors import ConsistencyError, DomainError, UnsupportedOrder

log = logging.getLogger(__name__)

EvenOddSplit = namedtuple('EvenOddSplit', 'even odd')
LogConcavityViolation = namedtuple('LogConcavityViolation', 'r square product')

def _series(n, klass, allowed, oracle, allow_slow, config):
    klass = CirculantClass.parse(klass)

    if klass not in allowed:
        raise DomainError('class %s has no valency series here (expected one of %s)'
            % (klass, ', '.join(str(k) for k in allowed)))

    if klass is U and n % 2 == 0:
        raise UnsupportedOrder(n, klass, 'the semi-valency evaluation needs an odd order')

    return klass, count(n, klass, oracle=oracle, allow_slow=allow_slow, config=config).by_valency

def alternating_sum(n, klass, oracle=False, allow_slow=False, config=None):
    '''Evaluate the generating function of class d, u or o at z = -1; for u
       at z = sqrt(-1).

       @param n : int
           the order
       @param klass : CirculantClass|str
           d, u or o'''

    klass, poly = _series(n, klass, (D, U, O), oracle, allow_slow, config)

    return eval_poly(poly, GAUSSIAN_UNIT if klass is U else -1)

def even_odd_split(n, klass, oracle=False, allow_slow=False, config=None):
    '''Split the circulants of class d by valency parity, or those of class u
       (odd n only) by semi-valency parity, i.e. valency mod 4 in {0, 2}.

       @param n : int
           the order
       @param klass : CirculantClass|str
           d or u'''

    klass, poly = _series(n, klass, (D, U), oracle, allow_slow, config)
    coefficients = list(poly)

    if klass is U:
        even, odd = sum(coefficients[0::4]), sum(coefficients[2::4])
    else:
        even, odd = sum(coefficients[0::2]), sum(coefficients[1::2])

    alternating = eval_poly(poly, GAUSSIAN_UNIT if klass is U else -1)
    if even + odd != poly.evaluate(1) or even - odd != alternating:
        raise ConsistencyError('order %d class %s: split (%d, %d) does not reconcile'
            % (n, klass, even, odd))

    return EvenOddSplit(even, odd)

def log_concavity_probe(order=None, counts=None, oracle=False, allow_slow=False, config=None):
    '''Return every semi-valency r, 1 < r < R - 1, with

           C_u(n,2r)^2 < C_u(n,2r-2) * C_u(n,2r+2)

       where R is the largest semi-valency. R - 1 mirrors r = 1 and is left out.
       An empty list means the inner sequence is log-concave.

       @param order : optional, int
           the order, counted by formula (or by the oracle when oracle is set)
       @param counts : optional, UniPoly
           the undirected generating function, supplied externally
       @param oracle : optional, bool
           fall back to the oracle for orders without a formula'''

    if counts is None:
        if order is None:
            raise DomainError('log-concavity probe needs an order or the counts')
        counts = count(order, U, oracle=oracle, allow_slow=allow_slow, config=config).by_valency

    if not isinstance(counts, UniPoly):
        raise DomainError('%r is not a UniPoly' % (counts,))

    top = counts.degree // 2
    violations = list()

    for r in range(2, top - 1):
        square = counts.coefficient(2 * r) ** 2
        product = counts.coefficient(2 * r - 2) * counts.coefficient(2 * r + 2)
        if square < product:
            violations.append(LogConcavityViolation(r, square, product))

    log.debug('log-concavity probe over %d semi-valencies: %d violations', top, len(violations))
    return violations
