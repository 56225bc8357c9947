from collections import namedtuple
from functools import lru_cache

from circulant.core.errors import DomainError
from circulant.core.numtheory import divisors, euler_phi

Term = namedtuple('Term', 'var_index weight exponent')

class CycleIndex(object):
    '''The cycle index of the regular cyclic group of order n,

           I_n(x) = (1/n) * sum over r | n of phi(r) * x_r^(n/r),

       kept as one Term(var_index=r, weight=phi(r), exponent=n/r) per divisor
       r, over the common denominator n.'''

    def __init__(self, order):
        '''Create the cycle index.

           @param order : int
               the order n of the cyclic group, n >= 1'''

        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise DomainError('cycle index order must be a positive integer, got %r' % (order,))

        self.order = order
        self.terms = tuple(Term(r, euler_phi(r), order // r) for r in divisors(order))

    def __eq__(self, other):
        if not isinstance(other, CycleIndex):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return 'CycleIndex(%d)' % self.order

    def __str__(self):
        terms = ' + '.join(
            '%sx_%d^%d' % ('' if t.weight == 1 else '%d' % t.weight, t.var_index, t.exponent)
            for t in self.terms)
        return '(%s)/%d' % (terms, self.order)

@lru_cache(maxsize=1024)
def cycle_index(n):
    '''Return the cycle index I_n.

       @param n : int
           a positive integer'''

    return CycleIndex(n)
