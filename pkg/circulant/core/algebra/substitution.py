'''Substitution of polynomials into cycle indices.

   A SubstitutionRule is an ordered list of clauses (selector, value). A
   selector picks variable indices r: ALL, EVEN, ODD or an explicit
   collection of indices. A value says what x_r becomes:

     Value(t)        x_r   := t
     SquareValue(t)  x_r^2 := t, legal only where x_r carries an even exponent

   A target t is an int, a UniPoly, or a callable r -> int|UniPoly.'''

import logging

from circulant.core.algebra.unipoly import UniPoly, _as_poly
from circulant.core.errors import ConsistencyError, DomainError, ParityError

log = logging.getLogger(__name__)

ALL = 'all'
EVEN = 'even'
ODD = 'odd'

class Value(object):
    '''x_r := target'''

    square = False

    def __init__(self, target):
        '''Create the assignment.

           @param target : int|UniPoly|callable(int) -> int|UniPoly
               what the variable is replaced by'''

        self.target = target

    def resolve(self, r):
        '''Return the target polynomial for the variable index r.

           @param r : int
               the variable index'''

        target = self.target(r) if callable(self.target) else self.target
        return _as_poly(target)

    def power(self, r, exponent):
        '''Return the value of x_r^exponent.

           @param r : int
               the variable index
           @param exponent : int
               the exponent carried by x_r'''

        return self.resolve(r) ** exponent

    def __repr__(self):
        return '%s(%r)' % (type(self).__name__, self.target)

class SquareValue(Value):
    '''x_r^2 := target'''

    square = True

    def power(self, r, exponent):
        '''Return the value of x_r^exponent = target^(exponent / 2).

           @param r : int
               the variable index
           @param exponent : int
               the exponent carried by x_r, which must be even'''

        if exponent % 2:
            raise ParityError('x_%d^2 is assigned but x_%d carries the odd exponent %d'
                % (r, r, exponent))

        return self.resolve(r) ** (exponent // 2)

def _selects(selector, r):
    if selector == ALL:
        return True
    if selector == EVEN:
        return r % 2 == 0
    if selector == ODD:
        return r % 2 == 1
    return r in selector

class SubstitutionRule(object):
    '''An immutable assignment of values to the variables x_1, x_2, ...'''

    def __init__(self, *clauses):
        '''Create the rule.

           @param clauses : positional arguments, (selector, Value)
               the clauses; every variable index met later must be matched by
               exactly one of them'''

        normalized = list()
        for selector, value in clauses:
            if not isinstance(value, Value):
                raise DomainError('%r is not a Value or SquareValue' % (value,))
            if selector not in (ALL, EVEN, ODD):
                selector = frozenset(selector)
            normalized.append((selector, value))

        self.clauses = tuple(normalized)

    def assign(self, selector, value):
        '''Return a new rule with one more clause.

           @param selector : str|iterable(int)
               ALL, EVEN, ODD or explicit indices
           @param value : Value
               the assignment'''

        return SubstitutionRule(*(self.clauses + ((selector, value),)))

    def lookup(self, r):
        '''Return the single Value assigned to x_r.

           @param r : int
               the variable index'''

        matches = list(v for s, v in self.clauses if _selects(s, r))

        if len(matches) != 1:
            raise DomainError('x_%d has %d assignments in %r, expected exactly one'
                % (r, len(matches), self))

        return matches[0]

    def __repr__(self):
        return 'SubstitutionRule(%s)' % ', '.join('%s: %r' % c for c in self.clauses)

def substitution_sum(ci, rule, power=1, partner=None):
    '''Return n * I_n with the rule substituted, i.e. the integer numerator

           sum over r | n of phi(r) * Q_r^(power * n/r) [* P_r^(n/r)]

       where Q_r comes from rule and the optional P_r from partner, which
       pairs x_r with y_r (the product argument xy = x_1y_1, x_2y_2, ...).

       @param ci : CycleIndex
           the cycle index
       @param rule : SubstitutionRule
           the assignment of the x variables
       @param power : optional, int
           raise every x_r to this power first (the argument x^power)
       @param partner : optional, SubstitutionRule
           the assignment of the paired y variables'''

    total = UniPoly()
    for term in ci.terms:
        r = term.var_index
        value = rule.lookup(r).power(r, power * term.exponent)

        if partner is not None:
            value = value * partner.lookup(r).power(r, term.exponent)

        total = total + term.weight * value

    return total

def substitute(ci, rule):
    '''Substitute the rule into the cycle index and return the resulting
       integer polynomial. The division by the order must be exact.

       @param ci : CycleIndex
           the cycle index
       @param rule : SubstitutionRule
           the assignment of the variables'''

    numerator = substitution_sum(ci, rule)

    try:
        return numerator.exact_div(ci.order)
    except ConsistencyError as e:
        log.error('inexact substitution into %r with %r', ci, rule)
        raise ConsistencyError('substitution into I_%d is not integral: %s' % (ci.order, e))
