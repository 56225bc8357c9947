'''Sparse multivariate polynomials with exact rational coefficients, used to
   state both sides of the cycle-index lemmas formally.

   Variables come in two indexed families, x_1, x_2, ... and y_1, y_2, ...;
   a variable is the pair (family, index). A monomial is a sorted tuple of
   ((family, index), exponent) pairs with positive exponents, so equal
   polynomials have equal term dictionaries.'''

from fractions import Fraction
import operator

from circulant.core.errors import DomainError, ParityError

FAMILIES = ('x', 'y')

def _monomial_product(a, b):
    exponents = dict(a)
    for variable, e in b:
        exponents[variable] = exponents.get(variable, 0) + e
    return tuple(sorted(exponents.items()))

class SymPoly(object):
    '''An immutable polynomial in the x and y variables.'''

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        '''Create the polynomial.

           @param terms : optional, dict
               a mapping monomial -> rational coefficient'''

        clean = dict()
        for monomial, coefficient in (terms or dict()).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                monomial = tuple(sorted(monomial))
                for (family, index), e in monomial:
                    if family not in FAMILIES or index < 1 or e < 1:
                        raise DomainError('malformed monomial %r' % (monomial,))
                clean[monomial] = clean.get(monomial, 0) + coefficient

        object.__setattr__(self, 'terms', dict((m, c) for m, c in clean.items() if c))

    def __setattr__(self, name, value):
        raise AttributeError('SymPoly is immutable')

    @classmethod
    def constant(cls, value):
        '''Return the constant polynomial.

           @param value : int|Fraction
               the constant'''

        return cls({(): value})

    @classmethod
    def variable(cls, family, index, exponent=1):
        '''Return the monomial family_index^exponent.

           @param family : str
               'x' or 'y'
           @param index : int
               the positive variable index
           @param exponent : optional, int
               the positive exponent'''

        return cls({(((family, index), exponent),): 1})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPoly.constant(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return SymPoly(dict((m, -c) for m, c in self.terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented

        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient

        return SymPoly(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented

        terms = dict()
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                monomial = _monomial_product(a, b)
                terms[monomial] = terms.get(monomial, 0) + x * y

        return SymPoly(terms)

    __rmul__ = __mul__

    def scale(self, factor):
        '''Multiply every coefficient by a rational.

           @param factor : int|Fraction
               the factor'''

        factor = Fraction(factor)
        return SymPoly(dict((m, c * factor) for m, c in self.terms.items()))

    def sorted_terms(self):
        '''Return (monomial, coefficient) pairs in canonical order.'''

        return sorted(self.terms.items())

    def __repr__(self):
        return 'SymPoly(%s)' % (str(self) or '0')

    def __str__(self):
        parts = list()
        for monomial, c in self.sorted_terms():
            factors = ''.join(
                '%s_%d%s' % (family, index, '' if e == 1 else '^%d' % e)
                for (family, index), e in monomial)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            else:
                parts.append('(%s)%s' % (c, factors))
        return ' + '.join(parts)

    def to_json(self):
        '''Return the {monomial, num, den} records, monomials sorted.'''

        return list(dict(
                monomial=list(['%s%d' % variable, e] for variable, e in monomial),
                num=str(c.numerator),
                den=str(c.denominator))
            for monomial, c in self.sorted_terms())

    @classmethod
    def from_json(cls, records):
        '''Rebuild a polynomial from to_json output.

           @param records : list(dict)
               the serialized terms'''

        terms = dict()
        for record in records:
            monomial = tuple(((name[0], int(name[1:])), int(e)) for name, e in record['monomial'])
            terms[monomial] = Fraction(int(record['num']), int(record['den']))
        return cls(terms)

def _coerce(o):
    if isinstance(o, SymPoly):
        return o
    if isinstance(o, (int, Fraction)) and not isinstance(o, bool):
        return SymPoly.constant(o)
    return None

ARITHMETIC = {
    'add' : operator.add,
    'sub' : operator.sub,
    'mul' : operator.mul,
    'scale' : SymPoly.scale,
}

def sym_arith(a, b, op):
    '''Exact arithmetic on SymPoly values.

       @param a : SymPoly
           the left operand
       @param b : SymPoly|int|Fraction
           the right operand (a rational for 'scale')
       @param op : str
           one of 'add', 'sub', 'mul', 'scale' '''

    try:
        function = ARITHMETIC[op]
    except KeyError:
        raise DomainError('unknown operation %r' % (op,))

    return function(a, b)

def to_sym(ci, family='x', index_transform=None, exponent_transform=None):
    '''Return the cycle index as a formal SymPoly, with the argument list
       rewritten: term r becomes

           (phi(r)/n) * family_{index_transform(r)}^(exponent_transform(r) * n/r)

       An index_transform returning None substitutes 0 for that variable, so
       the term vanishes. An exponent_transform may return a Fraction (a square
       root is 1/2); the resulting exponent must be integral.

       @param ci : CycleIndex
           the cycle index
       @param family : optional, str
           'x' or 'y'
       @param index_transform : optional, callable(int) -> int|None
           the renaming of variable indices, identity by default
       @param exponent_transform : optional, callable(int) -> int|Fraction
           the multiplier of each exponent, 1 by default'''

    if family not in FAMILIES:
        raise DomainError('unknown variable family %r' % (family,))

    result = SymPoly()
    for term in ci.terms:
        r = term.var_index
        index = r if index_transform is None else index_transform(r)
        if index is None:
            continue

        multiplier = 1 if exponent_transform is None else Fraction(exponent_transform(r))
        exponent = term.exponent * multiplier
        if exponent.denominator != 1:
            raise ParityError('exponent %s of %s_%d is not integral' % (exponent, family, index))

        result = result + SymPoly.variable(family, index, int(exponent)).scale(
            Fraction(term.weight, ci.order))

    return result
