from circulant.core.errors import ConsistencyError, DomainError

def _as_poly(o):
    '''Coerce an int (or a UniPoly) into a UniPoly.

       @param o : int|UniPoly
           the object to coerce'''

    if isinstance(o, UniPoly):
        return o

    if isinstance(o, int) and not isinstance(o, bool):
        return UniPoly((o,))

    raise TypeError('cannot use %r as a polynomial' % (o,))

class UniPoly(object):
    '''A polynomial in z with arbitrary-precision integer coefficients. The
       coefficient at index r is the coefficient of z^r; trailing zeros are
       trimmed, so the zero polynomial has no coefficients at all.

       Instances are immutable.'''

    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        '''Create the polynomial.

           @param coefficients : iterable(int)
               the coefficients, lowest power first'''

        coefficients = list(coefficients)

        for c in coefficients:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError('coefficient %r is not an integer' % (c,))

        while coefficients and coefficients[-1] == 0:
            coefficients.pop()

        object.__setattr__(self, 'coefficients', tuple(coefficients))

    def __setattr__(self, name, value):
        raise AttributeError('UniPoly is immutable')

    @classmethod
    def monomial(cls, coefficient, power):
        '''Return coefficient * z^power.

           @param coefficient : int
               the coefficient
           @param power : int
               the power of z'''

        if power < 0:
            raise DomainError('negative power %d' % power)

        return cls([0] * power + [coefficient])

    @classmethod
    def binomial(cls, power, coefficient=1):
        '''Return 1 + coefficient * z^power, the shape of most substitution
           targets.

           @param power : int
               the power of z
           @param coefficient : optional, int
               the coefficient of z^power, defaults to 1'''

        return cls((1,)) + cls.monomial(coefficient, power)

    @property
    def degree(self):
        '''The degree, -1 for the zero polynomial.'''

        return len(self.coefficients) - 1

    def coefficient(self, power):
        '''Return the coefficient of z^power (zero outside the support).

           @param power : int
               the power of z'''

        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = UniPoly((other,))

        if not isinstance(other, UniPoly):
            return NotImplemented

        return self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return 'UniPoly(%r)' % (list(self.coefficients),)

    def __neg__(self):
        return UniPoly(-c for c in self.coefficients)

    def __add__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented

        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a

        result = list(a)
        for i, c in enumerate(b):
            result[i] += c

        return UniPoly(result)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented

        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return UniPoly()

        # schoolbook; degrees stay in the low hundreds
        result = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    result[i + j] += x * y

        return UniPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented

        if exponent < 0:
            raise DomainError('negative exponent %d' % exponent)

        result = UniPoly((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base

        return result

    def exact_div(self, divisor):
        '''Divide every coefficient by an integer, insisting on exactness.

           @param divisor : int
               the non-zero divisor'''

        if divisor == 0:
            raise DomainError('division by zero')

        quotient = list()
        for power, c in enumerate(self.coefficients):
            q, remainder = divmod(c, divisor)
            if remainder:
                raise ConsistencyError('coefficient %d of z^%d is not divisible by %d'
                    % (c, power, divisor))
            quotient.append(q)

        return UniPoly(quotient)

    def stretch(self, factor):
        '''Return p(z^factor).

           @param factor : int
               the positive factor applied to every power'''

        if factor < 1:
            raise DomainError('stretch factor %d is not positive' % factor)

        result = [0] * (self.degree * factor + 1) if self.coefficients else []
        for power, c in enumerate(self.coefficients):
            result[power * factor] = c

        return UniPoly(result)

    def evaluate(self, z):
        '''Evaluate at an integer point with Horner's rule.

           @param z : int
               the point'''

        value = 0
        for c in reversed(self.coefficients):
            value = value * z + c
        return value

    def is_even(self):
        '''Return True when every odd-power coefficient is zero.'''

        return not any(self.coefficients[1::2])

    def to_json(self):
        '''Return the coefficients as decimal strings, lowest power first.'''

        return list(str(c) for c in self.coefficients)

    @classmethod
    def from_json(cls, o):
        '''Rebuild a polynomial from to_json output.

           @param o : list(str|int)
               the serialized coefficients'''

        return cls(int(c) for c in o)

ZERO = UniPoly()
ONE = UniPoly((1,))
