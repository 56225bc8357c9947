'''The substitution rules of the counting formulas. A stretch s replaces z by
   z^s, which is how the y variables of the prime-squared formulas are
   obtained (s = p).'''

from circulant.core.algebra import \
    ALL, EVEN, ODD, SquareValue, SubstitutionRule, UniPoly, Value

def directed(stretch=1):
    '''x_r := 1 + z^r'''

    return SubstitutionRule((ALL, Value(lambda r: UniPoly.binomial(stretch * r))))

def undirected(stretch=1):
    '''x_r := 1 + z^(2r)'''

    return SubstitutionRule((ALL, Value(lambda r: UniPoly.binomial(2 * stretch * r))))

def oriented(stretch=1):
    '''x_r := 1 for even r, x_r^2 := 1 + 2z^r for odd r'''

    return SubstitutionRule(
        (EVEN, Value(1)),
        (ODD, SquareValue(lambda r: UniPoly.binomial(stretch * r, 2))))

def self_complementary():
    '''x_r := 2 for even r, x_r := 0 for odd r'''

    return SubstitutionRule((EVEN, Value(2)), (ODD, Value(0)))

def tournament():
    '''x_r := 0 for even r, x_r^2 := 2 for odd r'''

    return SubstitutionRule((EVEN, Value(0)), (ODD, SquareValue(2)))

def directed_doubled():
    '''x_r := (1 + z^r)^2'''

    return SubstitutionRule((ALL, Value(lambda r: UniPoly.binomial(r) ** 2)))

def undirected_doubled():
    '''x_r := (1 + z^(2r))^2'''

    return SubstitutionRule((ALL, Value(lambda r: UniPoly.binomial(2 * r) ** 2)))

def oriented_doubled():
    '''x_r := 1 for even r, x_r := 1 + 2z^r for odd r'''

    return SubstitutionRule(
        (EVEN, Value(1)),
        (ODD, Value(lambda r: UniPoly.binomial(r, 2))))
