'''Circulants of order p^2, p an odd prime.

   With m = p-1 the bivariate index is

       C(p^2; x, y) = (1/p) I_m(x^(p+1)) - (1/p) I_m(xy) + I_m(x) I_m(y)

   and C* is the same expression over m = (p-1)/2. The y variables take the
   x substitution with z replaced by z^p. Over the common denominator p*m^2
   the expression is ((A - B) m + p X Y) / (p m^2) where A, B, X, Y are the
   numerators of the four cycle-index substitutions.'''

import logging

from circulant.core.algebra import cycle_index, substitution_sum
from circulant.core.enumerators import rules
from circulant.core.enumerators.classes import \
    CirculantClass, CountResult, D, O, SD, SU, T, U
from circulant.core.enumerators.prime import prime_enumerator
from circulant.core.errors import ConsistencyError, DomainError
from circulant.core.numtheory import is_prime

log = logging.getLogger(__name__)

def _squared_rules(p):
    # class -> (x rule, y rule, True for C*)
    return {
        D : (rules.directed(), rules.directed(p), False),
        U : (rules.undirected(), rules.undirected(p), True),
        O : (rules.oriented(), rules.oriented(p), False),
        SD : (rules.self_complementary(), rules.self_complementary(), False),
        SU : (rules.self_complementary(), rules.self_complementary(), True),
        T : (rules.tournament(), rules.tournament(), False),
    }

def bivariate_substitution(p, m, rule_x, rule_y):
    '''Substitute the x and y rules into C(p^2; x, y) built over I_m and
       return the integer polynomial.

       @param p : int
           the odd prime
       @param m : int
           p-1 for C, (p-1)/2 for C*
       @param rule_x : SubstitutionRule
           the assignment of x_1, x_2, ...
       @param rule_y : SubstitutionRule
           the assignment of y_1, y_2, ...'''

    ci = cycle_index(m)

    a = substitution_sum(ci, rule_x, power=p + 1)
    b = substitution_sum(ci, rule_x, partner=rule_y)
    x = substitution_sum(ci, rule_x)
    y = substitution_sum(ci, rule_y)

    numerator = (a - b) * m + p * (x * y)

    try:
        return numerator.exact_div(p * m * m)
    except ConsistencyError as e:
        log.error('inexact bivariate substitution at p=%d over I_%d', p, m)
        raise ConsistencyError('C(%d^2) over I_%d is not integral: %s' % (p, m, e))

def prime_squared_enumerator(p, klass):
    '''Count the circulants of order p^2.

       @param p : int
           an odd prime
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)

    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p) or p == 2:
        raise DomainError('prime-squared order needs an odd prime, got %r' % (p,))

    rule_x, rule_y, starred = _squared_rules(p)[klass]
    m = (p - 1) // 2 if starred else p - 1

    poly = bivariate_substitution(p, m, rule_x, rule_y)
    log.debug('order %d class %s: substituted into C%s over I_%d',
              p * p, klass, '*' if starred else '', m)

    if klass.has_series:
        return CountResult(p * p, klass, poly.evaluate(1), poly)

    if poly.degree > 0:
        raise ConsistencyError('class %s at order %d produced %r' % (klass, p * p, poly))

    return CountResult(p * p, klass, poly.coefficient(0))

def mixed_sd(p):
    '''Return the number of mixed self-complementary circulants of order p^2
       (neither undirected nor tournaments), checking the subtraction form
       against the product and difference-of-squares forms.

       @param p : int
           an odd prime'''

    sd, su, t = (prime_squared_enumerator(p, k).total for k in (SD, SU, T))
    mixed = sd - su - t

    sd_p, su_p, t_p = (prime_enumerator(p, k).total for k in (SD, SU, T))
    product = 2 * su_p * t_p
    squares = sd_p ** 2 - su_p ** 2 - t_p ** 2

    if not mixed == product == squares:
        raise ConsistencyError('mixed sd at %d^2: %d (subtraction), %d (product), %d (squares)'
            % (p, mixed, product, squares))

    return mixed

def non_ci_counts(p):
    '''Return (D_sd, D_su, D_t), the numbers of non-CI self-complementary
       circulants of order p^2, which are the squares of the order-p counts.

       @param p : int
           an odd prime'''

    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p) or p == 2:
        raise DomainError('non-CI counts need an odd prime, got %r' % (p,))

    return tuple(prime_enumerator(p, k).total ** 2 for k in (SD, SU, T))
