'''The registry of identities: for every key the formula, the hypotheses on
   the order, the classes involved and the checker computing both sides.

   Numbered keys 5.x are instantiated at the prime p (the order is p^2).
   Lemma keys L2.x are instantiated at m, the other keys at the order they
   name first.'''

from collections import OrderedDict

from circulant.core.identities import checks, lemmas
from circulant.core.numtheory import \
    is_prime, is_square_free, prime_divisors, prime_power

ANALYTIC = 'analytic'
ALGEBRAIC = 'algebraic'
DERIVED = 'derived'
EXHAUSTIVE = 'exhaustive search'
FORMAL = 'formal'

class Identity(object):
    '''One registry entry.'''

    def __init__(self, key, formula, orders, restrictions, types, proof,
                 checker, applicable, conjectural=None, graded=False, non_ci=False, lemma=False):
        self.key = key
        self.formula = formula
        self.orders = orders
        self.restrictions = restrictions
        self.types = types
        self.proof = proof
        self.checker = checker
        self.applicable = applicable
        self.conjectural = conjectural or (lambda n: False)
        # compares valency series, so a single valency can be asked for
        self.graded = graded
        # the left side needs non-CI counts, observable with the oracle only
        self.non_ci = non_ci
        self.lemma = lemma

    def __repr__(self):
        return 'Identity(%r)' % self.key

def _int(n):
    return isinstance(n, int) and not isinstance(n, bool)

def odd_prime(n):
    return _int(n) and n > 2 and is_prime(n)

def nearly_doubled(p):
    '''p and q = (p+1)/2 are both prime.'''

    return odd_prime(p) and is_prime((p + 1) // 2)

def nearly_doubled_odd(p):
    '''p and q = (p+1)/2 are both odd primes.'''

    return nearly_doubled(p) and p >= 5

def _positive(n):
    return _int(n) and n >= 1

def _odd(n):
    return _positive(n) and n % 2 == 1

def _three_mod_four_divisor(n):
    return _positive(n) and any(q % 4 == 3 for q in prime_divisors(n))

def _all_three_mod_four(n):
    return _odd(n) and n > 1 and all(q % 4 == 3 for q in prime_divisors(n))

def _prime_square(n):
    power = prime_power(n) if _positive(n) and n > 1 else None
    return power is not None and power[1] == 2

def _proven_odd(n):
    return is_square_free(n) or _prime_square(n)

def _beyond_powers_and_square_free(n):
    return prime_power(n) is None and not is_square_free(n)

def oriented_applicable(n):
    '''c_o(n, -1) is predicted for odd n, n = 2n' with n' odd, and n = 4n'
       with n' square-free, except n = 8n' with n' > 1.'''

    if not _positive(n):
        return False
    if n % 2 or n % 4 == 2:
        return True
    return is_square_free(n // 4) and not (n % 8 == 0 and n > 8)

def _entries():
    yield Identity('3.1', 'c_u(p,z) = c_d(q,z^2)', 'p, q', 'p+1 = 2q', 'u, d', ANALYTIC,
                   checks.undirected_by_doubled_directed, nearly_doubled, graded=True)
    yield Identity("3.1'", 'C_u(p) = C_d(q)', 'p, q', 'p+1 = 2q', 'u, d', DERIVED,
                   checks.undirected_total_by_directed, nearly_doubled)
    yield Identity('3.2', 'C_su(p) = C_sd(q)', 'p, q', 'p+1 = 2q', 'su, sd', ANALYTIC,
                   checks.su_by_sd, nearly_doubled)
    yield Identity('3.3', '2c_o(p,z) = c_o(p+1,z) + 1', 'p, p+1', 'p+1 = 2q, p > 3', 'o', ANALYTIC,
                   checks.oriented_doubling, nearly_doubled_odd, graded=True)
    yield Identity("3.3'", '2C_o(p) = C_o(p+1) + 1', 'p, p+1', 'p+1 = 2q, p > 3', 'o', DERIVED,
                   checks.oriented_total_doubling, nearly_doubled_odd)
    yield Identity('3.4', 'C_su(n) = 0', 'n', 'some p | n, p = 3 (mod 4)', 'su', ALGEBRAIC,
                   checks.no_undirected_sc, _three_mod_four_divisor)
    yield Identity('3.5', 'C_sd(n) = C_t(n)', 'n', 'all p | n, p = 3 (mod 4)', 't, sd', ANALYTIC,
                   checks.sd_are_tournaments, _all_three_mod_four, _beyond_powers_and_square_free)
    yield Identity('3.6', 'C_su(p) = C_t(q)', 'p, q', 'p+1 = 2q = 6 (mod 8)', 'su, t', DERIVED,
                   checks.su_by_tournaments, lambda p: nearly_doubled(p) and p % 8 == 5)
    yield Identity('3.7', 'C_sd(n) = C_t(n) + C_su(n)', 'n', 'n = p, or all p | n, p = 3 (mod 4)',
                   'su, t, sd', ALGEBRAIC, checks.sd_split,
                   lambda n: odd_prime(n) or _all_three_mod_four(n), _beyond_powers_and_square_free)
    yield Identity('3.8', 'C_u(2n,2r+1) = C_u(2n,2r)', '2n', 'n square-free', 'u', EXHAUSTIVE,
                   checks.odd_valency_twins, lambda n: _positive(n) and n % 2 == 0,
                   lambda n: not is_square_free(n // 2), graded=True)
    yield Identity('4.1', '2C_sd(p) = C_u(p) + C_su(p)', 'p', '-', 'u, su, sd', ANALYTIC,
                   checks.sd_doubled, odd_prime)
    yield Identity("4.1'", 'C_u(p) = 2C_sd(p) = 2C_t(p)', 'p', 'p = 3 (mod 4)', 'u, sd', DERIVED,
                   checks.undirected_doubled_sd, lambda p: odd_prime(p) and p % 4 == 3)
    yield Identity("4.1''", 'C_u(p) = C_sd(p) + C_t(p) = C_su(p) + 2C_t(p)', 'p', '-', 'u, su, t',
                   DERIVED, checks.undirected_by_tournaments, odd_prime)
    yield Identity('4.2', '4C_u(p) = C_u(p+1) + 2C~_u(2p~+1)', 'p, p+1', 'p+1 = 2q', 'u', DERIVED,
                   checks.undirected_quadrupled, nearly_doubled_odd)
    yield Identity('4.3', '2(1+z)c_u(p,z) = c_u(p+1,z) + (1+z)c~_u(2p~+1,z^(2^k))', 'p, p+1',
                   'p+1 = 2q', 'u', ANALYTIC, checks.undirected_series_doubled, nearly_doubled_odd,
                   graded=True)
    yield Identity("4.3'", '2C_u(p,4r+2) = C_u(p+1,4r+2)', 'p, p+1', 'p+1 = 2q', 'u', DERIVED,
                   checks.undirected_semi_odd_doubled, nearly_doubled_odd, graded=True)
    yield Identity('4.4', '4C_d(p) = C_d(p+1) + 2C~_u(2p~+1)', 'p, p+1', 'p+1 = 2q', 'u, d', DERIVED,
                   checks.directed_quadrupled, nearly_doubled_odd)
    yield Identity('4.5', '2(1+z)c_d(p,z) = c_d(p+1,z) + (1+z)c~_u(2p~+1,z^(2^k))', 'p, p+1',
                   'p+1 = 2q', 'u, d', ANALYTIC, checks.directed_series_doubled, nearly_doubled_odd,
                   graded=True)
    yield Identity('4.6', '4C_d(p) - C_d(p+1) = 4C_u(p) - C_u(p+1)', 'p, p+1', 'p+1 = 2q', 'u, d',
                   DERIVED, checks.quadruple_difference, nearly_doubled_odd)
    yield Identity("4.6'", '4C_d\\u(p) = C_d\\u(p+1)', 'p, p+1', 'p+1 = 2q', 'd\\u', DERIVED,
                   checks.not_undirected_quadrupled, nearly_doubled_odd)
    yield Identity('4.7', '2(1+z)c_d\\u(p,z) = c_d\\u(p+1,z)', 'p, p+1', 'p+1 = 2q', 'd\\u', DERIVED,
                   checks.not_undirected_series, nearly_doubled_odd, graded=True)
    yield Identity("4.7'", '2(C_d\\u(p,r) + C_d\\u(p,r-1)) = C_d\\u(p+1,r)', 'p, p+1', 'p+1 = 2q',
                   'd\\u', DERIVED, checks.not_undirected_by_valency, nearly_doubled_odd, graded=True)
    yield Identity('5.2', 'D_i(p^2) = C_i(p)^2, i = sd, su, t', 'p, p^2', '-', 'su, t, sd', ALGEBRAIC,
                   checks.non_ci_by_squares, odd_prime, non_ci=True)
    yield Identity('5.3', 'C_sd^mixed(p^2) = 2C_su(p)C_t(p)', 'p, p^2', '-', 'su, t, sd', ALGEBRAIC,
                   checks.mixed_by_product, odd_prime)
    yield Identity('5.4', 'C_sd^mixed(p^2) = D_sd(p^2) - D_su(p^2) - D_t(p^2)', 'p^2', '-',
                   'su, t, sd', ALGEBRAIC, checks.mixed_by_non_ci, odd_prime, non_ci=True)
    yield Identity('5.5', 'C_sd(p^2) - C_su(p^2) - C_t(p^2) = C_sd(p)^2 - C_su(p)^2 - C_t(p)^2',
                   'p, p^2', '-', 'su, t, sd', DERIVED, checks.mixed_by_squares, odd_prime)
    yield Identity('5.6', 'C_sd(p^2) = C_su(p^2) + C_t(p^2) + 2C_su(p)C_t(p)', 'p, p^2', '-',
                   'su, t, sd', DERIVED, checks.sd_squared_order, odd_prime)
    yield Identity('6.1', 'c_d(n,-1) = C_sd(n)', 'n', 'p^2 or square-free', 'd, sd', ANALYTIC,
                   checks.directed_alternating, _positive,
                   lambda n: n % 2 == 1 and not _proven_odd(n))
    yield Identity('6.2', 'c_u(n,i) = C_su(n)', 'n', 'p^2 or square-free', 'u, su', ANALYTIC,
                   checks.undirected_alternating, _odd,
                   lambda n: n % 4 != 3 and not _proven_odd(n))
    yield Identity('6.3', 'c_o(n,-1) = 0 or 1 by the prime divisors of n', 'n',
                   'p^2 or square-free, 8n\' with n\' > 1 excluded', 'o', ANALYTIC,
                   checks.oriented_alternating, oriented_applicable,
                   lambda n: not is_square_free(n) and not (n % 2 == 1 and _prime_square(n)))
    yield Identity('6.4', '2c_d(p,-1) = c_u(p,1) + c_u(p,i)', 'p', '-', 'u, d', DERIVED,
                   checks.alternating_prime, odd_prime)
    yield Identity('6.5', '2C^e_d(n) = C_d(n) + C_sd(n), 2C^o_d(n) = C_d(n) - C_sd(n)', 'n',
                   'p^2 or square-free', 'd, sd', DERIVED, checks.directed_parity_split, _positive,
                   lambda n: n % 2 == 1 and not _proven_odd(n))
    yield Identity('6.6', '2C^e_u(n) = C_u(n) + C_su(n), 2C^o_u(n) = C_u(n) - C_su(n)', 'n',
                   'p^2, square-free or n = 3 (mod 4)', 'u, su', DERIVED,
                   checks.undirected_parity_split, _odd,
                   lambda n: n % 4 != 3 and not _proven_odd(n))
    yield Identity('6.7', 'C^e_u(p) = C_sd(p)', 'p', '-', 'u^e, sd', DERIVED,
                   checks.even_undirected_by_sd, odd_prime)
    yield Identity('L2.1', "2I_2m(x) = I_m(x^2) + I_m'(x_(k+1))", 'm', '-', '-', FORMAL,
                   lemmas.index_doubling, _positive, lemma=True)
    yield Identity('L2.4', '2I_2m(0,x_1,0,x_2,...) = I_m(x) + I_m(0,x_2,0,x_4,...)', 'm', '-', '-',
                   FORMAL, lemmas.interleaved_zeros, _positive, lemma=True)
    yield Identity('L2.6', 'I_m(x) = I_2m(sqrt x_1,x_1,sqrt x_3,x_2,...)', 'm', '-', '-', FORMAL,
                   lemmas.square_roots, _positive, lemma=True)
    yield Identity('L2.7', 'I_2m(0,x_1,0,x_2,...) = I_2m(sqrt x_1,0,sqrt x_3,0,...) + '
                   'I_m(0,x_2,0,x_4,...)', 'm', '-', '-', FORMAL,
                   lemmas.alternating_roots, _positive, lemma=True)

IDENTITIES = OrderedDict((identity.key, identity) for identity in _entries())

KEYS = tuple(IDENTITIES)
LEMMA_KEYS = tuple(key for key, identity in IDENTITIES.items() if identity.lemma)
