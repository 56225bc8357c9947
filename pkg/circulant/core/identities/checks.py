'''Both sides of every numbered identity.

   A checker takes the instantiation parameter and a count function
   (order, class) -> CountResult and returns (lhs, rhs): two ints, two
   UniPolys or two equally long tuples of ints. Each side is computed from
   its own counts; nothing computed for one side is reused on the other.'''

from circulant.core.algebra import GAUSSIAN_UNIT, UniPoly, eval_poly
from circulant.core.enumerators import formal_undirected, non_ci_counts
from circulant.core.errors import UnsupportedOrder
from circulant.core.numtheory import odd_part_decomposition, prime_divisors

ONE_PLUS_Z = UniPoly((1, 1))

def _poly(count, n, klass):
    return count(n, klass).by_valency

def _total(count, n, klass):
    return count(n, klass).total

def _half(p):
    return (p + 1) // 2

def _formal(p):
    '''Return (c-bar_u(2p~+1, z), k) for p - 1 = 2^(k+1) p~.'''

    decomposition = odd_part_decomposition(p - 1)
    k = decomposition.two_exponent - 1
    return formal_undirected(2 * decomposition.odd_part + 1).by_valency, k

def _graded(poly, residue, modulus):
    return UniPoly(c if i % modulus == residue else 0 for i, c in enumerate(poly))

# known identities

def undirected_by_doubled_directed(p, count):
    return _poly(count, p, 'u'), _poly(count, _half(p), 'd').stretch(2)

def undirected_total_by_directed(p, count):
    return _total(count, p, 'u'), _total(count, _half(p), 'd')

def su_by_sd(p, count):
    return _total(count, p, 'su'), _total(count, _half(p), 'sd')

def oriented_doubling(p, count):
    return 2 * _poly(count, p, 'o'), _poly(count, p + 1, 'o') + 1

def oriented_total_doubling(p, count):
    return 2 * _total(count, p, 'o'), _total(count, p + 1, 'o') + 1

def no_undirected_sc(n, count):
    return _total(count, n, 'su'), 0

def sd_are_tournaments(n, count):
    return _total(count, n, 'sd'), _total(count, n, 't')

def su_by_tournaments(p, count):
    return _total(count, p, 'su'), _total(count, _half(p), 't')

def sd_split(n, count):
    return _total(count, n, 'sd'), _total(count, n, 't') + _total(count, n, 'su')

def odd_valency_twins(n, count):
    poly = _poly(count, n, 'u')
    odd = UniPoly(poly.coefficient(2 * r + 1) for r in range(n // 2))
    even = UniPoly(poly.coefficient(2 * r) for r in range(n // 2))
    return odd, even

# new identities at prime order

def sd_doubled(p, count):
    return 2 * _total(count, p, 'sd'), _total(count, p, 'u') + _total(count, p, 'su')

def undirected_doubled_sd(p, count):
    u = _total(count, p, 'u')
    return (u, u), (2 * _total(count, p, 'sd'), 2 * _total(count, p, 't'))

def undirected_by_tournaments(p, count):
    u = _total(count, p, 'u')
    t = _total(count, p, 't')
    return (u, u), (_total(count, p, 'sd') + t, _total(count, p, 'su') + 2 * t)

def undirected_quadrupled(p, count):
    formal, _ = _formal(p)
    return 4 * _total(count, p, 'u'), _total(count, p + 1, 'u') + 2 * formal.evaluate(1)

def undirected_series_doubled(p, count):
    formal, k = _formal(p)
    lhs = 2 * ONE_PLUS_Z * _poly(count, p, 'u')
    return lhs, _poly(count, p + 1, 'u') + ONE_PLUS_Z * formal.stretch(2 ** k)

def undirected_semi_odd_doubled(p, count):
    return 2 * _graded(_poly(count, p, 'u'), 2, 4), _graded(_poly(count, p + 1, 'u'), 2, 4)

def directed_quadrupled(p, count):
    formal, _ = _formal(p)
    return 4 * _total(count, p, 'd'), _total(count, p + 1, 'd') + 2 * formal.evaluate(1)

def directed_series_doubled(p, count):
    formal, k = _formal(p)
    lhs = 2 * ONE_PLUS_Z * _poly(count, p, 'd')
    return lhs, _poly(count, p + 1, 'd') + ONE_PLUS_Z * formal.stretch(2 ** k)

def quadruple_difference(p, count):
    lhs = 4 * _total(count, p, 'd') - _total(count, p + 1, 'd')
    return lhs, 4 * _total(count, p, 'u') - _total(count, p + 1, 'u')

def _not_undirected(count, n):
    return _poly(count, n, 'd') - _poly(count, n, 'u')

def not_undirected_quadrupled(p, count):
    return 4 * _not_undirected(count, p).evaluate(1), _not_undirected(count, p + 1).evaluate(1)

def not_undirected_series(p, count):
    return 2 * ONE_PLUS_Z * _not_undirected(count, p), _not_undirected(count, p + 1)

def not_undirected_by_valency(p, count):
    lower = _not_undirected(count, p)
    lhs = UniPoly(2 * (lower.coefficient(r) + (lower.coefficient(r - 1) if r else 0))
                  for r in range(p + 1))
    return lhs, _not_undirected(count, p + 1)

# prime-squared order, parameterised by p

def non_ci_by_squares(p, count, non_ci=None):
    if non_ci is None:
        raise UnsupportedOrder(p * p, 'sd', 'non-CI counts are only observable with the oracle')
    return tuple(non_ci(p * p, k) for k in ('sd', 'su', 't')), non_ci_counts(p)

def _mixed(p, count):
    n = p * p
    return _total(count, n, 'sd') - _total(count, n, 'su') - _total(count, n, 't')

def mixed_by_product(p, count):
    return _mixed(p, count), 2 * _total(count, p, 'su') * _total(count, p, 't')

def mixed_by_non_ci(p, count, non_ci=None):
    if non_ci is not None:
        d_sd, d_su, d_t = (non_ci(p * p, k) for k in ('sd', 'su', 't'))
    else:
        d_sd, d_su, d_t = non_ci_counts(p)
    return _mixed(p, count), d_sd - d_su - d_t

def mixed_by_squares(p, count):
    rhs = sum(s * _total(count, p, k) ** 2 for s, k in ((1, 'sd'), (-1, 'su'), (-1, 't')))
    return _mixed(p, count), rhs

def sd_squared_order(p, count):
    n = p * p
    rhs = _total(count, n, 'su') + _total(count, n, 't') \
        + 2 * _total(count, p, 'su') * _total(count, p, 't')
    return _total(count, n, 'sd'), rhs

# alternating sums

def directed_alternating(n, count):
    return eval_poly(_poly(count, n, 'd'), -1), _total(count, n, 'sd')

def undirected_alternating(n, count):
    return eval_poly(_poly(count, n, 'u'), GAUSSIAN_UNIT), _total(count, n, 'su')

def oriented_expected(n):
    '''The value of c_o(n, -1) predicted from the prime divisors of n.'''

    if n % 2:
        return 0 if any(q % 4 == 3 for q in prime_divisors(n)) else 1
    return 1 if n % 4 == 2 else 0

def oriented_alternating(n, count):
    return eval_poly(_poly(count, n, 'o'), -1), oriented_expected(n)

def alternating_prime(p, count):
    lhs = 2 * eval_poly(_poly(count, p, 'd'), -1)
    undirected = _poly(count, p, 'u')
    return lhs, undirected.evaluate(1) + eval_poly(undirected, GAUSSIAN_UNIT)

def directed_parity_split(n, count):
    poly = _poly(count, n, 'd')
    lhs = (2 * sum(list(poly)[0::2]), 2 * sum(list(poly)[1::2]))
    d, sd = _total(count, n, 'd'), _total(count, n, 'sd')
    return lhs, (d + sd, d - sd)

def undirected_parity_split(n, count):
    poly = _poly(count, n, 'u')
    lhs = (2 * sum(list(poly)[0::4]), 2 * sum(list(poly)[2::4]))
    u, su = _total(count, n, 'u'), _total(count, n, 'su')
    return lhs, (u + su, u - su)

def even_undirected_by_sd(p, count):
    return sum(list(_poly(count, p, 'u'))[0::4]), _total(count, p, 'sd')
