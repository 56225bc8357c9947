'''Formal identities between the cycle indices I_m and I_2m, with m = 2^k m'
   and m' odd. Square roots are avoided by renaming x_r to u_r^2 on both
   sides, which doubles every exponent that is not under a square root.'''

from circulant.core.algebra import cycle_index, to_sym
from circulant.core.numtheory import odd_part_decomposition

def _even_only(r):
    return r // 2 if r % 2 == 0 else None

def _odd_only(r):
    return r if r % 2 else None

def _evens(r):
    return r if r % 2 == 0 else None

def index_doubling(m):
    '''2 I_2m(x) = I_m(x^2) + I_m'(x_(k+1)), where x_(k+1) is the sequence
       x_(2^(k+1)), x_(2*2^(k+1)), ...'''

    decomposition = odd_part_decomposition(m)
    shift = 2 ** (decomposition.two_exponent + 1)

    lhs = to_sym(cycle_index(2 * m)).scale(2)
    rhs = to_sym(cycle_index(m), exponent_transform=lambda r: 2) \
        + to_sym(cycle_index(decomposition.odd_part), index_transform=lambda r: shift * r)

    return lhs, rhs

def interleaved_zeros(m):
    '''2 I_2m(0, x_1, 0, x_2, ...) = I_m(x) + I_m(0, x_2, 0, x_4, ...)'''

    lhs = to_sym(cycle_index(2 * m), index_transform=_even_only).scale(2)
    rhs = to_sym(cycle_index(m)) + to_sym(cycle_index(m), index_transform=_evens)

    return lhs, rhs

def square_roots(m):
    '''I_m(x) = I_2m(sqrt(x_1), x_1, sqrt(x_3), x_2, ...), with x_r = u_r^2'''

    lhs = to_sym(cycle_index(m), exponent_transform=lambda r: 2)
    rhs = to_sym(cycle_index(2 * m),
                 index_transform=lambda r: r if r % 2 else r // 2,
                 exponent_transform=lambda r: 1 if r % 2 else 2)

    return lhs, rhs

def alternating_roots(m):
    '''I_2m(0, x_1, 0, x_2, ...) = I_2m(sqrt(x_1), 0, sqrt(x_3), 0, ...)
       + I_m(0, x_2, 0, x_4, ...), with x_r = u_r^2'''

    lhs = to_sym(cycle_index(2 * m), index_transform=_even_only, exponent_transform=lambda r: 2)
    rhs = to_sym(cycle_index(2 * m), index_transform=_odd_only, exponent_transform=lambda r: 1) \
        + to_sym(cycle_index(m), index_transform=_evens, exponent_transform=lambda r: 2)

    return lhs, rhs
