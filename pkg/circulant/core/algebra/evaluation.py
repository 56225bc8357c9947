from circulant.core.algebra.unipoly import UniPoly
from circulant.core.errors import DomainError

class _GaussianUnit(object):
    '''The marker for evaluating an even polynomial at z = sqrt(-1).'''

    def __repr__(self):
        return 'GAUSSIAN_UNIT'

    def __str__(self):
        return 'i'

GAUSSIAN_UNIT = _GaussianUnit()

def eval_poly(p, at):
    '''Evaluate an integer polynomial at a signed integer, or at the gaussian
       unit (z^2 := -1). The gaussian evaluation is only defined for even
       polynomials, where it is the sum of (-1)^(r/2) * c_r over even r.

       @param p : UniPoly
           the polynomial
       @param at : int|GAUSSIAN_UNIT
           the evaluation point'''

    if not isinstance(p, UniPoly):
        raise DomainError('%r is not a UniPoly' % (p,))

    if at is GAUSSIAN_UNIT:
        if not p.is_even():
            raise DomainError('gaussian evaluation needs an even polynomial, %r has odd terms' % (p,))

        return sum(c if r % 4 == 0 else -c for r, c in enumerate(p) if r % 2 == 0)

    if isinstance(at, bool) or not isinstance(at, int):
        raise DomainError('cannot evaluate at %r' % (at,))

    return p.evaluate(at)
