import logging

from circulant.core.config import DEFAULTS
from circulant.core.enumerators.classes import CirculantClass, D, O, SD, SU, T, U
from circulant.core.errors import ConsistencyError, DomainError, UnsupportedOrder
from circulant.core.numtheory import units
from circulant.core.oracle.census import checked_census

log = logging.getLogger(__name__)

def _cycle_shape(n, m):
    '''Return (a, b) for the multiplier m on Z_n minus {0}: a cycles closed
       under negation and b pairs of cycles swapped by it.'''

    seen = set()
    closed = swapped = 0

    for start in range(1, n):
        if start in seen:
            continue
        cycle = set()
        x = start
        while x not in cycle:
            cycle.add(x)
            x = x * m % n
        seen.update(cycle)

        if (n - start) % n in cycle:
            closed += 1
        else:
            swapped += 1

    return closed, swapped // 2

def _fixed(klass, closed, pairs):
    if klass is D:
        return 2 ** (closed + 2 * pairs)
    if klass is U:
        return 2 ** (closed + pairs)
    if klass is O:
        return 3 ** pairs
    return 0 if closed else 2 ** pairs

def cayley_classes(n, klass, allow_slow=False, config=None):
    '''Count the orbits of the class's connection sets under the multipliers
       S -> mS. Burnside's lemma serves d, u, o and t up to the slow oracle
       bound; sd and su merge orbits inside the census.

       @param n : int
           the order
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)
    config = config or DEFAULTS

    if klass in (SD, SU):
        _, records = checked_census(n, klass, allow_slow, config)
        return sum(r.orbits for r in records)

    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError('order must be a positive integer, got %r' % (n,))

    if n > config['slow_oracle_bound']:
        raise UnsupportedOrder(n, klass, 'beyond the oracle range (%d)' % config['slow_oracle_bound'])

    multipliers = units(n)
    fixed = sum(_fixed(klass, *_cycle_shape(n, m)) for m in multipliers)

    orbits, remainder = divmod(fixed, len(multipliers))
    if remainder:
        raise ConsistencyError('Burnside sum %d at order %d is not divisible by %d'
            % (fixed, n, len(multipliers)))

    log.debug('order %d class %s: %d multiplier orbits', n, klass, orbits)
    return orbits
