'''Brute-force census of circulants up to isomorphism.

   Candidate connection sets are first merged into multiplier orbits
   (S -> mS is always an isomorphism), then one representative per orbit is
   canonicalized and the orbits are merged by certificate.'''

import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, product
from math import comb

from circulant.core.algebra import UniPoly
from circulant.core.config import DEFAULTS
from circulant.core.enumerators.classes import \
    CirculantClass, CountResult, D, O, SD, SU, T, U
from circulant.core.errors import \
    ConsistencyError, DomainError, ResourceError, UnsupportedOrder
from circulant.core.numtheory import units
from circulant.core.oracle.canonical import canonical_form
from circulant.core.oracle.connection import \
    ConnectionSet, iter_bits, multiply_mask

log = logging.getLogger(__name__)

# no amount of patience makes more candidates sensible
CANDIDATE_CEILING = 2 ** 24

CHUNK = 256

ClassRecord = namedtuple('ClassRecord', 'certificate valency representative size orbits')
SelfComplementarySplit = namedtuple('SelfComplementarySplit', 'undirected tournament mixed')
NonCayley = namedtuple('NonCayley', 'classes circulants')

def _pairs(n):
    return list((s, n - s) for s in range(1, (n - 1) // 2 + 1))

def _middle(n):
    return n > 1 and n % 2 == 0

def candidate_count(n, klass):
    '''Return the number of connection sets the census visits.

       @param n : int
           the order
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)
    pairs = (n - 1) // 2
    odd = n % 2 == 1

    if klass is D:
        return 2 ** (n - 1)
    if klass is U:
        return 2 ** (pairs + _middle(n))
    if klass is O:
        return 3 ** pairs
    if klass is T:
        return 2 ** pairs if odd else 0
    if klass is SD:
        return comb(n - 1, pairs) if odd else 0
    return comb(pairs, pairs // 2) if odd and pairs % 2 == 0 else 0

def candidate_masks(n, klass):
    '''Yield the masks of the connection sets that may belong to the class.
       For sd and su these are the sets of valency (n-1)/2, undirected for su;
       self-complementarity is decided later.

       @param n : int
           the order
       @param klass : CirculantClass|str
           the class of circulants'''

    klass = CirculantClass.parse(klass)
    pairs = _pairs(n)
    pair_masks = list((1 << s) | (1 << t) for s, t in pairs)
    odd = n % 2 == 1

    if klass is D:
        for x in range(2 ** (n - 1)):
            yield x << 1

    elif klass is U:
        choices = list((0, m) for m in pair_masks)
        if _middle(n):
            choices.append((0, 1 << (n // 2)))
        for chosen in product(*choices):
            yield sum(chosen)

    elif klass is O:
        for chosen in product(*((0, 1 << s, 1 << t) for s, t in pairs)):
            yield sum(chosen)

    elif klass is T:
        if odd:
            for chosen in product(*((1 << s, 1 << t) for s, t in pairs)):
                yield sum(chosen)

    elif klass is SD:
        if odd:
            for chosen in combinations(range(1, n), len(pairs)):
                yield sum(1 << s for s in chosen)

    elif odd and len(pairs) % 2 == 0:
        for chosen in combinations(pair_masks, len(pairs) // 2):
            yield sum(chosen)

def _orbits(n, masks):
    multipliers = list(m for m in units(n) if m != 1)
    seen = set()

    for mask in masks:
        if mask in seen:
            continue
        orbit = set([mask])
        for m in multipliers:
            orbit.add(multiply_mask(mask, m, n))
        seen.update(orbit)
        yield orbit

def _certify(n, masks):
    return list(canonical_form(ConnectionSet.from_mask(n, mask)).certificate for mask in masks)

def _certificates(n, masks, workers):
    if workers <= 1 or len(masks) <= CHUNK:
        return _certify(n, masks)

    chunks = list(masks[i:i + CHUNK] for i in range(0, len(masks), CHUNK))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        results = executor.map(_certify, [n] * len(chunks), chunks)
        return list(certificate for chunk in results for certificate in chunk)

@lru_cache(maxsize=256)
def census(n, klass, workers=1):
    '''Return the isomorphism classes of the class at order n as a sorted
       tuple of ClassRecord. No bounds are checked here.

       @param n : int
           the order
       @param klass : CirculantClass
           the class of circulants
       @param workers : optional, int
           the number of processes canonicalizing orbit representatives'''

    orbits = list(_orbits(n, candidate_masks(n, klass)))
    representatives = list(min(orbit) for orbit in orbits)
    certificates = _certificates(n, representatives, workers)

    log.debug('order %d class %s: %d orbits canonicalized', n, klass, len(orbits))

    merged = dict()
    for orbit, mask, certificate in zip(orbits, representatives, certificates):
        lexmin = min(tuple(iter_bits(m)) for m in orbit)
        record = merged.get(certificate)
        if record is None:
            merged[certificate] = [mask.bit_count(), lexmin, len(orbit), 1, mask]
        else:
            record[1] = min(record[1], lexmin)
            record[2] += len(orbit)
            record[3] += 1

    records = list()
    for certificate, (valency, lexmin, size, count, mask) in merged.items():
        representative = ConnectionSet.from_mask(n, mask)
        if not representative.satisfies(klass):
            raise ConsistencyError('order %d class %s: candidate %r is outside the class'
                % (n, klass, representative))

        if klass in (SD, SU):
            if canonical_form(representative.complement()).certificate != certificate:
                continue
        records.append(ClassRecord(certificate, valency, lexmin, size, count))

    records.sort(key=lambda r: (r.valency, r.representative))
    return tuple(records)

def checked_census(n, klass, allow_slow, config):
    '''Check the bounds and return (class, census records).'''

    klass = CirculantClass.parse(klass)
    config = config or DEFAULTS

    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError('order must be a positive integer, got %r' % (n,))

    if n > config['slow_oracle_bound']:
        raise UnsupportedOrder(n, klass, 'beyond the oracle range (%d)' % config['slow_oracle_bound'])

    if n > config['oracle_bound'] and not allow_slow:
        raise UnsupportedOrder(n, klass, 'beyond the default oracle range (%d) without allow_slow'
            % config['oracle_bound'])

    candidates = candidate_count(n, klass)
    if candidates > CANDIDATE_CEILING or (candidates > config['oracle_candidates'] and not allow_slow):
        raise ResourceError('order %d class %s: %d connection sets to visit' % (n, klass, candidates))

    return klass, census(n, klass, config['workers'])

def enumerate_class(n, klass, allow_slow=False, config=None):
    '''Count the circulants of the class at order n by brute force.

       @param n : int
           the order
       @param klass : CirculantClass|str
           the class of circulants
       @param allow_slow : optional, bool
           lift the default order and candidate bounds
       @param config : optional, dict
           the settings from circulant.core.config.load_config'''

    klass, records = checked_census(n, klass, allow_slow, config)

    by_valency = None
    if klass.has_series:
        coefficients = [0] * n
        for record in records:
            coefficients[record.valency] += 1
        by_valency = UniPoly(coefficients)

    return CountResult(n, klass, len(records), by_valency, 'oracle')

def _format_members(members):
    return '{%s}' % ','.join(str(s) for s in members)

def representatives(n, klass, allow_slow=False, config=None):
    '''Return one line per isomorphism class, n;valency;lex-min connection
       set;class size, sorted by valency then connection set.'''

    _, records = checked_census(n, klass, allow_slow, config)

    return list('%d;%d;%s;%d' % (n, r.valency, _format_members(r.representative), r.size)
                for r in records)

def classify_self_complementary(n, allow_slow=False, config=None):
    '''Split the self-complementary circulants of odd order n into the
       undirected ones, the tournaments and the mixed rest.

       @param n : int
           an odd order'''

    if n % 2 == 0:
        raise DomainError('self-complementary circulants need an odd order, got %d' % n)

    _, records = checked_census(n, SD, allow_slow, config)

    undirected = tournament = mixed = 0
    for record in records:
        s = ConnectionSet(n, record.representative)
        if s.is_undirected():
            undirected += 1
        elif s.is_tournament():
            tournament += 1
        else:
            mixed += 1

    return SelfComplementarySplit(undirected, tournament, mixed)

def non_ci_count(n, klass, allow_slow=False, config=None):
    '''Return NonCayley(classes, circulants): the isomorphism classes that
       hold more than one multiplier orbit, and the connection sets in them.'''

    _, records = checked_census(n, klass, allow_slow, config)
    split = list(r for r in records if r.orbits > 1)

    return NonCayley(len(split), sum(r.size for r in split))
