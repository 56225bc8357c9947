import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from datetime import timedelta
from functools import partial

from circulant.core import serializers
from circulant.core.algebra import SymPoly, UniPoly
from circulant.core.enumerators import count
from circulant.core.errors import DomainError, ResourceError, UnsupportedOrder
from circulant.core.identities.registry import IDENTITIES, KEYS

log = logging.getLogger(__name__)

HOLDS = 'holds'
FAILS = 'fails'
NOT_APPLICABLE = 'not-applicable'
UNSUPPORTED = 'unsupported'

STATUSES = (HOLDS, FAILS, NOT_APPLICABLE, UNSUPPORTED)

def _render(value):
    if value is None:
        return None
    if isinstance(value, UniPoly):
        return serializers.unipoly(value)
    if isinstance(value, SymPoly):
        return serializers.sympoly(value)
    if isinstance(value, (tuple, list)):
        return list(_render(v) for v in value)
    return serializers.decimal(value)

class IdentityReport(object):
    '''The verdict on one instantiation of an identity.'''

    def __init__(self, key, order, status, lhs=None, rhs=None, valency=None,
                 conjectural=False, elapsed=None, detail=None):
        '''Create the report.

           @param key : str
               the identity key
           @param order : int
               the instantiation parameter
           @param status : str
               holds, fails, not-applicable or unsupported
           @param lhs : optional, int|UniPoly|SymPoly|tuple
               the left side
           @param rhs : optional, int|UniPoly|SymPoly|tuple
               the right side
           @param valency : optional, int
               the single valency compared, if any
           @param conjectural : optional, bool
               the instantiation lies outside the proven order classes
           @param elapsed : optional, datetime.timedelta
               the time the check took
           @param detail : optional, str
               why the check did not run'''

        if status not in STATUSES:
            raise DomainError('unknown status %r' % (status,))

        self.key = key
        self.order = order
        self.status = status
        self.lhs = lhs
        self.rhs = rhs
        self.valency = valency
        self.conjectural = conjectural
        self.elapsed = elapsed or timedelta(0)
        self.detail = detail

    def __repr__(self):
        return 'IdentityReport(%r, %d, %s)' % (self.key, self.order, self.status)

    @property
    def identity(self):
        return IDENTITIES[self.key]

    def to_json(self):
        return {
            'key' : self.key,
            'order' : self.order,
            'valency' : self.valency,
            'status' : self.status,
            'conjectural' : self.conjectural,
            'lhs' : _render(self.lhs),
            'rhs' : _render(self.rhs),
            'elapsed' : self.elapsed.total_seconds(),
            'detail' : self.detail,
        }

def _identity(key):
    try:
        return IDENTITIES[key]
    except KeyError:
        raise DomainError('unknown identity %r' % (key,))

def applicable(key, n):
    '''Return True when the hypotheses of the identity hold at n.

       @param key : str
           the identity key
       @param n : int
           the instantiation parameter'''

    return bool(_identity(key).applicable(n))

def conjectural(key, n):
    '''Return True when the identity is applicable at n but only conjectured
       there.

       @param key : str
           the identity key
       @param n : int
           the instantiation parameter'''

    return applicable(key, n) and bool(_identity(key).conjectural(n))

def _sides(identity, n, oracle, allow_slow, config):
    if identity.lemma:
        return identity.checker(n)

    source = partial(count, oracle=oracle, allow_slow=allow_slow, config=config)
    if not identity.non_ci:
        return identity.checker(n, source)

    non_ci = None
    if oracle:
        from circulant.core.oracle import non_ci_count

        def non_ci(order, klass):
            return non_ci_count(order, klass, allow_slow=allow_slow, config=config).classes

    return identity.checker(n, source, non_ci=non_ci)

def check(key, n, valency=None, oracle=False, allow_slow=False, config=None):
    '''Evaluate both sides of the identity at n and compare them exactly.

       @param key : str
           the identity key
       @param n : int
           the instantiation parameter (the prime p for 5.x, m for L2.x)
       @param valency : optional, int
           compare a single valency of a graded identity
       @param oracle : optional, bool
           count orders without a formula with the oracle
       @param allow_slow : optional, bool
           let the oracle run beyond its default bounds
       @param config : optional, dict
           the settings from circulant.core.config.load_config'''

    identity = _identity(key)

    if valency is not None and not identity.graded:
        raise DomainError('identity %s is not graded by valency' % key)

    if not identity.applicable(n):
        return IdentityReport(key, n, NOT_APPLICABLE, valency=valency)

    is_conjectural = bool(identity.conjectural(n))
    start = time.perf_counter()

    try:
        lhs, rhs = _sides(identity, n, oracle, allow_slow, config)
    except (UnsupportedOrder, ResourceError) as e:
        elapsed = timedelta(seconds=time.perf_counter() - start)
        log.debug('%s at %d: %s', key, n, e)
        return IdentityReport(key, n, UNSUPPORTED, valency=valency, conjectural=is_conjectural,
                              elapsed=elapsed, detail=str(e))

    if valency is not None:
        lhs, rhs = lhs.coefficient(valency), rhs.coefficient(valency)

    elapsed = timedelta(seconds=time.perf_counter() - start)
    status = HOLDS if lhs == rhs else FAILS

    if status == FAILS:
        log.warning('identity %s fails at %d: %s != %s', key, n, lhs, rhs)
    else:
        log.debug('identity %s holds at %d (%.3fs)', key, n, elapsed.total_seconds())

    return IdentityReport(key, n, status, lhs, rhs, valency, is_conjectural, elapsed)

def check_lemma(key, m):
    '''Expand both sides of a cycle-index lemma at m and compare them.

       @param key : str
           L2.1, L2.4, L2.6 or L2.7
       @param m : int
           a positive integer'''

    if not _identity(key).lemma:
        raise DomainError('%s is not a cycle-index lemma' % key)

    return check(key, m)

def verify_range(keys, order_bound, oracle=False, allow_slow=False, config=None, workers=1):
    '''Check every key at every applicable instantiation up to the bound.
       The reports are sorted by registry position, then instantiation.

       @param keys : iterable(str)
           the identity keys, all of them when empty or None
       @param order_bound : int
           the largest instantiation parameter
       @param workers : optional, int
           the number of threads evaluating cells'''

    keys = set(keys or KEYS)
    for key in keys:
        _identity(key)

    cells = list((key, n) for key in KEYS if key in keys
                 for n in range(1, order_bound + 1) if IDENTITIES[key].applicable(n))

    def run(cell):
        return check(cell[0], cell[1], oracle=oracle, allow_slow=allow_slow, config=config)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reports = list(executor.map(run, cells))
    else:
        reports = list(run(cell) for cell in cells)

    log.info('verified %d instantiations of %d identities', len(reports), len(keys))
    return reports

def summarize(reports):
    '''Return a Counter of report statuses.'''

    return Counter(report.status for report in reports)

def failed(reports):
    return any(report.status == FAILS for report in reports)
