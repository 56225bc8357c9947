from enum import Enum

from circulant.core import serializers
from circulant.core.errors import ConsistencyError, DomainError
from circulant.core.serializers import serialize

PROVENANCES = ('formula', 'formal', 'oracle')

class CirculantClass(Enum):
    '''The six kinds of circulants that are counted.'''

    DIRECTED = 'd'
    UNDIRECTED = 'u'
    ORIENTED = 'o'
    SELF_COMPLEMENTARY_DIRECTED = 'sd'
    SELF_COMPLEMENTARY_UNDIRECTED = 'su'
    TOURNAMENT = 't'

    def __str__(self):
        return self.value

    @property
    def has_series(self):
        '''True for the classes counted by valency (d, u, o).'''

        return self.value in ('d', 'u', 'o')

    @classmethod
    def parse(cls, tag):
        '''Return the class for a tag such as 'sd' (or the class itself).

           @param tag : str|CirculantClass
               the class tag'''

        if isinstance(tag, cls):
            return tag

        try:
            return cls(str(tag).strip().lower())
        except ValueError:
            raise DomainError('unknown circulant class %r (expected one of %s)'
                % (tag, ', '.join(c.value for c in cls)))

D = CirculantClass.DIRECTED
U = CirculantClass.UNDIRECTED
O = CirculantClass.ORIENTED
SD = CirculantClass.SELF_COMPLEMENTARY_DIRECTED
SU = CirculantClass.SELF_COMPLEMENTARY_UNDIRECTED
T = CirculantClass.TOURNAMENT

CLASSES = (D, U, O, SD, SU, T)

class CountResult(object):
    '''The number of circulants of one class at one order, with the
       generating function by valency for d, u and o.'''

    def __init__(self, order, klass, total, by_valency=None, provenance='formula'):
        '''Create the result, checking its invariants.

           @param order : int
               the order n
           @param klass : CirculantClass|str
               the class of circulants
           @param total : int
               the number of circulants
           @param by_valency : optional, UniPoly
               the generating function by valency
           @param provenance : optional, str
               'formula', 'formal' or 'oracle' '''

        if provenance not in PROVENANCES:
            raise DomainError('unknown provenance %r' % (provenance,))

        self.order = order
        self.klass = CirculantClass.parse(klass)
        self.total = total
        self.by_valency = by_valency
        self.provenance = provenance

        if by_valency is not None:
            if by_valency.evaluate(1) != total:
                raise ConsistencyError('order %d class %s: total %d differs from the series sum %d'
                    % (order, self.klass, total, by_valency.evaluate(1)))

        # a formal count need not be a count of anything
        if provenance != 'formal':
            if total < 0 or (by_valency is not None and any(c < 0 for c in by_valency)):
                raise ConsistencyError('order %d class %s: negative count' % (order, self.klass))

    def __eq__(self, other):
        if not isinstance(other, CountResult):
            return NotImplemented
        return (self.order, self.klass, self.total, self.by_valency) == \
            (other.order, other.klass, other.total, other.by_valency)

    def __hash__(self):
        return hash((self.order, self.klass, self.total))

    def __repr__(self):
        return 'CountResult(order=%d, class=%s, total=%d, provenance=%s)' % (
            self.order, self.klass, self.total, self.provenance)

    def valency(self, r):
        '''Return the number of circulants of valency r.

           @param r : int
               the valency'''

        if self.by_valency is None:
            raise DomainError('class %s carries no valency series' % self.klass)
        return self.by_valency.coefficient(r)

    def to_json(self):
        '''Return the JSON-ready record, numbers as decimal strings.'''

        return serialize({
            'order' : self.order,
            'class' : self.klass.value,
            'total' : self.total,
            'by_valency' : self.by_valency,
            'provenance' : self.provenance,
        }, total=serializers.decimal, by_valency=serializers.unipoly)

    @classmethod
    def from_json(cls, o):
        '''Rebuild a result from to_json output.

           @param o : dict
               the serialized record'''

        o = serialize(o, total=serializers.decimal, by_valency=serializers.unipoly)
        return cls(int(o['order']), o['class'], o['total'], o.get('by_valency'), o['provenance'])
