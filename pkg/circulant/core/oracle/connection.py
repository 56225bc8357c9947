import networkx as nx

from circulant.core.enumerators.classes import CirculantClass, D, O, SD, SU, T, U
from circulant.core.errors import DomainError

def full_mask(n):
    '''The mask of Z_n minus {0}.'''

    return ((1 << n) - 1) & ~1

def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def multiply_mask(mask, m, n):
    '''Return the mask of mS for the connection set with mask S.'''

    result = 0
    for s in iter_bits(mask):
        result |= 1 << (s * m % n)
    return result

def negate_mask(mask, n):
    return multiply_mask(mask, n - 1, n) if n > 1 else mask

class ConnectionSet(object):
    '''A subset S of Z_n minus {0}; the circulant has the arc u -> v iff
       v - u lies in S. The members are kept as a bitmask, bit s for s.'''

    __slots__ = ('order', 'mask')

    def __init__(self, order, members=()):
        '''Create the connection set.

           @param order : int
               the order n >= 1
           @param members : iterable(int)
               the members, taken mod n; 0 is rejected'''

        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise DomainError('order must be a positive integer, got %r' % (order,))

        mask = 0
        for s in members:
            s %= order
            if s == 0:
                raise DomainError('0 cannot be a member of a connection set')
            mask |= 1 << s

        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'mask', mask)

    def __setattr__(self, name, value):
        raise AttributeError('ConnectionSet is immutable')

    @classmethod
    def from_mask(cls, order, mask):
        if mask & ~full_mask(order):
            raise DomainError('mask %#x has bits outside Z_%d minus {0}' % (mask, order))
        return cls(order, iter_bits(mask))

    @property
    def members(self):
        return tuple(iter_bits(self.mask))

    @property
    def valency(self):
        return self.mask.bit_count()

    def __eq__(self, other):
        if not isinstance(other, ConnectionSet):
            return NotImplemented
        return (self.order, self.mask) == (other.order, other.mask)

    def __hash__(self):
        return hash((self.order, self.mask))

    def __repr__(self):
        return 'ConnectionSet(%d, %r)' % (self.order, self.members)

    def __contains__(self, s):
        return bool(self.mask >> (s % self.order) & 1) if s % self.order else False

    def __len__(self):
        return self.valency

    def negate(self):
        '''Return -S.'''

        return ConnectionSet.from_mask(self.order, negate_mask(self.mask, self.order))

    def multiply(self, m):
        '''Return mS.

           @param m : int
               the multiplier, a unit mod n'''

        return ConnectionSet.from_mask(self.order, multiply_mask(self.mask, m, self.order))

    def complement(self):
        '''Return the connection set of the complement within the complete
           loopless digraph.'''

        return ConnectionSet.from_mask(self.order, full_mask(self.order) & ~self.mask)

    def is_undirected(self):
        return negate_mask(self.mask, self.order) == self.mask

    def is_oriented(self):
        return not negate_mask(self.mask, self.order) & self.mask

    def is_tournament(self):
        n = self.order
        return n % 2 == 1 and self.is_oriented() and self.valency == (n - 1) // 2

    def satisfies(self, klass):
        '''Check the class predicate. For sd and su only the necessary size
           (and symmetry) conditions are checked here; being isomorphic to the
           complement needs the canonical form.

           @param klass : CirculantClass|str
               the class of circulants'''

        klass = CirculantClass.parse(klass)
        half = self.order % 2 == 1 and self.valency == (self.order - 1) // 2

        return {
            D : lambda: True,
            U : self.is_undirected,
            O : self.is_oriented,
            T : self.is_tournament,
            SD : lambda: half,
            SU : lambda: half and self.is_undirected(),
        }[klass]()

    def out_rows(self):
        '''Return the out-neighbourhood mask of every vertex.'''

        n = self.order
        full = (1 << n) - 1
        return list(((self.mask << v) | (self.mask >> (n - v))) & full for v in range(n))

    def in_rows(self):
        return ConnectionSet.from_mask(self.order, negate_mask(self.mask, self.order)).out_rows()

    def to_digraph(self):
        '''Return the circulant as a networkx.DiGraph on the vertices 0..n-1.'''

        n = self.order
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from((u, (u + s) % n) for u in range(n) for s in self.members)
        return graph
