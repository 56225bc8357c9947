'''Canonical forms of digraphs by individualization-refinement.

   The search tree is built from an ordered partition of the vertices. Each
   node refines its partition until it is equitable: a cell is split by the
   number of out- and in-neighbours every vertex has inside some other cell,
   the fragments ordered by that count. The first smallest non-singleton
   cell is then individualized one vertex at a time. A leaf is a discrete
   partition, i.e. a relabelling, and the certificate is the smallest
   relabelled adjacency over all leaves.

   Siblings in the same orbit of the automorphisms known so far (restricted
   to those that fix the path) lead to the same leaf certificates and are
   skipped. Automorphisms come from leaves that tie with the best leaf, and
   from the caller as seeds.'''

import logging
from collections import namedtuple

from circulant.core.errors import DomainError
from circulant.core.numtheory import units
from circulant.core.oracle.connection import multiply_mask

log = logging.getLogger(__name__)

CanonicalForm = namedtuple('CanonicalForm', 'order certificate')

def _mask(cell):
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask

def refine(cells, out_rows, in_rows):
    '''Return the coarsest equitable refinement of the ordered partition.

       @param cells : list(list(int))
           the ordered partition
       @param out_rows : list(int)
           the out-neighbourhood mask of each vertex
       @param in_rows : list(int)
           the in-neighbourhood mask of each vertex'''

    cells = list(cells)
    changed = True

    while changed:
        changed = False
        index = 0

        while index < len(cells):
            splitter = _mask(cells[index])
            refined = list()

            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue

                fragments = dict()
                for v in cell:
                    key = ((out_rows[v] & splitter).bit_count(), (in_rows[v] & splitter).bit_count())
                    fragments.setdefault(key, []).append(v)

                if len(fragments) == 1:
                    refined.append(cell)
                else:
                    refined.extend(fragments[key] for key in sorted(fragments))
                    changed = True

            cells = refined
            index += 1

    return cells

def _relabelled(order, out_rows):
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i

    rows = list()
    for v in order:
        row, bits = 0, out_rows[v]
        while bits:
            low = bits & -bits
            row |= 1 << position[low.bit_length() - 1]
            bits ^= low
        rows.append(row)

    return tuple(rows)

class _Orbits(object):
    '''Union-find over the vertices.'''

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, v):
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

class _Search(object):

    def __init__(self, out_rows, in_rows, automorphisms):
        self.out_rows = out_rows
        self.in_rows = in_rows
        self.automorphisms = list(automorphisms)
        self.best = None
        self.best_order = None
        self.best_path = None
        self.leaves = 0

    def run(self, cells, path):
        '''Explore the node reached by individualizing path. Returns the depth
           to unwind to when a leaf tied with the best one, else None.'''

        cells = refine(cells, self.out_rows, self.in_rows)

        target = None
        for index, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = index

        if target is None:
            return self.leaf(list(cell[0] for cell in cells), path)

        depth = len(path)
        tried = list()
        for v in sorted(cells[target]):
            orbits = self.orbits(path)
            if any(orbits.find(v) == orbits.find(w) for w in tried):
                continue
            tried.append(v)

            rest = list(w for w in cells[target] if w != v)
            child = cells[:target] + [[v], rest] + cells[target + 1:]

            unwind = self.run(child, path + (v,))
            if unwind is not None and unwind < depth:
                return unwind

        return None

    def orbits(self, path):
        orbits = _Orbits(len(self.out_rows))
        for automorphism in self.automorphisms:
            if all(automorphism[v] == v for v in path):
                for v, w in enumerate(automorphism):
                    orbits.union(v, w)
        return orbits

    def leaf(self, order, path):
        self.leaves += 1
        certificate = _relabelled(order, self.out_rows)

        if self.best is None or certificate < self.best:
            self.best, self.best_order, self.best_path = certificate, order, path
            return None

        if certificate == self.best:
            automorphism = [0] * len(order)
            for v, w in zip(self.best_order, order):
                automorphism[v] = w
            self.automorphisms.append(tuple(automorphism))

            # the subtree below the common ancestor is an image of one already seen
            common = 0
            for a, b in zip(self.best_path, path):
                if a != b:
                    break
                common += 1
            return common

        return None

def _encode(n, rows):
    width = max(1, (n + 7) // 8)
    return n.to_bytes(2, 'big') + b''.join(row.to_bytes(width, 'big') for row in rows)

def canonical_rows(out_rows, in_rows, automorphisms=()):
    '''Return the certificate of the digraph given by its adjacency masks.

       @param out_rows : list(int)
           the out-neighbourhood mask of each vertex
       @param in_rows : list(int)
           the in-neighbourhood mask of each vertex
       @param automorphisms : optional, iterable(tuple(int))
           known automorphisms, as vertex images'''

    n = len(out_rows)
    if n == 0:
        return CanonicalForm(0, _encode(0, ()))

    search = _Search(out_rows, in_rows, automorphisms)
    search.run([list(range(n))], ())

    log.debug('canonical form on %d vertices after %d leaves', n, search.leaves)
    return CanonicalForm(n, _encode(n, search.best))

def canonical_form(s):
    '''Return the canonical form of the circulant with connection set s. The
       rotation and the multipliers that fix s seed the automorphisms.

       @param s : ConnectionSet
           the connection set'''

    n = s.order
    seeds = [tuple((v + 1) % n for v in range(n))]
    for m in units(n):
        if m != 1 and multiply_mask(s.mask, m, n) == s.mask:
            seeds.append(tuple(v * m % n for v in range(n)))

    return canonical_rows(s.out_rows(), s.in_rows(), seeds)

def digraph_form(graph):
    '''Return the canonical form of an arbitrary networkx.DiGraph.

       @param graph : networkx.DiGraph
           the digraph'''

    if not graph.is_directed():
        raise DomainError('%r is not a directed graph' % (graph,))

    index = dict((node, i) for i, node in enumerate(graph.nodes))
    n = len(index)
    out_rows, in_rows = [0] * n, [0] * n

    for u, v in graph.edges:
        out_rows[index[u]] |= 1 << index[v]
        in_rows[index[v]] |= 1 << index[u]

    return canonical_rows(out_rows, in_rows)
