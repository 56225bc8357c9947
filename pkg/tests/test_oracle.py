import os
import random
import unittest
from itertools import combinations, product

import networkx as nx

from circulant.core.config import DEFAULTS
from circulant.core.enumerators import CLASSES, D, O, SD, SU, T, U, count
from circulant.core.errors import DomainError, ResourceError, UnsupportedOrder
from circulant.core.oracle import \
    ConnectionSet, candidate_count, canonical_form, cayley_classes, \
    census, classify_self_complementary, digraph_form, enumerate_class, \
    non_ci_count, representatives

SLOW = bool(os.environ.get('CIRCULANT_SLOW_TESTS'))

class TestConnectionSet(unittest.TestCase):

    def test_members(self):
        s = ConnectionSet(13, [1, 5, 18])

        self.assertEqual((1, 5), s.members)
        self.assertEqual(2, s.valency)
        self.assertIn(5, s)
        self.assertNotIn(0, s)
        self.assertEqual(s, ConnectionSet.from_mask(13, s.mask))

    def test_domain(self):
        self.assertRaises(DomainError, ConnectionSet, 5, [0])
        self.assertRaises(DomainError, ConnectionSet, 5, [5])
        self.assertRaises(DomainError, ConnectionSet, 0)
        self.assertRaises(DomainError, ConnectionSet.from_mask, 5, 1)
        self.assertRaises(AttributeError, setattr, ConnectionSet(5), 'mask', 2)

    def test_operations(self):
        s = ConnectionSet(7, [1, 2, 4])

        self.assertEqual(ConnectionSet(7, [3, 5, 6]), s.negate())
        self.assertEqual(ConnectionSet(7, [2, 4, 1]), s.multiply(2))
        self.assertEqual(ConnectionSet(7, [3, 5, 6]), s.complement())
        self.assertEqual(ConnectionSet(7, [1, 2, 3, 4, 5, 6]), ConnectionSet(7).complement())

    def test_predicates(self):
        paley = ConnectionSet(7, [1, 2, 4])
        cycle = ConnectionSet(5, [1, 4])

        self.assertTrue(paley.is_oriented())
        self.assertTrue(paley.is_tournament())
        self.assertFalse(paley.is_undirected())
        self.assertTrue(cycle.is_undirected())
        self.assertFalse(cycle.is_oriented())

        self.assertTrue(paley.satisfies(T))
        self.assertTrue(paley.satisfies(SD))
        self.assertFalse(paley.satisfies(SU))
        self.assertTrue(cycle.satisfies(SU))
        self.assertFalse(ConnectionSet(6, [3]).satisfies(O))
        self.assertTrue(ConnectionSet(6, [3]).satisfies(U))

    def test_digraph(self):
        graph = ConnectionSet(8, [1, 3]).to_digraph()

        self.assertEqual(8, graph.number_of_nodes())
        self.assertEqual(16, graph.number_of_edges())
        self.assertTrue(graph.has_edge(7, 2))

class TestCanonicalForm(unittest.TestCase):

    def test_multipliers(self):
        s = ConnectionSet(13, [1, 5])
        for m in (2, 3, 12):
            self.assertEqual(canonical_form(s), canonical_form(s.multiply(m)))

    def test_against_networkx(self):
        for n, valency in ((6, 2), (8, 3), (9, 4)):
            sets = list(ConnectionSet(n, c) for c in combinations(range(1, n), valency))
            forms = dict((s, canonical_form(s)) for s in sets)

            for a, b in combinations(sets, 2):
                expected = nx.is_isomorphic(a.to_digraph(), b.to_digraph())
                self.assertEqual(expected, forms[a] == forms[b], (a, b))

    def test_relabelled_digraph(self):
        graph = nx.DiGraph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 4)])
        graph.add_node(5)

        permutation = {0 : 3, 1 : 5, 2 : 0, 3 : 1, 4 : 2, 5 : 4}
        relabelled = nx.relabel_nodes(graph, permutation)

        self.assertEqual(digraph_form(graph), digraph_form(relabelled))

        reversed_graph = graph.reverse()
        self.assertEqual(nx.is_isomorphic(graph, reversed_graph),
                         digraph_form(graph) == digraph_form(reversed_graph))

    def test_random_relabellings(self):
        rng = random.Random(1018)
        circulants = list(ConnectionSet(n, members) for n, members in
                          ((8, [1, 2]), (9, [1, 3, 4]), (10, [1, 2, 5]), (11, [1, 3, 4, 5, 9])))

        for i in range(1000):
            if i % 2:
                graph = nx.gnp_random_graph(9, 0.4, seed=rng.randrange(2 ** 32), directed=True)
            else:
                graph = circulants[i // 2 % len(circulants)].to_digraph()

            labels = list(graph.nodes)
            rng.shuffle(labels)
            relabelling = dict(zip(graph.nodes, labels))

            relabelled = nx.DiGraph()
            relabelled.add_nodes_from(labels)
            relabelled.add_edges_from((relabelling[u], relabelling[v]) for u, v in graph.edges)

            self.assertEqual(digraph_form(graph), digraph_form(relabelled), i)

    def test_circulant_matches_digraph_form(self):
        s = ConnectionSet(10, [1, 2, 5])
        self.assertEqual(canonical_form(s), digraph_form(s.to_digraph()))

    def test_undirected_graph(self):
        self.assertRaises(DomainError, digraph_form, nx.Graph([(0, 1)]))

class TestCensus(unittest.TestCase):

    def test_order_five(self):
        expected = {D : 6, U : 3, O : 3, SD : 2, SU : 1, T : 1}
        for klass, total in expected.items():
            result = enumerate_class(5, klass)
            self.assertEqual(total, result.total, klass)
            self.assertEqual('oracle', result.provenance)

    def test_no_formula_orders(self):
        expected = {
            2 : (2, 2, 1, 0, 0, 0),
            4 : (6, 4, 2, 0, 0, 0),
            8 : (46, 12, 9, 0, 0, 0),
            12 : (624, 48, 70, 0, 0, 0),
        }
        for n, totals in expected.items():
            for klass, total in zip(CLASSES, totals):
                self.assertEqual(total, enumerate_class(n, klass).total, (n, klass))

    def test_order_fifteen(self):
        self.assertEqual(44, enumerate_class(15, U).total)
        self.assertEqual(290, enumerate_class(15, O).total)
        self.assertEqual(20, enumerate_class(15, SD).total)
        self.assertEqual(0, enumerate_class(15, SU).total)
        self.assertEqual(16, enumerate_class(15, T).total)

    @unittest.skipUnless(SLOW, 'set CIRCULANT_SLOW_TESTS to run')
    def test_order_fifteen_directed(self):
        self.assertEqual(2172, enumerate_class(15, D).total)

    def test_matches_formulas(self):
        for n in (3, 5, 6, 7, 9, 10, 11):
            for klass in CLASSES:
                try:
                    formula = count(n, klass)
                except UnsupportedOrder:
                    continue
                oracle = enumerate_class(n, klass)
                self.assertEqual(formula.total, oracle.total, (n, klass))
                self.assertEqual(formula.by_valency, oracle.by_valency, (n, klass))

    @unittest.skipUnless(SLOW, 'set CIRCULANT_SLOW_TESTS to run')
    def test_matches_formulas_slow(self):
        for n in (13, 14):
            for klass in CLASSES:
                try:
                    formula = count(n, klass)
                except UnsupportedOrder:
                    continue
                self.assertEqual(formula, enumerate_class(n, klass), (n, klass))

    def test_representatives(self):
        self.assertEqual(['5;0;{};1', '5;2;{1,4};2', '5;4;{1,2,3,4};1'], representatives(5, U))

        self.assertEqual(['7;3;{1,2,3};6', '7;3;{1,2,4};2'], representatives(7, T))

    def test_complement_involution(self):
        for n in range(1, 11):
            for x in range(2 ** (n - 1)):
                s = ConnectionSet.from_mask(n, x << 1)
                self.assertEqual(s, s.complement().complement())
                self.assertEqual(n - 1 - s.valency, s.complement().valency)

    def test_classes_share_valency_and_complement(self):
        for n in (6, 8, 9):
            forms = dict()
            for x in range(2 ** (n - 1)):
                s = ConnectionSet.from_mask(n, x << 1)
                forms[s] = canonical_form(s)

            classes = dict()
            for s, form in forms.items():
                classes.setdefault(form, list()).append(s)

            for members in classes.values():
                self.assertEqual(1, len(set(s.valency for s in members)), n)
                self.assertEqual(1, len(set(forms[s.complement()] for s in members)), n)

            self.assertEqual(len(classes), enumerate_class(n, D).total)

    def test_representatives_belong_to_class(self):
        for n in (8, 9, 11):
            for klass in CLASSES:
                for record in census(n, klass):
                    s = ConnectionSet(n, record.representative)
                    self.assertTrue(s.satisfies(klass), (n, klass, s))
                    self.assertEqual(record.valency, s.valency)

    def test_candidate_count(self):
        self.assertEqual(64, candidate_count(7, D))
        self.assertEqual(20, candidate_count(7, SD))
        self.assertEqual(6, candidate_count(9, SU))
        self.assertEqual(0, candidate_count(14, T))
        self.assertEqual(2 ** 6, candidate_count(12, U))

def oriented_sets(n):
    pairs = list((s, n - s) for s in range(1, (n - 1) // 2 + 1))
    for chosen in product(*(((), (s,), (t,)) for s, t in pairs)):
        yield ConnectionSet(n, [member for members in chosen for member in members])

def networkx_classes(sets):
    '''Count isomorphism classes among the connection sets with networkx alone.'''

    classes = dict()
    for s in sets:
        graph = s.to_digraph()
        seen = classes.setdefault(s.valency, list())
        if not any(nx.is_isomorphic(graph, other) for other in seen):
            seen.append(graph)
    return sum(len(graphs) for graphs in classes.values())

class TestOrientedCounts(unittest.TestCase):

    def test_against_networkx(self):
        for n, total in ((4, 2), (6, 3), (8, 9), (12, 70)):
            self.assertEqual(total, networkx_classes(oriented_sets(n)), n)
            self.assertEqual(total, enumerate_class(n, O).total, n)

    @unittest.skipUnless(SLOW, 'set CIRCULANT_SLOW_TESTS to run')
    def test_order_fifteen_against_networkx(self):
        self.assertEqual(290, networkx_classes(oriented_sets(15)))
        self.assertEqual(290, enumerate_class(15, O).total)

class TestBounds(unittest.TestCase):

    def test_default_range(self):
        self.assertRaises(UnsupportedOrder, enumerate_class, 17, D)
        self.assertRaises(UnsupportedOrder, enumerate_class, 41, T, allow_slow=True)

    def test_candidates(self):
        config = dict(DEFAULTS, oracle_candidates=10)

        self.assertRaises(ResourceError, enumerate_class, 7, D, config=config)
        self.assertEqual(14, enumerate_class(7, D, allow_slow=True, config=config).total)

        self.assertRaises(ResourceError, enumerate_class, 40, D, allow_slow=True)

    def test_domain(self):
        self.assertRaises(DomainError, enumerate_class, 0, D)

class TestSelfComplementary(unittest.TestCase):

    def test_classify(self):
        self.assertEqual((2, 6, 0), classify_self_complementary(13))
        self.assertEqual((0, 3, 0), classify_self_complementary(9))
        self.assertEqual((0, 16, 4), classify_self_complementary(15))
        self.assertRaises(DomainError, classify_self_complementary, 14)

    def test_non_ci(self):
        self.assertEqual(1, non_ci_count(9, SD).classes)
        self.assertEqual(0, non_ci_count(13, SD).classes)
        self.assertEqual(0, non_ci_count(13, D).circulants)

class TestCayley(unittest.TestCase):

    def test_small(self):
        self.assertEqual(6, cayley_classes(5, D))
        self.assertEqual(1, cayley_classes(1, D))

    def test_prime_orders_are_ci(self):
        for klass in CLASSES:
            self.assertEqual(count(13, klass).total, cayley_classes(13, klass), klass)

    def test_orbits_exceed_classes(self):
        # C3[C3] splits into two multiplier orbits
        self.assertEqual(4, cayley_classes(9, SD))
        self.assertEqual(3, enumerate_class(9, SD).total)

    def test_beyond_range(self):
        self.assertRaises(UnsupportedOrder, cayley_classes, 41, D)

if __name__ == '__main__':
    unittest.main()
