import random
import unittest
from fractions import Fraction

import sympy

from circulant.core.algebra import \
    ALL, EVEN, GAUSSIAN_UNIT, ODD, ONE, SquareValue, SubstitutionRule, SymPoly, \
    Term, UniPoly, Value, ZERO, cycle_index, eval_poly, substitute, \
    substitution_sum, sym_arith, to_sym
from circulant.core.errors import ConsistencyError, DomainError, ParityError

class TestUniPoly(unittest.TestCase):

    def test_arithmetic(self):
        p = UniPoly([1, 1])

        self.assertEqual(UniPoly([1, 3, 3, 1]), p ** 3)
        self.assertEqual(UniPoly([2, 2]), 2 * p)
        self.assertEqual(UniPoly([2, 1]), 1 + p)
        self.assertEqual(UniPoly([0, -1]), 1 - p)
        self.assertEqual(ONE, p ** 0)
        self.assertEqual(ZERO, p - p)
        self.assertEqual(-1, ZERO.degree)

    def test_trailing_zeros(self):
        self.assertEqual(UniPoly([1, 2]), UniPoly([1, 2, 0, 0]))
        self.assertEqual(1, UniPoly([1, 2, 0]).degree)
        self.assertEqual(0, UniPoly([1, 2]).coefficient(7))

    def test_division(self):
        self.assertEqual(UniPoly([1, 2]), UniPoly([3, 6]).exact_div(3))
        self.assertRaises(ConsistencyError, UniPoly([3, 7]).exact_div, 3)

    def test_stretch_and_evaluate(self):
        p = UniPoly([1, 1])

        self.assertEqual(UniPoly([1, 0, 0, 1]), p.stretch(3))
        self.assertEqual(0, p.evaluate(-1))
        self.assertEqual(2 ** 40, (p ** 40).evaluate(1))
        self.assertTrue(p.stretch(2).is_even())
        self.assertFalse(p.is_even())

    def test_immutable(self):
        p = UniPoly([1])
        self.assertRaises(AttributeError, setattr, p, 'coefficients', (2,))
        self.assertRaises(TypeError, UniPoly, [True])
        self.assertRaises(TypeError, UniPoly, [1.5])

    def test_json(self):
        p = UniPoly([1, 0, 123992391755402970674764])
        self.assertEqual(['1', '0', '123992391755402970674764'], p.to_json())
        self.assertEqual(p, UniPoly.from_json(p.to_json()))

class TestCycleIndex(unittest.TestCase):

    def test_terms(self):
        ci = cycle_index(6)

        self.assertEqual(6, ci.order)
        self.assertEqual((Term(1, 1, 6), Term(2, 1, 3), Term(3, 2, 2), Term(6, 2, 1)), ci.terms)
        self.assertIs(ci, cycle_index(6))

    def test_weights_sum_to_order(self):
        for n in range(1, 60):
            self.assertEqual(n, sum(t.weight for t in cycle_index(n).terms))

    def test_domain(self):
        self.assertRaises(DomainError, cycle_index, 0)

class TestSubstitution(unittest.TestCase):

    def test_necklaces(self):
        rule = SubstitutionRule((ALL, Value(lambda r: UniPoly.binomial(r))))

        self.assertEqual(UniPoly([1, 1, 2, 2, 1, 1]), substitute(cycle_index(5), rule))
        self.assertEqual(14, substitute(cycle_index(6), rule).evaluate(1))

    def test_necklaces_by_rotation(self):
        rule = SubstitutionRule((ALL, Value(lambda r: UniPoly.binomial(r))))

        for n in range(1, 15):
            full = (1 << n) - 1
            seen = set()
            by_weight = [0] * (n + 1)
            for word in range(1 << n):
                if word in seen:
                    continue
                for shift in range(n):
                    seen.add(((word << shift) | (word >> (n - shift))) & full)
                by_weight[word.bit_count()] += 1

            self.assertEqual(UniPoly(by_weight), substitute(cycle_index(n), rule), n)

    def test_selectors(self):
        rule = SubstitutionRule((ODD, Value(2)), (EVEN, Value(3)))

        self.assertEqual(2, rule.lookup(1).resolve(1).evaluate(0))
        self.assertEqual(3, rule.lookup(4).resolve(4).evaluate(0))

        rule = SubstitutionRule((ALL, Value(1)), (EVEN, Value(0)))
        self.assertRaises(DomainError, rule.lookup, 2)
        self.assertEqual(1, rule.lookup(3).resolve(3).evaluate(0))

        rule = SubstitutionRule(([1], Value(1)))
        self.assertRaises(DomainError, rule.lookup, 2)
        self.assertRaises(DomainError, SubstitutionRule, (ALL, 1))

    def test_assign(self):
        rule = SubstitutionRule(([1], Value(1))).assign([3], Value(0))
        self.assertEqual(2, len(rule.clauses))

    def test_inexact(self):
        rule = SubstitutionRule(([1], Value(1)), ([3], Value(0)))

        self.assertEqual(ONE, substitution_sum(cycle_index(3), rule))
        self.assertRaises(ConsistencyError, substitute, cycle_index(3), rule)

    def test_square_value(self):
        # x_1^2 := 1 + z^2 and x_2 := 1 + z^2 on I_2
        rule = SubstitutionRule(([1], SquareValue(UniPoly.binomial(2))), ([2], Value(UniPoly.binomial(2))))
        self.assertEqual(UniPoly([1, 0, 1]), substitute(cycle_index(2), rule))

        rule = SubstitutionRule((ALL, SquareValue(UniPoly.binomial(2))))
        self.assertRaises(ParityError, substitute, cycle_index(3), rule)

    def test_power_and_partner(self):
        rule = SubstitutionRule((ALL, Value(UniPoly.binomial(1))))
        partner = SubstitutionRule((ALL, Value(2)))

        # I_1 with x_1 := (1 + z)^2, paired with y_1 := 2
        self.assertEqual(UniPoly([2, 4, 2]),
                         substitution_sum(cycle_index(1), rule, power=2, partner=partner))

class TestEvaluation(unittest.TestCase):

    def test_signed(self):
        self.assertEqual(0, eval_poly(UniPoly([1, 1]), -1))
        self.assertEqual(8, eval_poly(UniPoly([1, 1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1]), -1))
        self.assertRaises(DomainError, eval_poly, UniPoly([1]), 0.5)
        self.assertRaises(DomainError, eval_poly, [1, 2], 1)

    def test_gaussian(self):
        self.assertEqual(0, eval_poly(UniPoly([1, 0, 1, 0, 1, 0, 1]), GAUSSIAN_UNIT))
        # c_u(13, i) = C_su(13)
        self.assertEqual(2, eval_poly(UniPoly([1, 0, 1, 0, 3, 0, 4, 0, 3, 0, 1, 0, 1]), GAUSSIAN_UNIT))
        self.assertRaises(DomainError, eval_poly, UniPoly([1, 1]), GAUSSIAN_UNIT)

class TestSymPoly(unittest.TestCase):

    def test_arithmetic(self):
        x1 = SymPoly.variable('x', 1)
        y2 = SymPoly.variable('y', 2)

        self.assertEqual(x1 * y2, y2 * x1)
        self.assertEqual(SymPoly.constant(0), x1 - x1)
        self.assertEqual(3, SymPoly.constant(3))
        self.assertEqual((x1 + y2) * (x1 + y2), x1 * x1 + 2 * x1 * y2 + y2 * y2)
        self.assertEqual(x1.scale(Fraction(1, 2)) * 2, x1)

        self.assertEqual(x1 + y2, sym_arith(x1, y2, 'add'))
        self.assertEqual(x1 * y2, sym_arith(x1, y2, 'mul'))
        self.assertEqual(x1.scale(3), sym_arith(x1, 3, 'scale'))
        self.assertRaises(DomainError, sym_arith, x1, y2, 'div')

    def test_random_ring_laws(self):
        rng = random.Random(20261018)

        def random_poly():
            p = SymPoly.constant(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
            for _ in range(rng.randint(0, 4)):
                monomial = SymPoly.constant(Fraction(rng.randint(-5, 5), rng.randint(1, 6)))
                for _ in range(rng.randint(1, 3)):
                    monomial = monomial * SymPoly.variable(rng.choice('xy'), rng.randint(1, 4),
                                                           rng.randint(1, 3))
                p = p + monomial
            return p

        def expression(p):
            total = sympy.Integer(0)
            for monomial, coefficient in p.terms.items():
                term = sympy.Rational(coefficient.numerator, coefficient.denominator)
                for (family, index), e in monomial:
                    term *= sympy.Symbol('%s_%d' % (family, index)) ** e
                total += term
            return sympy.expand(total)

        for _ in range(200):
            a, b, c = random_poly(), random_poly(), random_poly()

            self.assertEqual(a * b, b * a)
            self.assertEqual(a + b, b + a)
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a, (a + b) - b)
            self.assertEqual(0, sympy.expand(expression(a * b + c) - expression(a) * expression(b)
                                             - expression(c)))

    def test_malformed(self):
        self.assertRaises(DomainError, SymPoly.variable, 'z', 1)
        self.assertRaises(DomainError, SymPoly.variable, 'x', 0)

    def test_to_sym(self):
        x1, x2 = SymPoly.variable('x', 1), SymPoly.variable('x', 2)
        half = Fraction(1, 2)

        self.assertEqual((x1 * x1).scale(half) + x2.scale(half), to_sym(cycle_index(2)))

        # x_r -> x_{2r}: the index-doubling shape of the lemmas
        doubled = to_sym(cycle_index(2), index_transform=lambda r: 2 * r)
        self.assertEqual(SymPoly.variable('x', 2, 2).scale(half)
                         + SymPoly.variable('x', 4).scale(half), doubled)

        # dropping x_2 leaves only the identity term
        self.assertEqual((x1 * x1).scale(half),
                         to_sym(cycle_index(2), index_transform=lambda r: r if r == 1 else None))

        self.assertRaises(ParityError, to_sym, cycle_index(2), exponent_transform=lambda r: half)

    def test_json(self):
        p = SymPoly.variable('x', 3, 2).scale(Fraction(2, 7)) + SymPoly.variable('y', 1)
        self.assertEqual(p, SymPoly.from_json(p.to_json()))

if __name__ == '__main__':
    unittest.main()
