from circulant.core.algebra.unipoly import ONE, UniPoly, ZERO
from circulant.core.algebra.cycleindex import CycleIndex, Term, cycle_index
from circulant.core.algebra.substitution import \
    ALL, EVEN, ODD, SquareValue, SubstitutionRule, Value, substitute, \
    substitution_sum
from circulant.core.algebra.sympoly import SymPoly, sym_arith, to_sym
from circulant.core.algebra.evaluation import GAUSSIAN_UNIT, eval_poly
