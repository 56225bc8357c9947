from circulant.core.oracle.connection import ConnectionSet
from circulant.core.oracle.canonical import CanonicalForm, canonical_form, digraph_form
from circulant.core.oracle.census import \
    ClassRecord, NonCayley, SelfComplementarySplit, candidate_count, census, \
    classify_self_complementary, enumerate_class, non_ci_count, representatives
from circulant.core.oracle.cayley import cayley_classes
