from circulant.core.enumerators.classes import \
    CLASSES, CirculantClass, CountResult, D, O, PROVENANCES, SD, SU, T, U
from circulant.core.enumerators.prime import \
    formal_undirected, prime_enumerator, twice_prime_enumerator
from circulant.core.enumerators.squared import \
    bivariate_substitution, mixed_sd, non_ci_counts, prime_squared_enumerator
from circulant.core.enumerators.dispatch import \
    OrderKind, classify_order, count, directed_not_undirected, supported
from circulant.core.enumerators.series import \
    EvenOddSplit, LogConcavityViolation, alternating_sum, even_odd_split, \
    log_concavity_probe
