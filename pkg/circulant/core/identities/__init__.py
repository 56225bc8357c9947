from circulant.core.identities.registry import IDENTITIES, KEYS, LEMMA_KEYS, Identity
from circulant.core.identities.verify import \
    FAILS, HOLDS, NOT_APPLICABLE, STATUSES, UNSUPPORTED, IdentityReport, \
    applicable, check, check_lemma, conjectural, failed, summarize, verify_range
