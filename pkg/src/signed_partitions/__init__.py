"""Signed-partition forms of Rogers-Ramanujan type identities, checked exactly."""

from .bijections import (BijectionError, BVariant, MapId, forward, inverse, map_f,
                         map_f_inverse, map_g, map_g_inverse, map_h, map_h_inverse,
                         map_phi, map_phi_inverse, t_of)
from .catalog import CATALOG, IdentityId, descriptor, resolve_identity
from .classes import ClassId, count_class, enumerate_class, is_member
from .core import (Parity, Partition, SignedPartition, conjugate, parity_indicator,
                   parse_partition, parse_signed, weight_of)
from .harness import (VerificationReport, verify_all, verify_bijection, verify_counts,
                      verify_identity, verify_series)
from .qseries import (LaurentTerm, ProductNotStated, Sign, TruncatedSeries,
                      inverse_even_pochhammer, pochhammer_series, product_side,
                      series_mul, staircase_exponent, sum_side, term_series)

__version__ = "0.1.0"
