"""
Deterministic square-condition flags, an S_n certificate for G_g, the G3
quadratic field test and Frobenius fingerprints for reciprocal
polynomials.
"""
from .flags import (GaloisFlags, is_square_int, g1_flag, g2_flag,
                    g3_radicand, separability_data)
from .certificate import is_irreducible, sn_certificate
from .numberfield import (square_in_field, rational_reconstruction, g3_flag,
                          reducibility_flag, monic_g3_data)
from .fingerprint import (frobenius_fingerprint, frobenius_shapes,
                          prime_stream, group_tables)
from .classify import classify, classify_many
