from pdoring.algebra.coordinate_ring import CoordinateRing
from pdoring.algebra.derivation import DeltaOrbit, Derivation, validate_derivation
from pdoring.algebra.finite_ring import (FiniteRing, RingViolation, SampledValidationWarning, Violations,
                                         int_scale, validate_ring)
from pdoring.algebra.ideal import (Ideal, QuotientData, Sidedness, additive_span, delta_compatibility_witness,
                                   element_nilpotency_index, enumerate_ideals, ideal_generated,
                                   is_delta_compatible, is_delta_ideal, is_delta_subset, left_annihilator,
                                   quotient_ring, subring)
from pdoring.algebra.ring_factory import (RingFactory, make_matrix_ring, make_product, make_skew_dual_numbers,
                                          make_table_ring, make_triangular_matrix_ring, make_trivial_extension,
                                          make_truncated_poly, make_truncated_poly_algebra, make_zn)
