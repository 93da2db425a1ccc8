import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pdoring.algebra.finite_ring import FiniteRing, SampledValidationWarning, int_scale, validate_ring
from pdoring.algebra.ring_factory import RingFactory, find_identity
from pdoring.config import EngineConfig
from pdoring.errors import NonUnitalRingError, RingSizeError, RingStructureError

Z2_ADD = [[0, 1], [1, 0]]


def test_zn_basics(z4):
    assert z4.order == 4
    assert z4.one == 1 and z4.zero == 0
    assert z4.is_unital and z4.is_commutative
    assert z4.mul(3, 3) == 1
    assert z4.sub(1, 3) == 2
    assert z4.element_names == ["0", "1", "2", "3"]


def test_valid_ring_has_no_violations(z4):
    violations = validate_ring(z4)
    assert violations == []
    assert not violations.sampled


@given(st.integers(min_value=1, max_value=30))
@settings(max_examples=30, deadline=None)
def test_every_zn_is_a_ring(n):
    assert validate_ring(RingFactory.make_zn(n)) == []


def test_distributivity_violation_has_witness():
    ring = FiniteRing(Z2_ADD, [[0, 1], [1, 1]])
    violations = validate_ring(ring)
    axioms = {v.axiom: v.witness for v in violations}
    assert axioms["left distributivity"] == (1, 0, 0)
    assert axioms["right distributivity"] == (0, 0, 1)
    assert "multiplicative associativity" not in axioms
    assert str(violations[0]) == "left distributivity fails at (1, 0, 0)"


def test_large_rings_are_sampled(z4):
    config = EngineConfig(exhaustive_triple_order=2, validation_samples=50)
    with pytest.warns(SampledValidationWarning):
        violations = validate_ring(z4, config)
    assert violations.sampled
    assert violations == []


@pytest.mark.parametrize("add, mul", [
    ([[0, 1]], [[0, 1]]),
    (Z2_ADD, [[0, 0, 0], [0, 1, 0], [0, 0, 1]]),
    (Z2_ADD, [[0, 2], [0, 1]]),
])
def test_malformed_tables_are_rejected(add, mul):
    with pytest.raises(RingStructureError):
        FiniteRing(add, mul)


def test_tables_are_read_only(z4):
    with pytest.raises(ValueError):
        z4.mul_table[1, 1] = 0


def test_nonunital_ring_refuses_identity():
    ring = RingFactory.make_table_ring(Z2_ADD, [[0, 0], [0, 0]])
    assert not ring.is_unital
    with pytest.raises(NonUnitalRingError):
        ring.require_one()
    assert ring.element_name(1) == "#1"


def test_order_bound():
    with pytest.raises(RingSizeError) as info:
        RingFactory.make_zn(5000)
    assert info.value.bound == 4096
    assert RingFactory.make_zn(5000, EngineConfig(max_order=5000)).order == 5000


@pytest.mark.parametrize("m, a, expected", [(3, 1, 3), (-1, 1, 3), (5, 2, 2), (0, 3, 0), (-6, 3, 2)])
def test_int_scale(z4, m, a, expected):
    assert int_scale(z4, m, a) == expected
    assert z4.int_scale(m, a) == expected


def test_find_identity(z4):
    assert find_identity(z4.mul_table) == 1
    assert find_identity(np.zeros((2, 2), dtype=np.int64)) is None
