import numpy as np
import pytest

from pdoring.algebra.finite_ring import validate_ring
from pdoring.algebra.ideal import (Ideal, Sidedness, additive_span, delta_compatibility_witness,
                                   element_nilpotency_index, enumerate_ideals, ideal_generated, is_delta_compatible,
                                   is_delta_ideal, is_delta_subset, left_annihilator, quotient_ring, subring)
from pdoring.algebra.ring_factory import RingFactory
from pdoring.errors import IncompatibleRingsError, NotADeltaIdealError
from pdoring.verify.catalog import build_fixture


def test_principal_ideals(z4, z8):
    assert ideal_generated(z4, [2]).members == (0, 2)
    assert ideal_generated(z4, [3]).members == (0, 1, 2, 3)
    assert ideal_generated(z8, [4]).members == (0, 4)
    assert ideal_generated(z8, [6]).members == (0, 2, 4, 6)


def test_one_sided_ideals(tri_fixture):
    ring = tri_fixture.ring
    e11 = ring.generators["e11"]
    right = ideal_generated(ring, [e11], Sidedness.RIGHT)
    left = ideal_generated(ring, [e11], Sidedness.LEFT)
    # e11 R = span{e11, e12}; R e11 = span{e11}
    assert len(right) == 4
    assert left.members == (0, e11)
    assert right.sidedness is Sidedness.RIGHT


def test_ideal_set_operations(z8):
    small, big = Ideal.from_members(z8, [0, 4]), ideal_generated(z8, [2])
    assert small.issubset(big) and not big.issubset(small)
    assert 4 in small and 2 not in small
    assert list(small) == [0, 4]
    assert Ideal.zero(z8).is_zero
    assert Ideal.whole(z8) == ideal_generated(z8, [1])
    assert str(small) == "{0, 4}"


def test_mask_size_must_match(z4):
    with pytest.raises(IncompatibleRingsError):
        Ideal(z4, [True, False])


def test_additive_span(z8):
    assert list(np.flatnonzero(additive_span(z8, [4]))) == [0, 4]
    assert list(np.flatnonzero(additive_span(z8, [6]))) == [0, 2, 4, 6]


def test_left_annihilator(z4, tri_fixture):
    assert left_annihilator(z4, [2]).members == (0, 2)
    assert left_annihilator(z4, []) == Ideal.whole(z4)
    ring = tri_fixture.ring
    e12 = ring.generators["e12"]
    # a*e12 = 0 exactly when the e11 coordinate of a vanishes
    assert set(left_annihilator(ring, [e12]).members) == {0, 2, 4, 6}


def test_delta_ideals(dual_fixture, swap_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    a_ideal = ideal_generated(ring, [2])
    assert not is_delta_ideal(ring, d, a_ideal)
    assert is_delta_ideal(ring, d, Ideal.zero(ring))
    assert is_delta_subset(swap_fixture.ring, swap_fixture.derivation, [0, 2, 4, 6])
    assert not is_delta_subset(swap_fixture.ring, swap_fixture.derivation, [0, 2])


def test_delta_compatibility(dual_fixture, swap_fixture, tri_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    assert delta_compatibility_witness(ring, d, Ideal.zero(ring)) == (2, 2)
    assert not is_delta_compatible(ring, d, Ideal.zero(ring))
    for fixture in (swap_fixture, build_fixture("skewdual_inner")):
        assert fixture.delta_compatible
    # e11*e22 = 0 but e11*d(e22) = e11*e12 = e12
    ring, d = tri_fixture.ring, tri_fixture.derivation
    assert delta_compatibility_witness(ring, d, Ideal.zero(ring)) == (1, 4)
    assert not tri_fixture.delta_compatible


def test_quotient_ring(z4):
    data = quotient_ring(z4, ideal_generated(z4, [2]))
    assert data.quotient.order == 2
    assert list(data.projection) == [0, 1, 0, 1]
    assert validate_ring(data.quotient) == []
    assert data.quotient.element_names == ["0", "1"]
    image = data.image(np.array([False, True, False, False]))
    assert list(np.flatnonzero(image)) == [1]
    assert list(np.flatnonzero(data.preimage(image))) == [1, 3]


def test_quotient_with_derivation(swap_fixture, dual_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    data = quotient_ring(ring, Ideal.from_members(ring, [0, 2, 4, 6]), d)
    assert data.quotient.order == 2
    assert data.induced_derivation.is_zero
    with pytest.raises(NotADeltaIdealError) as info:
        quotient_ring(dual_fixture.ring, ideal_generated(dual_fixture.ring, [2]), dual_fixture.derivation)
    assert (info.value.element, info.value.image) == (2, 1)


def test_enumerate_ideals(z4, tri_fixture):
    assert [i.members for i in enumerate_ideals(z4, 10)] == [(0,), (0, 2), (0, 1, 2, 3)]
    assert enumerate_ideals(z4, 1) is None
    m2 = RingFactory.make_matrix_ring(2, 2)
    assert len(enumerate_ideals(m2, 10)) == 2


def test_subring_of_an_ideal(z8):
    sub = subring(z8, [0, 2, 4, 6])
    assert sub.order == 4
    assert not sub.is_unital
    assert sub.element_names == ["0", "2", "4", "6"]
    assert list(sub.embedding) == [0, 2, 4, 6]
    assert validate_ring(sub) == []
    with pytest.raises(IncompatibleRingsError):
        subring(z8, [0, 1])


@pytest.mark.parametrize("a, index", [(0, 1), (2, 3), (4, 2), (6, 3), (1, None)])
def test_element_nilpotency_index(z8, a, index):
    assert element_nilpotency_index(z8, a) == index
