import pytest

from pdoring.algebra.derivation import Derivation, validate_derivation
from pdoring.algebra.ring_factory import RingFactory
from pdoring.errors import DerivationStructureError, NotADeltaIdealError
from pdoring.algebra.ideal import subring


def test_partial_derivative_table(dual_fixture):
    d = dual_fixture.derivation
    assert list(d.table) == [0, 0, 1, 1]
    assert d.name == "partial a"
    assert validate_derivation(dual_fixture.ring, d) == []


def test_partial_on_two_variables():
    ring = RingFactory.make_truncated_poly(2, [2, 2])
    d = Derivation.partial(ring, "a2")
    a1, a2 = ring.generators["a1"], ring.generators["a2"]
    assert d(a2) == ring.one
    assert d(a1) == ring.zero
    # d(a1*a2) = a1
    assert d(ring.mul(a1, a2)) == a1
    assert validate_derivation(ring, d) == []


def test_partial_breaks_leibniz_when_exponent_is_not_a_multiple_of_the_characteristic():
    # a2^3 = 0, yet d(a2)*a2^2 + a2*d(a2^2) = a2^2 in characteristic 2
    ring = RingFactory.make_truncated_poly(2, [2, 3])
    violations = validate_derivation(ring, Derivation.partial(ring, "a2"))
    assert violations
    assert {v.axiom for v in violations} == {"Leibniz rule"}


def test_orbit_that_terminates(dual_fixture):
    orbit = dual_fixture.derivation.orbit(2)
    assert orbit.values == (2, 1, 0)
    assert orbit.cycle_start == 2
    assert orbit.terminates
    assert orbit.nonzero_length() == 2
    assert orbit.term(7) == 0


def test_orbit_that_cycles(swap_fixture):
    orbit = swap_fixture.derivation.orbit(2)
    assert orbit.values == (2, 4)
    assert orbit.cycle_start == 0
    assert not orbit.terminates
    assert orbit.nonzero_length() is None
    assert [orbit.term(t) for t in range(5)] == [2, 4, 2, 4, 2]
    assert swap_fixture.derivation.power(2, 3) == 4


def test_inner_derivation(tri_fixture):
    ring, d = tri_fixture.ring, tri_fixture.derivation
    e11, e12 = ring.generators["e11"], ring.generators["e12"]
    assert d(e11) == e12
    assert d(e12) == ring.zero
    assert d.name == "inner e12"
    assert validate_derivation(ring, d) == []


def test_inner_derivation_of_commutative_ring_is_zero(z4):
    assert Derivation.inner(z4, 3).is_zero


def test_zero_derivation_keeps_no_table(z4):
    d = Derivation.zero(z4)
    assert d.is_zero
    assert d(3) == 0
    assert list(d.table) == [0, 0, 0, 0]


def test_leibniz_violation():
    z2 = RingFactory.make_zn(2)
    violations = validate_derivation(z2, Derivation.from_table(z2, [0, 1]))
    assert [v.axiom for v in violations] == ["Leibniz rule"]


def test_additivity_violation(z4):
    violations = validate_derivation(z4, Derivation.from_table(z4, [0, 1, 0, 0]))
    assert violations[0].axiom == "additivity"


def test_table_length_must_match(z4):
    with pytest.raises(DerivationStructureError):
        Derivation.from_table(z4, [0, 0])
    with pytest.raises(DerivationStructureError):
        Derivation.from_table(z4, [0, 0, 0, 9])


def test_partial_needs_polynomial_generator(z4, tri_fixture):
    with pytest.raises(DerivationStructureError):
        Derivation.partial(z4, "a")
    with pytest.raises(DerivationStructureError):
        Derivation.partial(tri_fixture.ring, "e12")


def test_product_derivation():
    z4 = RingFactory.make_zn(4)
    dual = RingFactory.make_truncated_poly(2, [2])
    ring = RingFactory.make_product(z4, dual)
    d = Derivation.product(ring, Derivation.zero(z4), Derivation.partial(dual, "a"))
    a = ring.generators["a_2"]
    assert d(a) == ring.generators["e2"]
    assert validate_derivation(ring, d) == []
    with pytest.raises(DerivationStructureError):
        Derivation.product(z4, Derivation.zero(z4), Derivation.zero(z4))


def test_restrict_to_delta_subset(swap_fixture, dual_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    radical = subring(ring, [0, 2, 4, 6])
    restricted = d.restrict(radical)
    assert restricted.ring is radical
    assert validate_derivation(radical, restricted) == []
    with pytest.raises(NotADeltaIdealError):
        dual_fixture.derivation.restrict(subring(dual_fixture.ring, [0, 2]))
