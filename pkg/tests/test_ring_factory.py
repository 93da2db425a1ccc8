import pytest

from pdoring.algebra.finite_ring import validate_ring
from pdoring.algebra.ring_factory import RingFactory
from pdoring.errors import RingSizeError, RingStructureError


def test_dual_numbers_names_and_generators():
    ring = RingFactory.make_truncated_poly(2, [2])
    assert ring.name == "Z2[a]/(a^2)"
    assert ring.element_names == ["0", "1", "a", "1+a"]
    assert ring.generators == {"a": 2}
    assert ring.one == 1
    assert ring.mul(2, 2) == 0
    assert ring.mul(3, 3) == 1


def test_two_variable_truncation_names():
    ring = RingFactory.make_truncated_poly(2, [2, 3])
    assert ring.order == 64
    basis = [ring.coordinate_ring.coords_name(row) for row in
             [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0],
              [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]]
    assert basis == ["1", "a2", "a2^2", "a1", "a1*a2", "a1*a2^2"]
    a1, a2 = ring.generators["a1"], ring.generators["a2"]
    assert ring.mul(a1, a1) == 0
    assert ring.mul(a2, ring.mul(a2, a2)) == 0
    assert ring.element_name(ring.mul(a1, ring.mul(a2, a2))) == "a1*a2^2"


@pytest.mark.parametrize("build, order, commutative", [
    (lambda: RingFactory.make_triangular_matrix_ring(2, 2), 8, False),
    (lambda: RingFactory.make_matrix_ring(2, 2), 16, False),
    (lambda: RingFactory.make_trivial_extension(2, 2), 8, True),
    (lambda: RingFactory.make_skew_dual_numbers(), 16, False),
    (lambda: RingFactory.make_truncated_poly(2, [2, 3]), 64, True),
    (lambda: RingFactory.make_product(RingFactory.make_zn(4), RingFactory.make_truncated_poly(2, [2])), 16, True),
])
def test_constructed_rings_satisfy_the_axioms(build, order, commutative):
    ring = build()
    assert ring.order == order
    assert ring.is_commutative == commutative
    assert ring.is_unital
    assert validate_ring(ring) == []


def test_triangular_units():
    ring = RingFactory.make_triangular_matrix_ring(2, 2)
    g = ring.generators
    assert set(g) == {"e11", "e12", "e22"}
    assert ring.mul(g["e11"], g["e12"]) == g["e12"]
    assert ring.mul(g["e12"], g["e11"]) == ring.zero
    assert ring.one == ring.add(g["e11"], g["e22"])


def test_skew_dual_numbers_twist():
    ring = RingFactory.make_skew_dual_numbers()
    w, t = ring.generators["w"], ring.generators["t"]
    assert ring.mul(t, t) == ring.zero
    assert ring.mul(t, w) == ring.mul(ring.mul(w, w), t)
    assert ring.mul(t, w) != ring.mul(w, t)


def test_product_ring_layout():
    z2 = RingFactory.make_zn(2)
    ring = RingFactory.make_product(z2, z2)
    assert ring.element_names == ["(0, 0)", "(0, 1)", "(1, 0)", "(1, 1)"]
    assert ring.one == 3
    assert ring.generators == {"e1": 2, "e2": 1}
    assert ring.factors == (z2, z2)


def test_coordinate_ring_without_tables():
    algebra = RingFactory.truncated_poly_algebra(2, [2, 3, 4])
    assert algebra.order == 2 ** 24
    assert not algebra.has_tables
    a1, a3 = algebra.generators["a1"], algebra.generators["a3"]
    assert algebra.mul(a1, a1) == algebra.zero
    cube = algebra.mul(a3, algebra.mul(a3, a3))
    assert cube != algebra.zero
    assert algebra.mul(cube, a3) == algebra.zero
    with pytest.raises(RingSizeError):
        algebra.materialize()


def test_bad_parameters():
    with pytest.raises(RingStructureError):
        RingFactory.make_zn(0)
    with pytest.raises(RingStructureError):
        RingFactory.truncated_poly_algebra(2, [0])
    with pytest.raises(RingSizeError):
        RingFactory.make_matrix_ring(2, 4)
