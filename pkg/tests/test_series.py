import pytest
from hypothesis import given, settings, strategies as st

from pdoring.errors import IncompatibleRingsError, NonUnitalRingError, PrecisionError
from pdoring.algebra.derivation import Derivation
from pdoring.algebra.ring_factory import RingFactory
from pdoring.series.laurent_series import UNKNOWN, PrecisionPolicy, Series, commute_terms

ONE, A, ONE_PLUS_A = 1, 2, 3

terms = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 3)), max_size=4)


def test_x_times_a(dual_series):
    x, a = dual_series((1, ONE)), dual_series((0, A))
    assert str(x * a) == "a*x + 1"
    assert str(a * x) == "a*x"


def test_x_inverse_times_a(dual_series):
    product = dual_series((-1, ONE)) * dual_series((0, A))
    assert product.exact
    assert str(product) == "a*x^-1 + x^-2"


def test_x_inverse_times_x(dual_series):
    assert str(dual_series((-1, ONE)) * dual_series((1, ONE))) == "1"


def test_power(dual_series):
    ax = dual_series((1, A))
    assert str(ax ** 2) == "a*x"
    assert str(ax ** 0) == "1"
    with pytest.raises(ValueError):
        ax ** -1


def test_printing(dual_series):
    assert str(dual_series()) == "0"
    assert str(dual_series((0, ONE_PLUS_A))) == "1+a"
    assert str(dual_series((1, ONE_PLUS_A))) == "(1+a)*x"
    assert str(dual_series((1, ONE_PLUS_A), (0, ONE_PLUS_A))) == "(1+a)*x + (1+a)"
    assert str(dual_series((2, A), (-3, ONE))) == "a*x^2 + x^-3"
    assert str(dual_series((1, A), floor=-2)) == "a*x + O(x^-3)"


def test_truncated_expansion_of_a_cycling_orbit(swap_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    policy = PrecisionPolicy(4)
    product = Series.x_power(ring, d, -1, policy) * Series.embed_scalar(ring, d, 2, policy)
    assert not product.exact
    assert product.floor == -5
    assert str(product) == "b1*x^-1 + b2*x^-2 + b1*x^-3 + b2*x^-4 + b1*x^-5 + O(x^-6)"
    assert product.coefficient_at(-6) is UNKNOWN
    assert product.coefficient_at(-4) == 4


def test_requested_floor(swap_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    x_inv, b1 = Series.x_power(ring, d, -1), Series.embed_scalar(ring, d, 2)
    assert x_inv.mul(b1, floor=-3).floor == -3
    assert len(x_inv.mul(b1, floor=-3).terms()) == 3


def test_truncated_inputs_bound_the_product(dual_series):
    f = dual_series((1, ONE), floor=-2)
    g = dual_series((0, A))
    product = f * g
    assert product.floor == -2
    assert product.guaranteed_floor == -2


def test_big_o_and_addition(dual_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    big_o = Series.big_o(ring, d, -3)
    assert big_o.floor == -2
    assert str(big_o) == "O(x^-3)"
    total = Series.x_power(ring, d, 1) + big_o
    assert str(total) == "x + O(x^-3)"
    assert total.is_zero_to_floor() is False


def test_truncated_equality_needs_a_floor(dual_series):
    f = dual_series((1, A), floor=-2)
    g = dual_series((1, A), (-5, ONE), floor=-4)
    with pytest.raises(PrecisionError):
        f == g
    assert f.equal_to_floor(g, -2)
    with pytest.raises(PrecisionError):
        f.equal_to_floor(g, -3)


def test_first_difference(dual_series):
    f, g = dual_series((2, A), (0, ONE)), dual_series((2, A), (-1, ONE))
    assert f.first_difference(g, None) == 0
    assert f.first_difference(g, 1) is None


def test_shift_scale_truncate(dual_series, z4):
    f = dual_series((1, A), (-1, ONE))
    assert str(f.shift(2)) == "a*x^3 + x"
    assert str(f.scale(2)) == "0"
    assert str(f.truncate(0)) == "a*x + O(x^-1)"
    with pytest.raises(PrecisionError):
        dual_series((1, A), floor=0).truncate(-3)
    d = Derivation.zero(z4)
    assert str(3 * Series.embed_scalar(z4, d, 3)) == "1"


def test_delta_is_coefficientwise(dual_series):
    f = dual_series((2, A), (0, ONE))
    assert str(f.delta()) == "x^2"
    assert str(f.delta(2)) == "0"
    with pytest.raises(ValueError):
        f.delta(-1)


def test_leading(dual_series):
    assert dual_series((3, A), (1, ONE)).leading() == (3, A)
    assert dual_series().leading() == (None, 0)
    with pytest.raises(PrecisionError):
        dual_series(floor=0).leading()


def test_series_over_different_rings_do_not_mix(dual_series, z4):
    other = Series.embed_scalar(z4, Derivation.zero(z4), 1)
    with pytest.raises(IncompatibleRingsError):
        dual_series((0, ONE)) + other
    with pytest.raises(IncompatibleRingsError):
        Series(z4, Derivation.zero(RingFactory.make_zn(4)))


def test_nonunital_ring_has_no_x():
    ring = RingFactory.make_table_ring([[0, 1], [1, 0]], [[0, 0], [0, 0]])
    with pytest.raises(NonUnitalRingError):
        Series.x_power(ring, Derivation.zero(ring), 1)


def test_commute_terms_needs_a_limit_for_infinite_expansions(swap_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    with pytest.raises(PrecisionError):
        list(commute_terms(ring, d, -1, 2, None))
    assert list(commute_terms(ring, d, -1, 2, -2)) == [(-1, 2), (-2, 4)]


def test_relation_x_a_on_every_element(dual_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    x = Series.x_power(ring, d, 1)
    for a in ring.elements:
        expected = Series.from_terms(ring, d, [(1, a), (0, d(a))])
        assert x * Series.embed_scalar(ring, d, a) == expected


@given(terms, terms, terms)
@settings(max_examples=60, deadline=None)
def test_associativity_and_distributivity(dual_fixture, f_terms, g_terms, h_terms):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    f, g, h = (Series.from_terms(ring, d, t) for t in (f_terms, g_terms, h_terms))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f - f == Series.zero(ring, d)
