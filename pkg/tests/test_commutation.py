import pytest
from hypothesis import given, settings, strategies as st

from pdoring.algebra.derivation import Derivation
from pdoring.algebra.ideal import subring
from pdoring.series.binomial import binom_int
from pdoring.series.commutation import commute_pow, conjugation_check, x_power_times
from pdoring.series.laurent_series import PrecisionPolicy, Series

terms = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 7)), min_size=1, max_size=5)


@pytest.mark.parametrize("k, t, expected", [(5, 2, 10), (2, 3, 0), (-1, 3, -1), (-2, 2, 3), (-3, 1, -3), (7, 0, 1)])
def test_binom_int(k, t, expected):
    assert binom_int(k, t) == expected


def test_binom_int_rejects_negative_lower_index():
    with pytest.raises(ValueError):
        binom_int(3, -1)


def test_commute_pow_matches_multiplication(dual_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    for k in (-3, -1, 0, 2):
        for a in ring.elements:
            expected = Series.x_power(ring, d, k) * Series.embed_scalar(ring, d, a)
            assert commute_pow(ring, d, k, a) == expected


def test_commute_pow_truncates_cycling_orbits(swap_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    result = commute_pow(ring, d, -2, 2, policy=PrecisionPolicy(3))
    assert result.floor == -5
    # C(-2, t) = (-1)^t (t + 1): odd multiples survive in characteristic 2
    assert result.terms() == [(-2, 2), (-4, 2)]
    assert commute_pow(ring, d, -2, 2, requested_floor=-3).floor == -3
    assert commute_pow(ring, d, -2, 2, requested_floor=4).floor == -2


def test_x_power_times_needs_no_identity(z8):
    sub = subring(z8, [0, 2, 4, 6])
    f = Series.from_terms(sub, Derivation.zero(sub), [(0, 1), (-1, 2)])
    assert x_power_times(f, 2).terms() == [(2, 1), (1, 2)]
    with pytest.raises(ValueError):
        x_power_times(f, -1)


def test_conjugation_on_a_cycling_orbit(swap_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    f = Series.from_terms(ring, d, [(1, 2), (-1, 6)])
    for j in range(6):
        result = conjugation_check(f, j)
        assert result, (j, str(result.lhs), str(result.rhs))
        assert result.degree is None


def test_conjugation_on_a_truncated_series(dual_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    f = Series.from_terms(ring, d, [(2, 2), (0, 3)], floor=-4)
    result = conjugation_check(f, 2)
    assert result.holds
    assert result.floor == -2


@pytest.mark.parametrize("name", ["tri_fixture", "swap_fixture", "dual_fixture"])
def test_conjugation_identity_on_fixtures(name, request):
    fixture = request.getfixturevalue(name)
    ring, d = fixture.ring, fixture.derivation

    @given(terms, st.integers(0, 5))
    @settings(max_examples=40, deadline=None)
    def check(raw, j):
        f = Series.from_terms(ring, d, [(k, a % ring.order) for k, a in raw])
        assert conjugation_check(f, j).holds

    check()
