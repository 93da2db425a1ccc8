import pytest

from pdoring.algebra.ideal import ideal_generated, subring
from pdoring.radicals.annihilator import levitzki_equivalence, upper_left_annihilator_series
from pdoring.verify.catalog import FIXTURE_BUILDERS, build_fixture


def test_unital_ring_stops_at_zero(z8):
    series = upper_left_annihilator_series(z8)
    assert [s.members for s in series.stages] == [(0,)]
    assert not series.reached_top
    assert series.stabilization_step == 0
    assert series.delta_stable is None


def test_nilpotent_ideal_reaches_the_top(z8):
    sub = subring(z8, ideal_generated(z8, [2]).members)
    series = upper_left_annihilator_series(sub)
    assert [len(s) for s in series.stages] == [1, 2, 4]
    assert series.reached_top
    assert series.stabilization_step == 2
    assert series.limit.members == tuple(sub.elements)


def test_stages_are_delta_stable_on_delta_ideals(swap_fixture):
    ring, d = swap_fixture.ring, swap_fixture.derivation
    ideal = ideal_generated(ring, [ring.generators["b1"], ring.generators["b2"]])
    sub = subring(ring, ideal.members)
    series = upper_left_annihilator_series(sub, d.restrict(sub))
    assert series.reached_top
    assert series.stabilization_step == 1
    assert series.delta_stable == [True, True]


def test_zero_stage_is_always_delta_stable(dual_fixture):
    ring, d = dual_fixture.ring, dual_fixture.derivation
    series = upper_left_annihilator_series(ring, d)
    assert series.delta_stable == [True]


@pytest.mark.parametrize("name", list(FIXTURE_BUILDERS))
def test_cycle_oracle_agrees_with_annihilators(name):
    fixture = build_fixture(name)
    assert levitzki_equivalence(fixture.ring, fixture.derivation)
