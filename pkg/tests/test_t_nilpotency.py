import networkx as nx
from hypothesis import given, settings, strategies as st

from pdoring.algebra.ring_factory import RingFactory
from pdoring.radicals.t_nilpotency import (is_left_t_nilpotent, product_graph, right_ideal_set,
                                           right_ideal_tnilpotent)


def test_unit_cycles(z4):
    verdict = is_left_t_nilpotent(z4, [1])
    assert not verdict
    assert verdict.cycle == (1, 1)
    assert verdict.cycle_start == 0
    assert verdict.check(z4)
    assert verdict.describe(z4) == "NOT left T-nilpotent; cycle: 1 -> 1"


def test_nilpotent_element_has_bound(z4):
    verdict = is_left_t_nilpotent(z4, [2])
    assert verdict
    assert verdict.bound == 2
    assert verdict.check(z4)
    assert verdict.describe(z4) == "left T-nilpotent; bound L=2"


def test_bound_is_longest_path_plus_two(z8):
    verdict = is_left_t_nilpotent(z8, [2, 4])
    assert verdict.bound == 3
    assert verdict.check(z8)
    assert is_left_t_nilpotent(z8, [2, 4, 6]).bound == 3


def test_zero_set(z4):
    verdict = is_left_t_nilpotent(z4, [0])
    assert verdict.bound == 1
    assert verdict.check(z4)
    assert is_left_t_nilpotent(z4, []).verdict


def test_witness_reaches_cycle_through_a_path(z4):
    verdict = is_left_t_nilpotent(z4, [2, 3])
    assert not verdict
    products = verdict.prefix_products(z4)
    assert all(p != 0 for p in products)
    assert products[-1] == products[verdict.cycle_start]
    assert verdict.check(z4)


def test_product_graph_edges(z8):
    graph = product_graph(z8, [2, 3])
    assert graph.has_edge(2, 4)
    assert graph.edges[2, 4]["factor"] == 2
    assert graph.has_edge(3, 1)
    assert not graph.has_node(0)
    assert not nx.is_directed_acyclic_graph(graph)


def test_noncommutative_witness(tri_fixture):
    ring = tri_fixture.ring
    e11, e12 = ring.generators["e11"], ring.generators["e12"]
    assert is_left_t_nilpotent(ring, [e12, e11]).verdict is False
    assert is_left_t_nilpotent(ring, [e12]).verdict


def test_right_ideals(z8):
    assert right_ideal_set(z8, 2) == (0, 2, 4, 6)
    assert right_ideal_tnilpotent(z8, 2).bound == 3
    assert not right_ideal_tnilpotent(z8, 3)


def test_coordinate_ring_without_tables():
    algebra = RingFactory.truncated_poly_algebra(2, [2, 3, 4])
    gens = list(algebra.generators.values())
    assert is_left_t_nilpotent(algebra, gens).verdict
    assert not is_left_t_nilpotent(algebra, [algebra.one]).verdict


@given(st.sets(st.integers(0, 7)))
@settings(max_examples=80, deadline=None)
def test_witnesses_replay_and_subsets_inherit(tri_fixture, members):
    ring = tri_fixture.ring
    verdict = is_left_t_nilpotent(ring, members)
    assert verdict.check(ring)
    if verdict:
        for s in members:
            assert is_left_t_nilpotent(ring, members - {s}).verdict
