from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np


@dataclass(frozen=True)
class TNilpVerdict:
    """
    Outcome of the left T-nilpotency oracle.

    A negative verdict carries ``cycle``: a sequence s₁..s_r from S whose prefix
    products are all nonzero and whose last prefix product repeats the one at
    position ``cycle_start``, so the sequence can be extended forever. A
    positive verdict carries ``bound``: every product of ``bound`` elements of
    S is zero.
    """
    verdict: bool
    elements: Tuple[int, ...]
    cycle: Optional[Tuple[int, ...]] = None
    cycle_start: Optional[int] = None
    bound: Optional[int] = None

    def __bool__(self):
        return self.verdict

    def prefix_products(self, ring) -> List[int]:
        products, value = [], None
        for s in self.cycle or ():
            value = s if value is None else ring.mul(value, s)
            products.append(value)
        return products

    def check(self, ring) -> bool:
        """Replay the witness against ``ring``."""
        members = set(self.elements)
        if not self.verdict:
            if not self.cycle or not set(self.cycle) <= members:
                return False
            products = self.prefix_products(ring)
            return (all(p != ring.zero for p in products)
                    and len(products) > self.cycle_start + 1
                    and products[-1] == products[self.cycle_start])
        level = {s for s in members if s != ring.zero}
        for _ in range(self.bound - 1):
            level = {ring.mul(v, s) for v in level for s in members} - {ring.zero}
        return not level

    def describe(self, ring) -> str:
        if self.verdict:
            return f"left T-nilpotent; bound L={self.bound}"
        names = " -> ".join(ring.element_name(s) for s in self.cycle)
        return f"NOT left T-nilpotent; cycle: {names}"


def product_graph(ring, elements: Iterable[int]) -> nx.DiGraph:
    """
    Nonzero prefix products s₁s₂⋯ reachable from S, with an edge v → v·s
    (attribute ``factor`` = s) whenever v·s ≠ 0.
    """
    S = sorted({int(s) for s in elements})
    graph = nx.DiGraph()
    starts = [s for s in S if s != ring.zero]
    graph.add_nodes_from(starts, start=True)
    queue = list(starts)
    seen = set(starts)
    S_arr = np.array(S, dtype=np.int64)
    while queue:
        v = queue.pop()
        if ring.has_tables:
            images = ring.mul_table[v, S_arr] if len(S_arr) else []
        else:
            images = [ring.mul(v, s) for s in S]
        for s, w in zip(S, images):
            w = int(w)
            if w == ring.zero or graph.has_edge(v, w):
                continue
            graph.add_edge(v, w, factor=s)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return graph


def is_left_t_nilpotent(ring, elements: Iterable[int]) -> TNilpVerdict:
    """
    Decide whether every sequence from S has a zero prefix product.

    S fails exactly when some reachable nonzero product lies on a cycle of the
    product graph. Otherwise the graph is acyclic and a longest path of ℓ
    edges bounds nonzero products to ℓ+1 factors.
    """
    S = tuple(sorted({int(s) for s in elements}))
    graph = product_graph(ring, S)
    if graph.number_of_nodes() == 0:
        return TNilpVerdict(True, S, bound=1)
    try:
        cycle_edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return TNilpVerdict(True, S, bound=nx.dag_longest_path_length(graph) + 2)
    entry = cycle_edges[0][0]
    starts = sorted(n for n, start in graph.nodes(data="start") if start)
    origin = next(s for s in starts if nx.has_path(graph, s, entry))
    path = nx.shortest_path(graph, origin, entry)
    factors = [origin] + [graph.edges[u, v]["factor"] for u, v in zip(path, path[1:])]
    cycle_start = len(factors) - 1
    factors += [graph.edges[u, v]["factor"] for u, v in cycle_edges]
    return TNilpVerdict(False, S, cycle=tuple(factors), cycle_start=cycle_start)


def right_ideal_set(ring, a: int) -> Tuple[int, ...]:
    """The set aR."""
    return tuple(sorted({int(v) for v in ring.mul_table[a, :]}))


def right_ideal_tnilpotent(ring, a: int) -> TNilpVerdict:
    """Whether aR is left T-nilpotent."""
    return is_left_t_nilpotent(ring, right_ideal_set(ring, a))
