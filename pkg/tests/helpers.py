"""Instance generators and small named graphs shared by the test modules."""

from __future__ import annotations

import itertools
import random

from isocut.core import ElementInstance, Hypergraph, WeightedGraph
from isocut.maxflow import FlowNetwork


def graph(n, edges, vertex_weights=None):
    return WeightedGraph.from_edges(n, edges, vertex_weights)


def dumbbell() -> WeightedGraph:
    """Two unit triangles {0,1,2} and {3,4,5} joined by the bridge 2-3."""
    return graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def cycle(n) -> WeightedGraph:
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n) -> WeightedGraph:
    return graph(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite(a, b) -> WeightedGraph:
    return graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves) -> WeightedGraph:
    return graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> WeightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph(10, outer + spokes + inner)


def random_graph(rng: random.Random, n: int, p: float, wmax: int = 1, connected: bool = False, vmax: int | None = None) -> WeightedGraph:
    edges = {}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges[(u, v)] = rng.randint(1, wmax)
    if connected:
        for v in range(1, n):
            u = rng.randrange(v)
            edges.setdefault((u, v), rng.randint(1, wmax))
    vw = None if vmax is None else [rng.randint(1, vmax) for _ in range(n)]
    return WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in edges.items()], vw)


def random_hypergraph(rng: random.Random, n: int, m: int, wmax: int = 5) -> Hypergraph:
    edges = []
    for _ in range(m):
        k = rng.randint(2, min(n, 4))
        edges.append((rng.sample(range(n), k), rng.randint(1, wmax)))
    h, _ = Hypergraph.from_edges(n, edges)
    return h


def random_element_instance(rng: random.Random, max_elements: int = 14, wmax: int = 3) -> ElementInstance:
    """Random instance with at most ``max_elements`` removable elements and at least two terminals."""
    while True:
        n = rng.randint(3, 7)
        t = rng.randint(2, n)
        terminals = frozenset(rng.sample(range(n), t))
        budget = max_elements - (n - t)
        if budget < 1:
            continue
        pairs = list(itertools.combinations(range(n), 2))
        rng.shuffle(pairs)
        m = rng.randint(1, min(budget, len(pairs)))
        edges = [(u, v, rng.randint(1, wmax)) for u, v in pairs[:m]]
        vw = [rng.randint(1, wmax) for _ in range(n)]
        return ElementInstance(WeightedGraph.from_edges(n, edges, vw), terminals)


def random_network(rng: random.Random, n: int, capmax: int = 10, p: float = 0.35) -> FlowNetwork:
    net = FlowNetwork(n, 0, n - 1)
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                net.add_arc(u, v, rng.randint(0, capmax))
    return net


def brute_network_cut(net: FlowNetwork):
    """Minimum capacity over all node sets containing the source but not the sink,
    and the list of all source sides attaining it."""
    others = [v for v in range(net.n) if v not in (net.source, net.sink)]
    arcs = list(net.arcs())
    best, sides = None, []
    for k in range(len(others) + 1):
        for combo in itertools.combinations(others, k):
            side = frozenset(combo) | {net.source}
            cap = 0
            for a, b, c in arcs:
                if a in side and b not in side:
                    cap = cap + c
            if best is None or cap < best:
                best, sides = cap, [side]
            elif cap == best:
                sides.append(side)
    return best, sides

