"""Exhaustive ground-truth solvers and Stoer-Wagner, for small instances only.

Nothing here shares code with the flow-based solvers beyond the instance
types.  Each enumerator refuses inputs above its cap rather than truncating.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .core import INF, ElementInstance, Hypergraph, WeightedGraph, total_weight

EDGE_CAP = 20
HYPER_CAP = 20
ELEMENT_CAP = 16
VERTEX_CAP = 12


class OracleLimitError(ValueError):
    """Instance exceeds an enumeration cap."""


def _cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise OracleLimitError(f"{what} {size} exceeds the enumeration cap {cap}")


def _side_key(value, side: frozenset):
    return (value, len(side), sorted(side))


def brute_edge_cut(g: WeightedGraph, R: Iterable[int] | None = None, cap: int = EDGE_CAP):
    """Lightest edge cut with terminals of ``R`` on both sides, by trying every bipartition."""
    n = g.n
    _cap(n, cap, "vertex count")
    R = list(range(n)) if R is None else sorted(set(R))
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    best = None
    for mask in range(1, 1 << n):
        if mask >> R[0] & 1 == 0:
            continue  # fix the orientation: first side holds min(R)
        if all(mask >> r & 1 for r in R):
            continue
        value = 0
        for u, v, w in g.edges:
            if (mask >> u & 1) != (mask >> v & 1):
                value = value + w
        side = frozenset(i for i in range(n) if mask >> i & 1)
        key = _side_key(value, side)
        if best is None or key < best[0]:
            best = (key, value, side)
    return best[1], best[2]


def brute_hyper_cut(h: Hypergraph, R: Iterable[int] | None = None, cap: int = HYPER_CAP):
    n = h.n
    _cap(n, cap, "vertex count")
    R = list(range(n)) if R is None else sorted(set(R))
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    masks = [sum(1 << v for v in members) for members, _ in h.hyperedges]
    weights = [w for _, w in h.hyperedges]
    best = None
    for mask in range(1, 1 << n):
        if mask >> R[0] & 1 == 0 or all(mask >> r & 1 for r in R):
            continue
        value = 0
        for em, w in zip(masks, weights):
            inside = em & mask
            if inside and inside != em:
                value = value + w
        side = frozenset(i for i in range(n) if mask >> i & 1)
        key = _side_key(value, side)
        if best is None or key < best[0]:
            best = (key, value, side)
    return best[1], best[2]


def _brute_bipartition(n: int, cost, S: frozenset, T: frozenset):
    best = None
    free = [v for v in range(n) if v not in S and v not in T]
    base = sum(1 << v for v in S)
    for bits in range(1 << len(free)):
        mask = base
        for i, v in enumerate(free):
            if bits >> i & 1:
                mask |= 1 << v
        value = cost(mask)
        side = frozenset(i for i in range(n) if mask >> i & 1)
        key = _side_key(value, side)
        if best is None or key < best[0]:
            best = (key, value, side)
    return best[1], best[2]


def _check_st(S, T):
    S, T = frozenset(S), frozenset(T)
    if not S or not T or S & T:
        raise ValueError("terminal sets must be nonempty and disjoint")
    return S, T


def brute_edge_st_cut(g: WeightedGraph, S: Iterable[int], T: Iterable[int], cap: int = EDGE_CAP):
    """Lightest edge cut with ``S`` on the first side and ``T`` on the second."""
    _cap(g.n, cap, "vertex count")
    S, T = _check_st(S, T)

    def cost(mask):
        return total_weight(w for u, v, w in g.edges if (mask >> u & 1) != (mask >> v & 1))

    return _brute_bipartition(g.n, cost, S, T)


def brute_hyper_st_cut(h: Hypergraph, S: Iterable[int], T: Iterable[int], cap: int = HYPER_CAP):
    _cap(h.n, cap, "vertex count")
    S, T = _check_st(S, T)
    masks = [(sum(1 << v for v in members), w) for members, w in h.hyperedges]

    def cost(mask):
        return total_weight(w for em, w in masks if em & mask and em & mask != em)

    return _brute_bipartition(h.n, cost, S, T)


def _element_setup(inst: ElementInstance, cap: int):
    g = inst.graph
    removable = [x for x in inst.removable() if inst.element_weight(x) != INF]
    _cap(len(inst.non_terminals) + g.m, cap, "element count")
    return g, removable


def _components_without(g: WeightedGraph, n: int, chosen: Iterable[int]) -> list[int]:
    """Component label per vertex after deleting the chosen elements (-1 for deleted vertices)."""
    gone_v = set()
    gone_e = set()
    for x in chosen:
        if x >= n:
            gone_e.add(x - n)
        else:
            gone_v.add(x)
    label = [-1] * n
    nbrs = [[] for _ in range(n)]
    for i, (u, v, _) in enumerate(g.edges):
        if i not in gone_e and u not in gone_v and v not in gone_v:
            nbrs[u].append(v)
            nbrs[v].append(u)
    c = 0
    for s in range(n):
        if s in gone_v or label[s] >= 0:
            continue
        label[s] = c
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if label[y] < 0:
                    label[y] = c
                    stack.append(y)
        c += 1
    return label


def _element_subsets(inst: ElementInstance, removable: list[int]):
    """Every subset of removable elements with its weight, lightest first within each size."""
    for size in range(len(removable) + 1):
        for combo in itertools.combinations(removable, size):
            yield combo, total_weight(inst.element_weight(x) for x in combo)


def brute_element_cut(inst: ElementInstance, S: Iterable[int], Z: Iterable[int], cap: int = ELEMENT_CAP):
    """Lightest set of elements whose removal disconnects every ``s`` in ``S`` from every ``z`` in ``Z``.

    Returns ``(INF, None)`` when no finite set works.
    """
    S, Z = frozenset(S), frozenset(Z)
    if not S or not Z or S & Z:
        raise ValueError("terminal sets must be nonempty and disjoint")
    if not S | Z <= inst.terminals:
        raise ValueError("element cuts separate terminals only")
    g, removable = _element_setup(inst, cap)
    n = inst.n
    best = None
    for combo, value in _element_subsets(inst, removable):
        if best is not None and value >= best[0][0] and len(combo) > best[0][1]:
            continue
        label = _components_without(g, n, combo)
        if {label[s] for s in S} & {label[z] for z in Z}:
            continue
        key = (value, len(combo), sorted(combo))
        if best is None or key < best[0]:
            best = (key, value, frozenset(combo))
    if best is None:
        return INF, None
    return best[1], best[2]


def brute_element_all_pairs(inst: ElementInstance, cap: int = ELEMENT_CAP) -> dict[tuple[int, int], object]:
    """``λ(s, t)`` for every terminal pair ``s < t`` in one pass over element subsets."""
    g, removable = _element_setup(inst, cap)
    n = inst.n
    T = sorted(inst.terminals)
    pairs = list(itertools.combinations(T, 2))
    best = {p: INF for p in pairs}
    for combo, value in _element_subsets(inst, removable):
        label = _components_without(g, n, combo)
        for s, t in pairs:
            if label[s] != label[t] and value < best[(s, t)]:
                best[(s, t)] = value
    return best


def brute_vertex_cut(g: WeightedGraph, cap: int = VERTEX_CAP):
    """Lightest vertex set whose removal leaves at least two components.

    Returns ``(INF, None)`` for complete graphs.
    """
    n = g.n
    _cap(n, cap, "vertex count")
    best = None
    for size in range(n - 1):
        for combo in itertools.combinations(range(n), size):
            value = total_weight(g.vertex_weight(v) for v in combo)
            if best is not None and value >= best[0][0] and size > best[0][1]:
                continue
            label = _components_without(g, n, combo)
            if max(label) < 1:
                continue
            key = (value, size, list(combo))
            if best is None or key < best[0]:
                best = (key, value, frozenset(combo))
    if best is None:
        return INF, None
    return best[1], best[2]


def brute_vertex_st_cut(g: WeightedGraph, s: int, t: int, cap: int = VERTEX_CAP):
    """Lightest vertex set avoiding ``s, t`` that separates them; ``INF`` if adjacent."""
    n = g.n
    _cap(n, cap, "vertex count")
    if t in g.adjacency[s]:
        return INF, None
    others = [v for v in range(n) if v not in (s, t)]
    best = None
    for size in range(len(others) + 1):
        for combo in itertools.combinations(others, size):
            value = total_weight(g.vertex_weight(v) for v in combo)
            if best is not None and value >= best[0]:
                continue
            label = _components_without(g, n, combo)
            if label[s] != label[t]:
                best = (value, frozenset(combo))
    return best


def stoer_wagner(g: WeightedGraph):
    """Global minimum edge cut by maximum-adjacency orderings with contraction.

    Returns ``(value, side)``; ``side`` is a set of original vertices.
    """
    n = g.n
    if n < 2:
        raise ValueError("need at least two vertices")
    w = [dict() for _ in range(n)]
    for u, v, c in g.edges:
        w[u][v] = w[u].get(v, 0) + c
        w[v][u] = w[v].get(u, 0) + c
    groups = {v: {v} for v in range(n)}
    alive = set(range(n))
    best_val, best_side = None, None
    while len(alive) > 1:
        order = sorted(alive)
        start = order[0]
        conn = {v: 0 for v in alive}
        added = {start}
        prev, last = None, start
        for v, c in w[start].items():
            conn[v] += c
        while len(added) < len(alive):
            nxt = max((v for v in alive if v not in added), key=lambda v: (conn[v], -v))
            added.add(nxt)
            prev, last = last, nxt
            for v, c in w[nxt].items():
                if v not in added:
                    conn[v] += c
        phase = conn[last]
        side = frozenset(groups[last])
        if best_val is None or _side_key(phase, side) < _side_key(best_val, best_side):
            best_val, best_side = phase, side
        # merge last into prev
        for v, c in w[last].items():
            if v == prev:
                continue
            w[prev][v] = w[prev].get(v, 0) + c
            w[v][prev] = w[v].get(prev, 0) + c
            del w[v][last]
        w[prev].pop(last, None)
        w[last] = {}
        groups[prev] |= groups.pop(last)
        alive.remove(last)
    return best_val, best_side
