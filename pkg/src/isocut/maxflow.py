"""Exact s-t maximum flow by blocking flows (Dinic) on integer capacities.

Capacities are ints or ``INF``.  Arcs are stored in pairs: arc ``2*j`` is
the ``j``-th arc added and ``2*j + 1`` its zero-capacity reverse, so
``a ^ 1`` is always the partner of ``a``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import INF, Weight


class FlowNetwork:
    """Directed capacitated network with a designated source and sink."""

    __slots__ = ("n", "source", "sink", "head", "cap", "adj")

    def __init__(self, n: int, source: int, sink: int):
        self.n = n
        self.source = source
        self.sink = sink
        self.head: list[int] = []
        self.cap: list[Weight] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_node(self) -> int:
        self.adj.append([])
        self.n += 1
        return self.n - 1

    def add_arc(self, tail: int, head: int, capacity: Weight) -> int:
        """Add ``tail -> head``; returns the index ``j`` of the arc (its id is ``2*j``)."""
        if capacity < 0:
            raise ValueError("negative capacity")
        j = len(self.head) // 2
        self.head.append(head)
        self.cap.append(capacity)
        self.adj[tail].append(2 * j)
        self.head.append(tail)
        self.cap.append(0)
        self.adj[head].append(2 * j + 1)
        return j

    @property
    def num_arcs(self) -> int:
        return len(self.head) // 2

    def arcs(self):
        """Yield ``(tail, head, capacity)`` for every added arc in insertion order."""
        for j in range(self.num_arcs):
            yield self.head[2 * j + 1], self.head[2 * j], self.cap[2 * j]


@dataclass(frozen=True)
class FlowResult:
    """Outcome of :func:`max_flow`.

    ``source_side`` is the set of nodes reachable from the source in the
    final residual network and ``sink_side`` the set that can reach the
    sink; these are the inclusion-minimal sides among all minimum cuts.
    When ``value`` is ``INF`` the run stopped at the first path of
    unbounded capacity and both sides contain source and sink.
    """

    value: Weight
    flow: tuple[Weight, ...]
    source_side: frozenset
    sink_side: frozenset
    max_augmenting_path_length: int
    phases: int


def max_flow(net: FlowNetwork) -> FlowResult:
    s, t = net.source, net.sink
    if s == t:
        raise ValueError("source and sink coincide")
    n = net.n
    head = net.head
    adj = net.adj
    res = list(net.cap)
    value: Weight = 0
    longest = 0
    phases = 0
    unbounded = False

    while True:
        level = [-1] * n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            lu = level[u] + 1
            for a in adj[u]:
                v = head[a]
                if level[v] < 0 and res[a] > 0:
                    level[v] = lu
                    q.append(v)
        if level[t] < 0:
            break
        phases += 1
        if level[t] > longest:
            longest = level[t]

        it = [0] * n
        path: list[int] = []
        u = s
        while True:
            if u == t:
                push = min(res[a] for a in path)
                if push == INF:
                    unbounded = True
                    break
                for a in path:
                    res[a] -= push
                    res[a ^ 1] += push
                value += push
                # Resume from the tail of the first saturated arc.
                k = next(i for i, a in enumerate(path) if res[a] == 0)
                del path[k:]
                u = head[path[-1]] if path else s
                continue
            arcs = adj[u]
            i = it[u]
            lu = level[u] + 1
            while i < len(arcs):
                a = arcs[i]
                if res[a] > 0 and level[head[a]] == lu:
                    break
                i += 1
            it[u] = i
            if i < len(arcs):
                a = arcs[i]
                path.append(a)
                u = head[a]
            else:
                level[u] = -1  # dead end for the rest of this phase
                if not path:
                    break
                a = path.pop()
                u = head[a ^ 1]
                it[u] += 1
        if unbounded:
            value = INF
            break

    source_side = _reach_forward(n, s, head, adj, res)
    sink_side = _reach_backward(n, t, head, adj, res)
    m = len(head) // 2
    flow = tuple(res[2 * j + 1] for j in range(m))
    return FlowResult(value, flow, source_side, sink_side, longest, phases)


def _reach_forward(n, s, head, adj, res) -> frozenset:
    seen = [False] * n
    seen[s] = True
    stack = [s]
    while stack:
        u = stack.pop()
        for a in adj[u]:
            v = head[a]
            if not seen[v] and res[a] > 0:
                seen[v] = True
                stack.append(v)
    return frozenset(i for i in range(n) if seen[i])


def _reach_backward(n, t, head, adj, res) -> frozenset:
    seen = [False] * n
    seen[t] = True
    stack = [t]
    while stack:
        v = stack.pop()
        for a in adj[v]:
            # a goes v -> u, so a ^ 1 is the arc u -> v.
            u = head[a]
            if not seen[u] and res[a ^ 1] > 0:
                seen[u] = True
                stack.append(u)
    return frozenset(i for i in range(n) if seen[i])


def min_cut_sides(result: FlowResult) -> tuple[frozenset, frozenset]:
    """The inclusion-minimal source side and inclusion-minimal sink side."""
    return result.source_side, result.sink_side


def cut_capacity(net: FlowNetwork, side: frozenset) -> Weight:
    """Total capacity of arcs leaving ``side``."""
    total: Weight = 0
    for tail, head, cap in net.arcs():
        if tail in side and head not in side:
            total = total + cap
    return total
