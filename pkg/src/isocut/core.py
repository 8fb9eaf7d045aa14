"""Instance types for the four connectivity problems and the cut certificate.

Weights are exact: a nonnegative ``int`` or the float ``INF``.  Python's
``int + inf == inf`` and the total order between ints and ``inf`` give the
saturating arithmetic the solvers rely on, so no wrapper type is needed.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence, Union

from .setpair import SetPair

INF = math.inf
Weight = Union[int, float]

#: Finite weights of one instance must sum below this bound.
MAX_FINITE_TOTAL = 2**63 - 1


class InstanceError(ValueError):
    """An instance violates its structural invariants."""


def is_inf(w: Weight) -> bool:
    return w == INF


def check_weight(w: Any) -> Weight:
    """Return ``w`` if it is a valid weight, else raise ``InstanceError``."""
    if isinstance(w, bool):
        raise InstanceError(f"weight must be an integer or inf, got {w!r}")
    if isinstance(w, int):
        if w < 0:
            raise InstanceError(f"negative weight {w}")
        return w
    if isinstance(w, float) and w == INF:
        return INF
    raise InstanceError(f"weight must be an integer or inf, got {w!r}")


def total_weight(weights: Iterable[Weight]) -> Weight:
    total = 0
    for w in weights:
        total = total + w
    return total


def _check_total(weights: Iterable[Weight]) -> None:
    finite = sum(w for w in weights if w != INF)
    if finite > MAX_FINITE_TOTAL:
        raise InstanceError("sum of finite weights overflows a 64-bit integer")


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected graph on vertices ``0..n-1``.

    ``edges`` holds ``(u, v, w)`` with ``u < v``, sorted, one entry per
    vertex pair; use :meth:`from_edges` to merge parallel edges.
    ``vertex_weights`` is ``None`` for graphs without vertex weights.
    """

    n: int
    edges: tuple[tuple[int, int, Weight], ...]
    vertex_weights: tuple[Weight, ...] | None = None
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.n))
        if len(self.labels) != self.n:
            raise InstanceError("label table does not match vertex count")
        seen = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InstanceError(f"edge ({u}, {v}) has a vertex id outside [0, {self.n})")
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            if u > v or (u, v) in seen:
                raise InstanceError("edges must be canonical; build with WeightedGraph.from_edges")
            seen.add((u, v))
            check_weight(w)
        if self.vertex_weights is not None:
            if len(self.vertex_weights) != self.n:
                raise InstanceError("vertex weight table does not match vertex count")
            for w in self.vertex_weights:
                check_weight(w)
        _check_total([w for _, _, w in self.edges] + list(self.vertex_weights or ()))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence],
        vertex_weights: Sequence[Weight] | Mapping[int, Weight] | None = None,
        labels: Sequence[str] = (),
    ) -> "WeightedGraph":
        """Build a graph, merging parallel edges additively.

        Edges may be given as ``(u, v)`` (weight 1) or ``(u, v, w)``.
        """
        merged: dict[tuple[int, int], Weight] = defaultdict(int)
        for e in edges:
            u, v = int(e[0]), int(e[1])
            w = check_weight(e[2]) if len(e) > 2 else 1
            if u == v:
                raise InstanceError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged[key] + w
        if isinstance(vertex_weights, Mapping):
            table = [1] * n
            for v, w in vertex_weights.items():
                table[v] = w
            vertex_weights = table
        vw = tuple(vertex_weights) if vertex_weights is not None else None
        return cls(
            n,
            tuple(sorted((u, v, w) for (u, v), w in merged.items())),
            vw,
            tuple(labels),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj: list[set] = [set() for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Indices into ``edges`` of the edges incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def vertex_weight(self, v: int) -> Weight:
        return 1 if self.vertex_weights is None else self.vertex_weights[v]

    def weighted_degree(self, v: int) -> Weight:
        return total_weight(self.edges[i][2] for i in self.incident[v])

    def components(self, removed_vertices: Iterable[int] = (), removed_edges: Iterable[int] = ()) -> list[frozenset]:
        """Connected components after deleting the given vertices and edge indices."""
        gone = set(removed_vertices)
        dead = set(removed_edges)
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            if i not in dead and u not in gone and v not in gone:
                nbrs[u].append(v)
                nbrs[v].append(u)
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def with_vertex_weights(self, weights: Sequence[Weight]) -> "WeightedGraph":
        return WeightedGraph(self.n, self.edges, tuple(weights), self.labels)


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph on ``0..n-1``; each hyperedge is ``(members, w)`` with ``len(members) >= 2``."""

    n: int
    hyperedges: tuple[tuple[frozenset, Weight], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", _default_labels(self.n))
        if len(self.labels) != self.n:
            raise InstanceError("label table does not match vertex count")
        for members, w in self.hyperedges:
            if len(members) < 2:
                raise InstanceError("hyperedges need at least two members")
            if any(not 0 <= v < self.n for v in members):
                raise InstanceError(f"hyperedge {sorted(members)} has a vertex id outside [0, {self.n})")
            check_weight(w)
        _check_total(w for _, w in self.hyperedges)

    @classmethod
    def from_edges(cls, n: int, hyperedges: Iterable[tuple[Iterable[int], Weight]], labels: Sequence[str] = ()) -> tuple["Hypergraph", list[int]]:
        """Build a hypergraph; returns it with the input positions of dropped singleton edges."""
        kept, dropped = [], []
        for i, (members, w) in enumerate(hyperedges):
            members = frozenset(int(v) for v in members)
            if len(members) < 2:
                dropped.append(i)
                continue
            kept.append((members, check_weight(w)))
        return cls(n, tuple(kept), tuple(labels)), dropped

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    @property
    def p(self) -> int:
        return sum(len(members) for members, _ in self.hyperedges)

    def cut_weight(self, side: Iterable[int]) -> Weight:
        side = frozenset(side)
        return total_weight(w for members, w in self.hyperedges if members & side and members - side)

    def components(self, removed_edges: Iterable[int] = ()) -> list[frozenset]:
        dead = set(removed_edges)
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (members, _) in enumerate(self.hyperedges):
            if i in dead:
                continue
            it = iter(members)
            root = find(next(it))
            for v in it:
                rv = find(v)
                if rv != root:
                    parent[rv] = root
        groups: dict[int, set] = defaultdict(set)
        for v in range(self.n):
            groups[find(v)].add(v)
        return sorted((frozenset(g) for g in groups.values()), key=min)


@dataclass(frozen=True)
class ElementInstance:
    """Element-connectivity instance: a graph plus its terminal set.

    Elements are numbered so vertices keep their own ids and edge ``i`` of
    ``graph.edges`` is element ``n + i``.  Terminals are never removable;
    non-terminals weigh ``graph.vertex_weight(v)`` (1 when unweighted).
    """

    graph: WeightedGraph
    terminals: frozenset

    def __post_init__(self):
        if not isinstance(self.terminals, frozenset):
            object.__setattr__(self, "terminals", frozenset(self.terminals))
        if any(not 0 <= t < self.graph.n for t in self.terminals):
            raise InstanceError("terminal id out of range")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def non_terminals(self) -> frozenset:
        return frozenset(range(self.n)) - self.terminals

    @property
    def num_elements(self) -> int:
        return self.n + self.m

    def edge_element(self, i: int) -> int:
        return self.n + i

    def is_edge(self, x: int) -> bool:
        return x >= self.n

    def element_weight(self, x: int) -> Weight:
        """Removal cost of element ``x``; terminals are unremovable (``INF``)."""
        if x >= self.n:
            return self.graph.edges[x - self.n][2]
        if x in self.terminals:
            return INF
        return self.graph.vertex_weight(x)

    def removable(self) -> list[int]:
        return sorted(self.non_terminals) + [self.n + i for i in range(self.m)]

    def objective(self, pair: SetPair) -> Weight:
        """Total weight of the elements in neither component of ``pair``."""
        covered = pair.first | pair.second
        return total_weight(self.element_weight(x) for x in range(self.num_elements) if x not in covered)

    def in_lattice(self, pair: SetPair) -> bool:
        """Membership in the element lattice: no edge of one side touches a vertex
        of the other side, and every terminal lies in one of the sides."""
        if not self.terminals <= pair.first | pair.second:
            return False
        n = self.n
        for a, b in ((pair.first, pair.second), (pair.second, pair.first)):
            for x in a:
                if x >= n:
                    u, v, _ = self.graph.edges[x - n]
                    if u in b or v in b:
                        return False
        return True

    def describe_element(self, x: int) -> tuple[str, ...]:
        labels = self.graph.labels
        if x >= self.n:
            u, v, _ = self.graph.edges[x - self.n]
            return (labels[u], labels[v])
        return (labels[x],)


@dataclass(frozen=True)
class CutCertificate:
    """A cut, checkable against its instance with ``verify_certificate``.

    ``kind`` is one of ``"edge"``, ``"hyper"``, ``"element"``, ``"vertex"``.
    ``removed`` holds edge pairs ``(u, v)``, hyperedge indices, element ids
    or vertex ids respectively; ``side_pair`` is over vertices except for
    ``"element"`` where it is over element ids.
    """

    value: Weight
    side_pair: SetPair
    removed: frozenset
    kind: str
    meta: dict = field(default_factory=dict, compare=False)

    def sort_key(self) -> tuple:
        return (self.value, len(self.side_pair.first), sorted(self.side_pair.first))


def best_certificate(certs: Iterable[CutCertificate]) -> CutCertificate | None:
    """Minimum by (value, size of first side, sorted first side)."""
    best = None
    for c in certs:
        if best is None or c.sort_key() < best.sort_key():
            best = c
    return best
