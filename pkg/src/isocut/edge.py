"""Subset (Steiner) minimum edge cuts in weighted undirected graphs."""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import INF, CutCertificate, WeightedGraph, total_weight
from .lattice import SamplingParams, global_min_cut_sampling, isolating_cuts
from .maxflow import FlowNetwork, max_flow
from .setpair import SetPair


def edge_cut_certificate(g: WeightedGraph, side: Iterable[int], **meta) -> CutCertificate:
    side = frozenset(side)
    removed = frozenset((u, v) for u, v, _ in g.edges if (u in side) != (v in side))
    value = total_weight(w for u, v, w in g.edges if (u, v) in removed)
    return CutCertificate(value, SetPair.bipartition(side, range(g.n)), removed, "edge", dict(meta))


def _flow_side(g: WeightedGraph, S: frozenset, T: frozenset):
    """Minimal source side of a minimum (S, T) edge cut, plus the flow result."""
    n = g.n
    if len(S) == 1 and len(T) == 1:
        (s,), (t,) = S, T
        net = FlowNetwork(n, s, t)
    else:
        net = FlowNetwork(n + 2, n, n + 1)
        for s in sorted(S):
            net.add_arc(n, s, INF)
        for t in sorted(T):
            net.add_arc(t, n + 1, INF)
    for u, v, w in g.edges:
        net.add_arc(u, v, w)
        net.add_arc(v, u, w)
    res = max_flow(net)
    if res.value == INF:
        return S, res
    return frozenset(x for x in res.source_side if x < n), res


def min_st_edge_cut(g: WeightedGraph, S: Iterable[int], T: Iterable[int]) -> CutCertificate:
    """Minimum-weight set of edges separating ``S`` from ``T``.

    The certificate's first side is the inclusion-minimal source side.
    """
    S, T = frozenset(S), frozenset(T)
    if not S or not T:
        raise ValueError("both terminal sets must be nonempty")
    if S & T:
        raise ValueError("terminal sets overlap")
    side, res = _flow_side(g, S, T)
    return edge_cut_certificate(g, side, max_augmenting_path_length=res.max_augmenting_path_length)


def contract_outside(g: WeightedGraph, keep: Iterable[int]) -> tuple[WeightedGraph, int]:
    """Merge every vertex outside ``keep`` into one new vertex.

    Vertex ``i`` of the result is the ``i``-th smallest element of ``keep``;
    the merged vertex is ``len(keep)``, returned as the sink id.
    """
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("nothing to keep")
    if len(keep) >= g.n:
        raise ValueError("contraction needs at least one vertex outside keep")
    local = {v: i for i, v in enumerate(keep)}
    sink = len(keep)
    edges = []
    for u, v, w in g.edges:
        a, b = local.get(u, sink), local.get(v, sink)
        if a != b:
            edges.append((a, b, w))
    labels = tuple(g.labels[v] for v in keep) + ("*",)
    return WeightedGraph.from_edges(sink + 1, edges, labels=labels), sink


class EdgeCutOracle:
    """Cut oracle over the bipartition lattice of a graph's vertices."""

    def __init__(self, g: WeightedGraph):
        self.g = g
        self.pieces: list[dict] = []

    def outer(self, terms: SetPair) -> CutCertificate:
        return min_st_edge_cut(self.g, terms.first, terms.second)

    def inner(self, r: int, piece: SetPair) -> CutCertificate:
        g = self.g
        keep = sorted(piece.first)
        inside = sum(1 for u, v, _ in g.edges if u in piece.first and v in piece.first)
        crossing = sum(1 for u, v, _ in g.edges if (u in piece.first) != (v in piece.first))
        stats = {"piece_vertices": len(keep), "piece_edges": inside + crossing}
        if len(keep) == 1:
            return edge_cut_certificate(g, keep, **stats)
        h, sink = contract_outside(g, keep)
        local_side, res = _flow_side(h, frozenset([keep.index(r)]), frozenset([sink]))
        side = [keep[i] for i in local_side]
        stats["max_augmenting_path_length"] = res.max_augmenting_path_length
        return edge_cut_certificate(g, side, **stats)


def edge_isolating_cuts(g: WeightedGraph, R: Sequence[int]) -> dict[int, CutCertificate]:
    return isolating_cuts(EdgeCutOracle(g), list(R))


def _split_component(g: WeightedGraph, R: Iterable[int]):
    R = set(R)
    for comp in g.components():
        if comp & R and R - comp:
            return comp
    return None


def steiner_min_cut(g: WeightedGraph, R: Sequence[int] | None = None, params: SamplingParams = SamplingParams()) -> CutCertificate:
    """Minimum edge cut whose two sides both meet ``R`` (default: all vertices)."""
    R = list(range(g.n)) if R is None else sorted(set(R))
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    comp = _split_component(g, R)
    if comp is not None:
        return edge_cut_certificate(g, comp, seed=params.seed, trials=0, oracle_calls=0, disconnected=True)
    return global_min_cut_sampling(EdgeCutOracle(g), R, params)
