"""Subset minimum cuts in weighted hypergraphs via the standard flow reduction."""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import INF, CutCertificate, Hypergraph, total_weight
from .lattice import SamplingParams, global_min_cut_sampling, isolating_cuts
from .maxflow import FlowNetwork, max_flow
from .setpair import SetPair


def hypergraph_to_flow(h: Hypergraph, S: Iterable[int], T: Iterable[int]) -> FlowNetwork:
    """Flow network whose minimum cut is the minimum (S, T) hyperedge cut.

    Nodes: vertices ``0..n-1``, super-source ``n``, super-sink ``n+1``, then
    for hyperedge ``i`` an entry node ``n+2+2i`` and exit node ``n+3+2i``
    joined by an arc of the hyperedge's weight.
    """
    S, T = frozenset(S), frozenset(T)
    if not S or not T:
        raise ValueError("both terminal sets must be nonempty")
    if S & T:
        raise ValueError("terminal sets overlap")
    n = h.n
    net = FlowNetwork(n + 2 + 2 * h.m, n, n + 1)
    for s in sorted(S):
        net.add_arc(n, s, INF)
    for t in sorted(T):
        net.add_arc(t, n + 1, INF)
    for i, (members, w) in enumerate(h.hyperedges):
        a, b = n + 2 + 2 * i, n + 3 + 2 * i
        net.add_arc(a, b, w)
        for v in sorted(members):
            net.add_arc(v, a, INF)
            net.add_arc(b, v, INF)
    return net


def hyper_cut_certificate(h: Hypergraph, side: Iterable[int], **meta) -> CutCertificate:
    side = frozenset(side)
    removed = frozenset(i for i, (members, _) in enumerate(h.hyperedges) if members & side and members - side)
    value = total_weight(h.hyperedges[i][1] for i in removed)
    return CutCertificate(value, SetPair.bipartition(side, range(h.n)), removed, "hyper", dict(meta))


def hyper_min_st_cut(h: Hypergraph, S: Iterable[int], T: Iterable[int]) -> CutCertificate:
    """Minimum-weight set of hyperedges whose removal separates ``S`` from ``T``."""
    S, T = frozenset(S), frozenset(T)
    res = max_flow(hypergraph_to_flow(h, S, T))
    side = S if res.value == INF else frozenset(x for x in res.source_side if x < h.n)
    return hyper_cut_certificate(h, side, max_augmenting_path_length=res.max_augmenting_path_length)


def contract_hypergraph(h: Hypergraph, keep: Iterable[int]) -> tuple[Hypergraph, int]:
    """Shrink every vertex outside ``keep`` into one vertex.

    Vertex ``i`` of the result is the ``i``-th smallest kept vertex and the
    shrunk vertex is ``len(keep)``.  Repeated members collapse and hyperedges
    left with one member are dropped.
    """
    keep = sorted(set(keep))
    if not keep or len(keep) >= h.n:
        raise ValueError("contraction needs a proper nonempty subset")
    local = {v: i for i, v in enumerate(keep)}
    sink = len(keep)
    edges = [(frozenset(local.get(v, sink) for v in members), w) for members, w in h.hyperedges]
    labels = tuple(h.labels[v] for v in keep) + ("*",)
    contracted, _ = Hypergraph.from_edges(sink + 1, edges, labels)
    return contracted, sink


class HyperCutOracle:
    def __init__(self, h: Hypergraph):
        self.h = h

    def outer(self, terms: SetPair) -> CutCertificate:
        return hyper_min_st_cut(self.h, terms.first, terms.second)

    def inner(self, r: int, piece: SetPair) -> CutCertificate:
        keep = sorted(piece.first)
        if len(keep) == 1:
            return hyper_cut_certificate(self.h, keep, piece_vertices=1, piece_size=self._degree_size(r))
        g, sink = contract_hypergraph(self.h, keep)
        res = max_flow(hypergraph_to_flow(g, [keep.index(r)], [sink]))
        if res.value == INF:
            side = [r]
        else:
            side = [keep[x] for x in res.source_side if x < sink]
        return hyper_cut_certificate(
            self.h,
            side,
            piece_vertices=len(keep),
            piece_size=g.p,
            max_augmenting_path_length=res.max_augmenting_path_length,
        )

    def _degree_size(self, r: int) -> int:
        # Size of the piece {r} + shrunk vertex: two members per incident hyperedge.
        return 2 * sum(1 for members, _ in self.h.hyperedges if r in members)


def hyper_isolating_cuts(h: Hypergraph, R: Sequence[int]) -> dict[int, CutCertificate]:
    return isolating_cuts(HyperCutOracle(h), list(R))


def hyper_global_min_cut(h: Hypergraph, R: Sequence[int] | None = None, params: SamplingParams = SamplingParams()) -> CutCertificate:
    """Minimum hyperedge cut whose sides both meet ``R`` (default: all vertices)."""
    R = list(range(h.n)) if R is None else sorted(set(R))
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    Rs = set(R)
    for comp in h.components():
        if comp & Rs and Rs - comp:
            return hyper_cut_certificate(h, comp, seed=params.seed, trials=0, oracle_calls=0, disconnected=True)
    return global_min_cut_sampling(HyperCutOracle(h), R, params)
