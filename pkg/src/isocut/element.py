"""Element connectivity: split-graph flows, isolating element cuts, global λ(R).

Elements are the edges and non-terminal vertices of an
:class:`~isocut.core.ElementInstance`.  A cut is a set-pair ``(X, Y)`` of
element ids with no edge of one side touching a vertex of the other and all
terminals covered; its value is the weight of the elements in neither side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import INF, CutCertificate, ElementInstance, total_weight
from .lattice import SamplingParams, global_min_cut_sampling, isolating_cuts
from .maxflow import FlowNetwork, max_flow
from .setpair import SetPair


class _SplitNetwork:
    """A split-graph flow network together with its node bookkeeping.

    ``node_in[v]`` / ``node_out[v]`` are the in- and out-copies of vertex
    ``v`` (the same node for terminals); ``edge_arcs[i]`` lists the arc ids
    standing for edge ``i`` and ``vertex_arc[v]`` the arc for non-terminal ``v``.
    """

    def __init__(self, net: FlowNetwork):
        self.net = net
        self.node_in: dict[int, int] = {}
        self.node_out: dict[int, int] = {}
        self.vertex_arc: dict[int, int] = {}
        self.edge_arcs: dict[int, list[int]] = {}


def element_split_network(inst: ElementInstance, S: Iterable[int], Z: Iterable[int]) -> FlowNetwork:
    """Flow network whose minimum cut is the minimum element cut between ``S`` and ``Z``.

    Non-terminal ``v`` becomes ``v_in -> v_out`` with capacity ``w(v)``;
    edge ``{u, v}`` becomes ``u_out -> v_in`` and ``v_out -> u_in`` with
    capacity ``w(uv)``; terminals are single nodes.  The super-source is
    the second-to-last node, the super-sink the last.
    """
    return _build_split(inst, frozenset(S), frozenset(Z)).net


def _check_terminal_sets(inst: ElementInstance, S: frozenset, Z: frozenset) -> None:
    if not S or not Z:
        raise ValueError("both terminal sets must be nonempty")
    if S & Z:
        raise ValueError("terminal sets overlap")
    if not S | Z <= inst.terminals:
        raise ValueError("element cuts separate terminals only")


def _build_split(inst: ElementInstance, S: frozenset, Z: frozenset) -> _SplitNetwork:
    _check_terminal_sets(inst, S, Z)
    g = inst.graph
    n = g.n
    node_in, node_out = {}, {}
    count = 0
    for v in range(n):
        node_in[v] = count
        count += 1
        if v in inst.terminals:
            node_out[v] = node_in[v]
        else:
            node_out[v] = count
            count += 1
    source, sink = count, count + 1
    sn = _SplitNetwork(FlowNetwork(count + 2, source, sink))
    sn.node_in, sn.node_out = node_in, node_out
    net = sn.net
    for v in range(n):
        if v not in inst.terminals:
            sn.vertex_arc[v] = 2 * net.add_arc(node_in[v], node_out[v], g.vertex_weight(v))
    for i, (u, v, w) in enumerate(g.edges):
        sn.edge_arcs[i] = [
            2 * net.add_arc(node_out[u], node_in[v], w),
            2 * net.add_arc(node_out[v], node_in[u], w),
        ]
    for s in sorted(S):
        net.add_arc(source, node_in[s], INF)
    for z in sorted(Z):
        net.add_arc(node_out[z], sink, INF)
    return sn


def _pair_from_side(inst: ElementInstance, sn: _SplitNetwork, side: frozenset, vertices: Iterable[int], edges: Iterable[int]):
    """Classify the listed elements against a residual source side.

    A vertex whose out-copy is reached lies on the first side, one whose
    in-copy alone is reached is removed, and the rest go second.  An edge is
    removed when one of its arcs leaves the source side, otherwise it joins
    the first side if it touches a first-side vertex.
    """
    net = sn.net
    first, removed = set(), set()
    for v in vertices:
        if sn.node_out.get(v) in side:
            first.add(v)
        elif sn.node_in.get(v) in side and v not in inst.terminals:
            removed.add(v)
    n = inst.n
    for i in edges:
        crossing = any(net.head[a ^ 1] in side and net.head[a] not in side for a in sn.edge_arcs.get(i, ()))
        if crossing:
            removed.add(n + i)
        else:
            u, v, _ = inst.graph.edges[i]
            if u in first or v in first:
                first.add(n + i)
    return first, removed


def _certificate(inst: ElementInstance, first: set, removed: set, **meta) -> CutCertificate:
    everything = frozenset(range(inst.num_elements))
    first = frozenset(first)
    removed = frozenset(removed)
    value = total_weight(inst.element_weight(x) for x in removed)
    return CutCertificate(value, SetPair(first, everything - first - removed), removed, "element", dict(meta))


def _detach(inst: ElementInstance, S: Iterable[int], **meta) -> CutCertificate:
    """The cut that removes every edge at ``S``; used when no finite cut exists."""
    S = frozenset(S)
    removed = {inst.n + i for s in S for i in inst.graph.incident[s]}
    return _certificate(inst, set(S), removed, **meta)


def element_min_cut(inst: ElementInstance, S: Iterable[int], Z: Iterable[int]) -> CutCertificate:
    """Minimum-weight element set separating terminal sets ``S`` and ``Z``.

    The first side is derived from the inclusion-minimal residual source side.
    """
    S, Z = frozenset(S), frozenset(Z)
    sn = _build_split(inst, S, Z)
    res = max_flow(sn.net)
    meta = {"max_augmenting_path_length": res.max_augmenting_path_length}
    if res.value == INF:
        return _detach(inst, S, **meta)
    first, removed = _pair_from_side(inst, sn, res.source_side, range(inst.n), range(inst.m))
    cert = _certificate(inst, first, removed, **meta)
    assert cert.value == res.value
    return cert


def element_connectivity(inst: ElementInstance, s: int, t: int):
    """λ(s, t)."""
    return element_min_cut(inst, [s], [t]).value


@dataclass(frozen=True)
class IsolationPiece:
    """The elements around one terminal's piece and the sizes of its subproblem.

    ``inner`` is the piece's first component, ``boundary`` the outside
    vertices touching an inner edge plus the outside edges touching an inner
    vertex.  ``n_r``/``m_r`` count vertices/edges of ``inner | boundary``;
    ``inner_vertices`` counts vertices of ``inner`` alone.
    """

    terminal: int
    inner: frozenset
    boundary: frozenset
    n_r: int
    m_r: int
    inner_vertices: int

    @classmethod
    def from_piece(cls, inst: ElementInstance, r: int, piece: SetPair) -> "IsolationPiece":
        n = inst.n
        inner = piece.first
        inner_v = {x for x in inner if x < n}
        inner_e = {x - n for x in inner if x >= n}
        boundary = set()
        for i in inner_e:
            u, v, _ = inst.graph.edges[i]
            for x in (u, v):
                if x not in inner_v:
                    boundary.add(x)
        for v in inner_v:
            for i in inst.graph.incident[v]:
                if i not in inner_e:
                    boundary.add(n + i)
        everything = inner | boundary
        return cls(
            r,
            frozenset(inner),
            frozenset(boundary),
            sum(1 for x in everything if x < n),
            sum(1 for x in everything if x >= n),
            len(inner_v),
        )


def _piece_network(inst: ElementInstance, piece: IsolationPiece) -> _SplitNetwork:
    """Split network of one piece with everything beyond its boundary shrunk into the sink.

    Boundary vertices keep their in-copy while their out-copy is merged into
    the sink; a boundary edge leaving the piece points straight at the sink.
    """
    g = inst.graph
    n = inst.n
    inner_v = sorted(x for x in piece.inner if x < n)
    boundary_v = sorted(x for x in piece.boundary if x < n)
    edges = sorted({x - n for x in piece.inner | piece.boundary if x >= n})
    sink = 0
    count = 1
    node_in, node_out = {}, {}
    for v in inner_v:
        node_in[v] = count
        count += 1
        if v in inst.terminals:
            node_out[v] = node_in[v]
        else:
            node_out[v] = count
            count += 1
    for v in boundary_v:
        node_out[v] = sink
        if v in inst.terminals:
            node_in[v] = sink
        else:
            node_in[v] = count
            count += 1
    sn = _SplitNetwork(FlowNetwork(count, node_in[piece.terminal], sink))
    sn.node_in, sn.node_out = node_in, node_out
    net = sn.net
    for v in inner_v + boundary_v:
        if v not in inst.terminals:
            sn.vertex_arc[v] = 2 * net.add_arc(node_in[v], node_out[v], g.vertex_weight(v))
    inner_set = set(inner_v)
    for i in edges:
        u, v, w = g.edges[i]
        ends = [a for a in (u, v) if a in inner_set]
        if n + i in piece.inner:
            sn.edge_arcs[i] = [2 * net.add_arc(node_out[a], node_in[b], w) for a, b in ((u, v), (v, u)) if a in inner_set]
        elif len(ends) == 1:
            # Not allowed on the first side: reaching it from inside means removing it.
            sn.edge_arcs[i] = [2 * net.add_arc(node_out[ends[0]], sink, w)]
        else:
            hub = net.add_node()
            sn.edge_arcs[i] = [2 * net.add_arc(hub, sink, w)]
            for a in ends:
                net.add_arc(node_out[a], hub, INF)
    return sn


class ElementCutOracle:
    """Cut oracle over the element lattice of an instance."""

    def __init__(self, inst: ElementInstance):
        self.inst = inst

    def outer(self, terms: SetPair) -> CutCertificate:
        return element_min_cut(self.inst, terms.first, terms.second)

    def inner(self, r: int, piece: SetPair) -> CutCertificate:
        inst = self.inst
        info = IsolationPiece.from_piece(inst, r, piece)
        sn = _piece_network(inst, info)
        res = max_flow(sn.net)
        meta = {
            "isolation": info,
            "max_augmenting_path_length": res.max_augmenting_path_length,
        }
        if res.value == INF:
            return _detach(inst, [r], **meta)
        n = inst.n
        vertices = sorted(x for x in info.inner | info.boundary if x < n)
        edges = sorted(x - n for x in info.inner | info.boundary if x >= n)
        first, removed = _pair_from_side(inst, sn, res.source_side, vertices, edges)
        cert = _certificate(inst, first, removed, **meta)
        assert cert.value == res.value
        return cert


def element_isolating_cuts(inst: ElementInstance, R: Sequence[int]) -> dict[int, CutCertificate]:
    """Minimum ``(r, R - r)`` element cut for every ``r`` in ``R``.

    Each certificate carries its :class:`IsolationPiece` under
    ``meta["isolation"]`` and the longest augmenting path of the piece's
    flow under ``meta["max_augmenting_path_length"]``.
    """
    R = sorted(set(R))
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    if not set(R) <= inst.terminals:
        raise ValueError("isolating terminals must be terminals of the instance")
    return isolating_cuts(ElementCutOracle(inst), R)


def element_global_conn(inst: ElementInstance, R: Sequence[int] | None = None, params: SamplingParams = SamplingParams()) -> CutCertificate:
    """λ(R): the minimum element connectivity over pairs of ``R`` (default: all terminals)."""
    R = sorted(inst.terminals) if R is None else sorted(set(R))
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    if not set(R) <= inst.terminals:
        raise ValueError("terminal subset must lie within the instance's terminals")
    cert = global_min_cut_sampling(ElementCutOracle(inst), R, params)
    cert.meta.pop("isolation", None)
    return cert
