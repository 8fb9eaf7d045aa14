"""Independent re-check of cut certificates against their instances."""

from __future__ import annotations

from .core import INF, CutCertificate, ElementInstance, Hypergraph, WeightedGraph, total_weight


def diagnose_certificate(instance, cert: CutCertificate) -> str | None:
    """``None`` if ``cert`` is a valid cut of ``instance``, else the reason it is not."""
    check = _CHECKS.get(cert.kind)
    if check is None:
        return f"unknown certificate kind {cert.kind!r}"
    try:
        return check(instance, cert)
    except (IndexError, KeyError, TypeError, ValueError) as exc:
        return f"certificate refers to objects outside the instance: {exc}"


def verify_certificate(instance, cert: CutCertificate) -> bool:
    """True iff removing ``cert.removed`` separates the sides and the value matches."""
    return diagnose_certificate(instance, cert) is None


def _sides(cert):
    A, B = cert.side_pair.first, cert.side_pair.second
    if not A or not B:
        return "a side is empty"
    return None


def _value_mismatch(expected, cert):
    if expected != cert.value:
        return f"value {cert.value} differs from removed weight {expected}"
    return None


def _check_edge(g: WeightedGraph, cert):
    if not isinstance(g, WeightedGraph):
        return "edge certificate needs a graph"
    bad = _sides(cert)
    if bad:
        return bad
    A, B = cert.side_pair.first, cert.side_pair.second
    if A | B != frozenset(range(g.n)):
        return "sides do not cover the vertex set"
    index = g.edge_index
    ids = set()
    for u, v in cert.removed:
        key = (min(u, v), max(u, v))
        if key not in index:
            return f"removed edge {key} is not in the graph"
        ids.add(index[key])
    bad = _value_mismatch(total_weight(g.edges[i][2] for i in ids), cert)
    if bad:
        return bad
    for comp in g.components(removed_edges=ids):
        if comp & A and comp & B:
            return "sides remain connected"
    return None


def _check_hyper(h: Hypergraph, cert):
    if not isinstance(h, Hypergraph):
        return "hyperedge certificate needs a hypergraph"
    bad = _sides(cert)
    if bad:
        return bad
    A, B = cert.side_pair.first, cert.side_pair.second
    if A | B != frozenset(range(h.n)):
        return "sides do not cover the vertex set"
    for i in cert.removed:
        if not 0 <= i < h.m:
            return f"hyperedge {i} does not exist"
    bad = _value_mismatch(total_weight(h.hyperedges[i][1] for i in cert.removed), cert)
    if bad:
        return bad
    for comp in h.components(removed_edges=cert.removed):
        if comp & A and comp & B:
            return "sides remain connected"
    return None


def _check_element(inst: ElementInstance, cert):
    if not isinstance(inst, ElementInstance):
        return "element certificate needs an element instance"
    n = inst.n
    X, Y = cert.side_pair.first, cert.side_pair.second
    everything = frozenset(range(inst.num_elements))
    if X | Y | cert.removed != everything or (X | Y) & cert.removed:
        return "sides and removed set must partition the elements"
    if cert.removed & inst.terminals:
        return "terminals cannot be removed"
    if not inst.in_lattice(cert.side_pair):
        return "side pair has an edge touching the opposite side"
    if not (X & inst.terminals and Y & inst.terminals):
        return "each side must hold a terminal"
    bad = _value_mismatch(total_weight(inst.element_weight(x) for x in cert.removed), cert)
    if bad:
        return bad
    gone_v = [x for x in cert.removed if x < n]
    gone_e = [x - n for x in cert.removed if x >= n]
    for comp in inst.graph.components(gone_v, gone_e):
        if comp & X and comp & Y:
            return "sides remain connected"
    return None


def _check_vertex(g: WeightedGraph, cert):
    if not isinstance(g, WeightedGraph):
        return "vertex certificate needs a graph"
    bad = _sides(cert)
    if bad:
        return bad
    A, B = cert.side_pair.first, cert.side_pair.second
    if cert.value == INF and not cert.removed:
        # Adjacent pair: no separator exists.
        if any(b in g.adjacency[a] for a in A for b in B):
            return None
        return "infinite value claimed for a separable pair"
    if (A | B) & cert.removed or A | B | cert.removed != frozenset(range(g.n)):
        return "sides and separator must partition the vertices"
    bad = _value_mismatch(total_weight(g.vertex_weight(v) for v in cert.removed), cert)
    if bad:
        return bad
    for a in A:
        if g.adjacency[a] & B:
            return "sides remain adjacent"
    return None


_CHECKS = {
    "edge": _check_edge,
    "hyper": _check_hyper,
    "element": _check_element,
    "vertex": _check_vertex,
}
