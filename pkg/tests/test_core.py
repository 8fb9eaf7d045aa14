import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import dumbbell, random_element_instance, random_graph, random_hypergraph
from isocut.core import INF, CutCertificate, ElementInstance, Hypergraph, InstanceError, WeightedGraph, check_weight, total_weight
from isocut.edge import edge_cut_certificate
from isocut.io import FormatError, parse_instance, serialize
from isocut.setpair import SetPair
from isocut.verify import diagnose_certificate, verify_certificate

finite = st.integers(min_value=0, max_value=2**40)
weights = st.one_of(finite, st.just(INF))


@given(finite, finite)
def test_finite_sum_is_exact(a, b):
    assert a + b == total_weight([a, b]) and isinstance(a + b, int)


@given(weights)
def test_infinity_absorbs(a):
    assert total_weight([a, INF]) == INF
    assert INF > 2**62 or a == INF


@given(st.lists(weights, min_size=1).filter(lambda ws: any(w != INF for w in ws)))
def test_min_with_finite_is_finite(ws):
    assert min(ws) != INF


def test_bad_weights():
    for w in (-1, 1.5, True, "3"):
        with pytest.raises(InstanceError):
            check_weight(w)


def test_graph_invariants():
    g = WeightedGraph.from_edges(2, [(0, 1, 1), (1, 0, 2)])
    assert g.edges == ((0, 1, 3),)
    with pytest.raises(InstanceError):
        WeightedGraph.from_edges(2, [(0, 0, 1)])
    with pytest.raises(InstanceError):
        WeightedGraph.from_edges(2, [(0, 2, 1)])
    with pytest.raises(InstanceError):
        WeightedGraph.from_edges(2, [(0, 1, 2**63)])


def test_hypergraph_drops_singletons():
    h, dropped = Hypergraph.from_edges(3, [([0, 1, 2], 5), ([1], 2), ([1, 1], 3)])
    assert h.m == 1 and h.p == 3 and dropped == [1, 2]


def test_element_weights():
    inst = ElementInstance(WeightedGraph.from_edges(3, [(0, 1, 4)], [1, 7, 9]), {0})
    assert inst.element_weight(0) == INF
    assert inst.element_weight(1) == 7
    assert inst.element_weight(3) == 4
    assert inst.removable() == [1, 2, 3]


# -- parsing ---------------------------------------------------------------


def test_parse_path():
    g, _ = parse_instance("p 3 2\ne 0 1 3\ne 1 2 2\n", "graph")
    assert g.edges == ((0, 1, 3), (1, 2, 2))


def test_parse_merges_parallel():
    g, _ = parse_instance("p 2 2\ne 0 1 1\ne 0 1 2\n", "graph")
    assert g.edges == ((0, 1, 3),)


def test_parse_hyperedge():
    h, report = parse_instance("ph 3 2\nh 5 0 1 2\nh 1 2\n", "hypergraph")
    assert h.hyperedges == ((frozenset({0, 1, 2}), 5),) and h.p == 3
    assert report.dropped_hyperedges == [1]


def test_parse_element_and_labels():
    text = "# comment\np 4 4\ne s u\ne u t\ne s v 2\ne v t inf\nv u 3\nt s\nt t\n"
    inst, _ = parse_instance(text, "element")
    lab = inst.graph.labels
    assert set(lab) == {"s", "t", "u", "v"}
    assert {lab[x] for x in inst.terminals} == {"s", "t"}
    assert inst.graph.vertex_weight(lab.index("u")) == 3


def test_parse_decimal_scaling():
    g, report = parse_instance("p 2 1\ne 0 1 0.25\n", "graph")
    assert report.scale == 10**6 and g.edges[0][2] == 250000
    g, report = parse_instance("p 2 1\ne 0 1 0.25\n", "graph", scale=4)
    assert g.edges[0][2] == 1


@pytest.mark.parametrize(
    "text,line",
    [
        ("p 2 1\ne 0 1 x\n", 2),
        ("p 2 1\ne 0 1 -1\n", 2),
        ("p 2 1\ne 0 1\ne 1 0\n", 1),
        ("p 2 2\ne 0 1\ne 1 2\n", 3),
        ("p 2 1\nq 0 1\n", 2),
        ("e 0 1\n", 1),
        ("p 2 1\ne 1 1\n", 2),
        ("p 2 1\ne 0 1 9223372036854775808\n", 1),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(FormatError) as exc:
        parse_instance(text, "graph")
    assert exc.value.line == line


def test_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 8), 0.5, 9, vmax=rng.choice([None, 5]))
        text = serialize(g)
        g1, _ = parse_instance(text, "graph")
        g2, _ = parse_instance(serialize(g1), "graph")
        assert g1 == g2
        # Isolated vertices may be renumbered; edges keep their labels.
        by_label = lambda G: sorted((G.labels[u], G.labels[v], w) for u, v, w in G.edges)
        assert by_label(g1) == by_label(g)
        h = random_hypergraph(rng, 6, 4)
        h1, _ = parse_instance(serialize(h), "hypergraph")
        assert parse_instance(serialize(h1), "hypergraph")[0] == h1
        inst = random_element_instance(rng)
        e1, _ = parse_instance(serialize(inst), "element")
        assert parse_instance(serialize(e1), "element")[0] == e1
        assert e1.terminals == inst.terminals


# -- verification ------------------------------------------------------------


def test_verify_dumbbell():
    g = dumbbell()
    cert = edge_cut_certificate(g, {0, 1, 2})
    assert cert.value == 1 and verify_certificate(g, cert)
    wrong = CutCertificate(2, cert.side_pair, cert.removed, "edge")
    assert not verify_certificate(g, wrong)
    assert "value" in diagnose_certificate(g, wrong)


def test_verify_rejects_connected_sides():
    path = WeightedGraph.from_edges(3, [(0, 1), (1, 2)])
    cert = CutCertificate(0, SetPair.of({0}, {1, 2}), frozenset(), "edge")
    assert not verify_certificate(path, cert)
    assert not verify_certificate(path, CutCertificate(0, SetPair.of({0}, {1}), frozenset(), "mystery"))
