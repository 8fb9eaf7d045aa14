import random

import pytest

from helpers import complete, dumbbell, random_graph
from isocut.core import WeightedGraph
from isocut.edge import contract_outside, min_st_edge_cut, steiner_min_cut
from isocut.lattice import SamplingParams
from isocut.oracles import brute_edge_cut, brute_edge_st_cut, stoer_wagner
from isocut.verify import verify_certificate


def test_st_examples():
    assert min_st_edge_cut(dumbbell(), [0], [3]).value == 1
    assert min_st_edge_cut(complete(4), [0], [1]).value == 3


def test_st_errors():
    with pytest.raises(ValueError):
        min_st_edge_cut(dumbbell(), [0], [0])
    with pytest.raises(ValueError):
        min_st_edge_cut(dumbbell(), [], [1])


def test_st_random():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, 0.5, 6)
        S = rng.sample(range(n), rng.randint(1, n - 1))
        T = rng.sample([v for v in range(n) if v not in S], 1)
        cert = min_st_edge_cut(g, S, T)
        value, side = brute_edge_st_cut(g, S, T)
        assert cert.value == value
        assert verify_certificate(g, cert)


def test_contract_examples():
    h, sink = contract_outside(dumbbell(), [0, 1, 2])
    assert sink == 3
    assert h.edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1), (2, 3, 1))
    rng = random.Random(1)
    g = random_graph(rng, 7, 0.6, 5)
    h, sink = contract_outside(g, [4])
    assert h.n == 2 and sum(w for *_, w in h.edges) == g.weighted_degree(4)


def test_steiner_examples():
    assert steiner_min_cut(dumbbell()).value == 1
    assert steiner_min_cut(dumbbell(), [0, 3]).value == 1


def test_disconnected_short_circuit():
    g = WeightedGraph.from_edges(4, [(0, 1, 3), (2, 3, 4)])
    c = steiner_min_cut(g)
    assert c.value == 0 and c.meta["disconnected"]
    assert steiner_min_cut(g, [0, 1]).value == 3


def test_steiner_random_and_stoer_wagner():
    rng = random.Random(21)
    for i in range(40):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, 0.5, 5, connected=rng.random() < 0.8)
        R = rng.sample(range(n), rng.randint(2, n))
        c = steiner_min_cut(g, R, SamplingParams(seed=i))
        assert c.value == brute_edge_cut(g, R)[0]
        assert verify_certificate(g, c)
        if len(R) == n:
            assert c.value == stoer_wagner(g)[0]
