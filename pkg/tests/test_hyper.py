import random

from helpers import random_hypergraph
from isocut.core import INF, Hypergraph
from isocut.hyper import contract_hypergraph, hyper_global_min_cut, hyper_isolating_cuts, hyper_min_st_cut, hypergraph_to_flow
from isocut.lattice import SamplingParams
from isocut.oracles import brute_hyper_cut, brute_hyper_st_cut
from isocut.verify import verify_certificate


def hyper(n, edges):
    return Hypergraph.from_edges(n, edges)[0]


def triple():
    # a b c d = 0 1 2 3
    return hyper(4, [([0, 1, 2], 5), ([2, 3], 2)])


def test_flow_examples():
    h = hyper(3, [([0, 1, 2], 5)])
    assert hyper_min_st_cut(h, [0], [1]).value == 5
    net = hypergraph_to_flow(h, [0], [1])
    assert net.n == 3 + 2 + 2
    series = hyper(3, [([0, 1], 1), ([1, 2], 2)])
    c = hyper_min_st_cut(series, [0], [2])
    assert c.value == 1 and c.removed == {0}


def test_triple():
    certs = hyper_isolating_cuts(triple(), [0, 3])
    assert certs[3].value == 2 and certs[0].value == 2
    certs = hyper_isolating_cuts(triple(), [0, 1, 3])
    assert certs[0].value == 5
    assert hyper_global_min_cut(triple()).value == 2


def test_hyper_cycle():
    h = hyper(6, [([i, (i + 1) % 6, (i + 2) % 6], 1) for i in range(6)])
    assert hyper_global_min_cut(h).value == brute_hyper_cut(h)[0]


def test_infinite_hyperedge():
    h = hyper(3, [([0, 1], INF), ([1, 2], 4)])
    assert hyper_global_min_cut(h, [0, 1]).value == INF
    assert hyper_global_min_cut(h, [0, 2]).value == 4


def test_disconnected():
    h = hyper(4, [([0, 1], 3), ([2, 3], 1)])
    assert hyper_global_min_cut(h).value == 0


def test_contraction_sizes():
    h = triple()
    g, sink = contract_hypergraph(h, [0, 1])
    assert sink == 2 and g.hyperedges == ((frozenset({0, 1, 2}), 5),)


def test_random_against_enumeration():
    rng = random.Random(17)
    for i in range(40):
        n = rng.randint(2, 8)
        h = random_hypergraph(rng, n, rng.randint(1, 6))
        A = rng.sample(range(n), rng.randint(1, n - 1))
        B = [v for v in range(n) if v not in A][:1]
        c = hyper_min_st_cut(h, A, B)
        assert c.value == brute_hyper_st_cut(h, A, B)[0]
        assert verify_certificate(h, c)
        R = rng.sample(range(n), rng.randint(2, n))
        g = hyper_global_min_cut(h, R, SamplingParams(seed=i))
        assert g.value == brute_hyper_cut(h, R)[0]
        assert verify_certificate(h, g)
        for r, cert in hyper_isolating_cuts(h, R).items():
            assert cert.value == brute_hyper_st_cut(h, [r], [x for x in R if x != r])[0]


def test_piece_sizes_bounded():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 10)
        h = random_hypergraph(rng, n, rng.randint(1, 8))
        R = rng.sample(range(n), rng.randint(2, n))
        certs = hyper_isolating_cuts(h, R)
        assert sum(c.meta["piece_size"] for c in certs.values()) <= 2 * h.p + len(R)
