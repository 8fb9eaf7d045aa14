import random

import pytest

from helpers import brute_network_cut, random_network
from isocut.core import INF
from isocut.maxflow import FlowNetwork, cut_capacity, max_flow, min_cut_sides


def path(c1, c2):
    net = FlowNetwork(3, 0, 2)
    net.add_arc(0, 1, c1)
    net.add_arc(1, 2, c2)
    return net


def test_path_bottleneck():
    res = max_flow(path(3, 2))
    assert res.value == 2
    assert res.source_side == {0, 1}
    assert res.sink_side == {2}


def test_tie_gives_minimal_sides():
    res = max_flow(path(2, 2))
    assert min_cut_sides(res) == ({0}, {2})


def test_parallel_paths_add():
    net = FlowNetwork(4, 0, 3)
    for mid, c in ((1, 1), (2, 2)):
        net.add_arc(0, mid, c)
        net.add_arc(mid, 3, c)
    assert max_flow(net).value == 3


def test_unbounded():
    net = path(INF, INF)
    res = max_flow(net)
    assert res.value == INF
    assert {0, 2} <= res.source_side


def test_infinite_arc_not_bottleneck():
    assert max_flow(path(INF, 4)).value == 4


def test_source_is_sink():
    with pytest.raises(ValueError):
        max_flow(FlowNetwork(2, 1, 1))


def test_negative_capacity():
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1).add_arc(0, 1, -1)


def _check_flow(net, res):
    excess = [0] * net.n
    for (tail, head, cap), f in zip(net.arcs(), res.flow):
        assert 0 <= f <= cap
        excess[tail] -= f
        excess[head] += f
    for v in range(net.n):
        if v not in (net.source, net.sink):
            assert excess[v] == 0
    assert excess[net.sink] == res.value


def test_random_against_enumeration():
    rng = random.Random(11)
    for _ in range(150):
        net = random_network(rng, rng.randint(2, 8))
        res = max_flow(net)
        best, sides = brute_network_cut(net)
        assert res.value == best
        _check_flow(net, res)
        assert cut_capacity(net, res.source_side) == best
        complement_sink = frozenset(range(net.n)) - res.sink_side
        assert cut_capacity(net, complement_sink) == best
        # Minimality among all minimum cuts.
        assert all(res.source_side <= s for s in sides)
        assert all(s <= complement_sink for s in sides)


def test_deterministic():
    rng = random.Random(5)
    net = random_network(rng, 8)
    assert max_flow(net) == max_flow(net)
