"""Weighted global vertex connectivity by terminal sampling and isolating element cuts."""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import INF, CutCertificate, ElementInstance, InstanceError, WeightedGraph, best_certificate, total_weight
from .element import ElementCutOracle, element_min_cut
from .lattice import ceil_log2, derive_rng, isolating_cuts
from .setpair import SetPair


class NoCutError(ValueError):
    """The graph is complete, so no vertex set disconnects it."""


@dataclass(frozen=True)
class VCParams:
    epsilon: Fraction = Fraction(1, 10)
    seed: int = 0
    delta: Fraction = Fraction(1, 1000)
    c: float = 4
    max_trials: int = 1_000_000
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "delta", Fraction(self.delta))
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if not 0 < self.delta < 1:
            raise ValueError("failure probability must lie in (0, 1)")
        if self.max_trials < 0:
            raise ValueError("max_trials must be nonnegative")


def _unit_edges(g: WeightedGraph) -> WeightedGraph:
    """Same graph with every edge unremovable; vertices keep their weights."""
    return WeightedGraph(g.n, tuple((u, v, INF) for u, v, _ in g.edges), g.vertex_weights, g.labels)


def _to_vertex_cert(g: WeightedGraph, cert: CutCertificate, **meta) -> CutCertificate:
    n = g.n
    first = frozenset(x for x in cert.side_pair.first if x < n)
    second = frozenset(x for x in cert.side_pair.second if x < n)
    removed = frozenset(x for x in cert.removed if x < n)
    value = total_weight(g.vertex_weight(v) for v in removed)
    return CutCertificate(value, SetPair(first, second), removed, "vertex", dict(meta))


def vertex_min_st_cut(g: WeightedGraph, s: int, t: int) -> CutCertificate:
    """Minimum-weight vertex set avoiding ``s`` and ``t`` whose removal separates them.

    Adjacent ``s`` and ``t`` have no separator; the certificate then has
    value ``INF``, nothing removed and sides ``({s}, {t})``.
    """
    if s == t:
        raise ValueError("s and t must differ")
    if t in g.adjacency[s]:
        return CutCertificate(INF, SetPair.of([s], [t]), frozenset(), "vertex", {})
    inst = ElementInstance(_unit_edges(g), frozenset([s, t]))
    return _to_vertex_cert(g, element_min_cut(inst, [s], [t]))


def _singleton_cuts(g: WeightedGraph) -> list[CutCertificate]:
    out = []
    everything = frozenset(range(g.n))
    for v in range(g.n):
        nbrs = g.adjacency[v]
        rest = everything - nbrs - {v}
        if rest:
            value = total_weight(g.vertex_weight(u) for u in nbrs)
            out.append(CutCertificate(value, SetPair.of([v], rest), nbrs, "vertex", {}))
    return out


def sample_terminals(g: WeightedGraph, mu, rng: random.Random | int = 0) -> list[int]:
    """Keep each vertex with probability ``min(1, w(v)/mu)``, then thin to an independent set.

    Thinning scans vertices in increasing id and drops any vertex adjacent to
    an already kept one, so of an adjacent sampled pair the higher id goes.
    """
    if mu < 1:
        raise ValueError("mu must be at least 1")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    picked = []
    for v in range(g.n):
        w = g.vertex_weight(v)
        if w >= mu or rng.random() * mu < w:
            picked.append(v)
    kept: list[int] = []
    taken = set()
    for v in picked:
        if not g.adjacency[v] & taken:
            kept.append(v)
            taken.add(v)
    return kept


def _round_budget(params: VCParams, B, W) -> int:
    eps = params.epsilon
    if B == INF:
        slack = eps
    else:
        slack = max(eps, 1 - Fraction(B) / W)
    rounds = params.c * math.log(1 / params.delta) * math.log2(4 * W) / (float(eps) * float(slack))
    return min(params.max_trials, math.ceil(rounds))


_BATCH = 64


def approx_vertex_connectivity(g: WeightedGraph, params: VCParams = VCParams()) -> CutCertificate:
    """A vertex cut of weight at most ``(1 + epsilon)`` times the optimum with probability ``1 - delta``.

    The result is always a genuine vertex cut.  Rounds draw ``mu`` as a
    random power of two up to ``4 W`` (``W`` the total vertex weight),
    sample an independent terminal set and solve its isolating cuts; the
    number of rounds shrinks as better cuts are found.
    """
    if g.n < 2 or g.is_complete():
        raise NoCutError("complete graph has no vertex cut")
    W = total_weight(g.vertex_weight(v) for v in range(g.n))
    if W == INF or W == 0:
        raise InstanceError("total vertex weight must be finite and positive")
    top = (4 * W).bit_length() - 1
    unremovable = _unit_edges(g)
    cache: dict[tuple, CutCertificate] = {}

    def solve(R: tuple) -> CutCertificate:
        oracle = ElementCutOracle(ElementInstance(unremovable, frozenset(R)))
        found = isolating_cuts(oracle, list(R))
        return best_certificate(_to_vertex_cert(g, c) for c in found.values())

    def draw(i: int) -> tuple:
        rng = derive_rng(params.seed, i)
        mu = 1 << rng.randint(0, top)
        return tuple(sample_terminals(g, mu, rng))

    best = best_certificate(_singleton_cuts(g))
    budget = _round_budget(params, best.value, W)
    oracle_calls = 0
    used = set()
    rounds = 0
    pool = ThreadPoolExecutor(params.workers) if params.workers > 1 else None
    try:
        while rounds < budget:
            batch = [draw(i) for i in range(rounds, min(rounds + _BATCH, params.max_trials))]
            fresh = list(dict.fromkeys(R for R in batch if len(R) >= 2 and R not in cache))
            if pool is None:
                solved = map(solve, fresh)
            else:
                solved = pool.map(solve, fresh)
            cache.update(zip(fresh, solved))
            for R in batch:
                if rounds >= budget:
                    break
                rounds += 1
                if len(R) < 2:
                    continue
                if R not in used:
                    used.add(R)
                    oracle_calls += ceil_log2(len(R)) + len(R)
                cand = cache[R]
                if cand.sort_key() < best.sort_key():
                    best = cand
                    budget = _round_budget(params, best.value, W)
    finally:
        if pool is not None:
            pool.shutdown()
    return CutCertificate(
        best.value,
        best.side_pair,
        best.removed,
        "vertex",
        {
            "seed": params.seed,
            "trials": rounds,
            "oracle_calls": oracle_calls,
            "epsilon": str(params.epsilon),
            "delta": str(params.delta),
        },
    )


def exact_vertex_connectivity(g: WeightedGraph, seed: int = 0, delta=Fraction(1, 1000), workers: int = 1, c: float = 4) -> CutCertificate:
    """Minimum vertex cut with probability ``1 - delta``, via ``epsilon = 1/(B+1)``."""
    if g.n < 2 or g.is_complete():
        raise NoCutError("complete graph has no vertex cut")
    if any(g.vertex_weight(v) == INF for v in range(g.n)):
        raise InstanceError("exact vertex connectivity needs finite integer vertex weights")
    B = best_certificate(_singleton_cuts(g)).value
    params = VCParams(epsilon=Fraction(1, B + 1), seed=seed, delta=delta, c=c, workers=workers)
    return approx_vertex_connectivity(g, params)


def _is_unweighted(g: WeightedGraph) -> bool:
    return all(w == 1 for _, _, w in g.edges) and all(g.vertex_weight(v) == 1 for v in range(g.n))


def ni_sparsify(g: WeightedGraph, k: int) -> WeightedGraph:
    """Union of the first ``k`` forests of a maximum-adjacency scan.

    Keeps at most ``k (n - 1)`` edges and preserves ``min(k, local
    connectivity)`` for every vertex pair, both for vertices and edges.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not _is_unweighted(g):
        raise InstanceError("sparsification expects an unweighted simple graph")
    n = g.n
    r = [0] * n
    scanned = [False] * n
    edge_done = [False] * g.m
    keep = []
    # Bucket queue keyed by r; lazy deletion.
    buckets: list[list[int]] = [list(range(n - 1, -1, -1))]
    top = 0
    for _ in range(n):
        while True:
            while top >= 0 and not buckets[top]:
                top -= 1
            x = buckets[top].pop()
            if not scanned[x] and r[x] == top:
                break
        scanned[x] = True
        for i in g.incident[x]:
            if edge_done[i]:
                continue
            u, v, _ = g.edges[i]
            y = v if u == x else u
            if scanned[y]:
                continue
            edge_done[i] = True
            r[y] += 1
            if r[y] <= k:
                keep.append(g.edges[i])
            if r[y] >= len(buckets):
                buckets.append([])
            buckets[r[y]].append(y)
            top = max(top, r[y])
    return WeightedGraph(n, tuple(sorted(keep)), g.vertex_weights, g.labels)


def exact_vc_sparse(g: WeightedGraph, seed: int = 0, delta=Fraction(1, 1000), workers: int = 1) -> CutCertificate:
    """Exact vertex connectivity of an unweighted simple graph, solved on a sparsifier.

    The sparsifier keeps ``min degree + 1`` forests, so any cut it reports
    lies between a pair that is nonadjacent in ``g``; the certificate is then
    rebuilt in ``g`` for that pair.
    """
    if g.n < 2 or g.is_complete():
        raise NoCutError("complete graph has no vertex cut")
    if not _is_unweighted(g):
        raise InstanceError("sparsification expects an unweighted simple graph")
    k = min(len(a) for a in g.adjacency) + 1
    h = ni_sparsify(g, k)
    cert = exact_vertex_connectivity(h, seed=seed, delta=delta, workers=workers)
    s, t = min(cert.side_pair.first), min(cert.side_pair.second)
    rebuilt = vertex_min_st_cut(g, s, t)
    meta = dict(cert.meta, sparsifier_edges=h.m, forests=k)
    return CutCertificate(rebuilt.value, rebuilt.side_pair, rebuilt.removed, "vertex", meta)


def vertex_cut_value(g: WeightedGraph, removed: Iterable[int]):
    return total_weight(g.vertex_weight(v) for v in removed)
