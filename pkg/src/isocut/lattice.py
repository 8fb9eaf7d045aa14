"""Isolating cuts and sampled global minimum cuts over a crossing lattice.

The driver is generic: a problem plugs in through a :class:`CutOracle` that
answers two questions, both returning :class:`~isocut.core.CutCertificate`
objects whose ``side_pair`` lives in the problem's lattice.

``outer(terms)``
    an f-minimum cut of the terminal set-pair ``terms`` (a partition of
    the current terminal set).
``inner(r, piece)``
    an f-minimum cut ``Y`` with ``Y <= piece`` and ``r`` in ``Y.first``.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Protocol, Sequence

from .core import INF, CutCertificate, Weight, best_certificate
from .setpair import LatticeError, SetPair


class CutOracle(Protocol):
    def outer(self, terms: SetPair) -> CutCertificate: ...

    def inner(self, r: Hashable, piece: SetPair) -> CutCertificate: ...


class OracleContractError(RuntimeError):
    """An oracle returned a set-pair that does not cut what it was asked to cut."""


@dataclass(frozen=True)
class SamplingParams:
    seed: int = 0
    delta: Fraction = Fraction(1, 1000)
    c: float = 4
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "delta", Fraction(self.delta))
        if not 0 < self.delta < 1:
            raise ValueError("failure probability must lie in (0, 1)")
        if self.c < 1:
            raise ValueError("trial multiplier must be at least 1")

    @property
    def trials_per_scale(self) -> int:
        return math.ceil(self.c * math.log(1 / self.delta))


def derive_rng(seed: int, *path: int) -> random.Random:
    """Independent stream for ``path`` under the root ``seed``."""
    return random.Random(":".join(str(x) for x in (seed,) + path))


def ceil_log2(k: int) -> int:
    return (k - 1).bit_length()


def binary_partitions(R: Sequence[Hashable]) -> list[SetPair]:
    """``ceil(log2 |R|)`` partitions of ``R`` separating every pair of its elements.

    Partition ``i`` puts the elements whose index has bit ``i`` clear first.
    """
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    out = []
    for bit in range(ceil_log2(len(R))):
        zero = [r for i, r in enumerate(R) if not (i >> bit) & 1]
        one = [r for i, r in enumerate(R) if (i >> bit) & 1]
        out.append(SetPair.of(zero, one))
    return out


def isolating_components(R: Sequence[Hashable], cuts: Sequence[SetPair], partitions: Sequence[SetPair] | None = None) -> dict:
    """Intersect the partition cuts, each oriented to hold ``r`` first.

    ``cuts[i]`` must be a minimum cut of ``binary_partitions(R)[i]``.  The
    result maps each ``r`` to a set-pair that cuts ``(r, R - r)`` and lies
    above some minimum such cut; first components are pairwise disjoint.
    """
    if partitions is None:
        partitions = binary_partitions(R)
    if len(cuts) != len(partitions):
        raise ValueError("one cut per partition is required")
    for W, S in zip(cuts, partitions):
        if not W.cuts(S):
            raise OracleContractError(f"cut {W} does not cut partition {S}")
    pieces = {}
    for r in R:
        acc = None
        for W in cuts:
            oriented = W if r in W.first else W.T
            if r not in oriented.first:
                raise OracleContractError(f"terminal {r!r} lies on neither side of {W}")
            acc = oriented if acc is None else acc & oriented
        pieces[r] = acc
    return pieces


def isolating_cuts(oracle: CutOracle, R: Sequence[Hashable], executor: ThreadPoolExecutor | None = None) -> dict:
    """Minimum ``(r, R - r)`` cut for every terminal ``r``.

    Uses ``ceil(log2 |R|)`` outer calls and then one inner call per terminal on
    its piece.  Each certificate's ``meta["piece"]`` is the piece it was found in.
    """
    R = list(R)
    partitions = binary_partitions(R)
    walls = [oracle.outer(S) for S in partitions]
    pieces = isolating_components(R, [w.side_pair for w in walls], partitions)

    def solve(r):
        cert = oracle.inner(r, pieces[r])
        Y = cert.side_pair
        if r not in Y.first or not Y <= pieces[r]:
            raise OracleContractError(f"inner cut for {r!r} escapes its piece")
        cert.meta["piece"] = pieces[r]
        return cert

    if executor is None:
        results = [solve(r) for r in R]
    else:
        results = list(executor.map(solve, R))
    return dict(zip(R, results))


def _sample(R: Sequence[Hashable], rate: Fraction, rng: random.Random) -> tuple:
    if rate == 1:
        return tuple(R)
    p = float(rate)
    return tuple(r for r in R if rng.random() < p)


def global_min_cut_sampling(oracle: CutOracle, R: Sequence[Hashable], params: SamplingParams = SamplingParams()) -> CutCertificate:
    """Minimum cut separating some two elements of ``R``, by sampled isolating cuts.

    For each scale ``l`` in ``1, 2, 4, ..., 2**ceil(log2 |R|)`` it runs
    ``params.trials_per_scale`` trials; a trial keeps each terminal with
    probability ``1/l`` and, if at least two survive, computes their
    isolating cuts.  Identical samples are solved once.  The best cut under
    (value, size of first side, sorted first side) is returned with the
    trial and oracle-call counts in ``meta``.
    """
    R = list(R)
    if len(R) < 2:
        raise ValueError("need at least two terminals")
    scales = [1 << i for i in range(ceil_log2(len(R)) + 1)]
    samples: list[tuple] = []
    trials = 0
    for si, ell in enumerate(scales):
        for trial in range(params.trials_per_scale):
            trials += 1
            sample = _sample(R, Fraction(1, ell), derive_rng(params.seed, si, trial))
            if len(sample) >= 2:
                samples.append(sample)
    distinct = list(dict.fromkeys(samples))

    if params.workers > 1:
        with ThreadPoolExecutor(params.workers) as pool:
            results = list(pool.map(lambda Rp: isolating_cuts(oracle, Rp), distinct))
    else:
        results = [isolating_cuts(oracle, Rp) for Rp in distinct]

    best = best_certificate(c for found in results for c in found.values())
    if best is None:
        raise RuntimeError("no trial kept two terminals")
    best.meta.update(
        seed=params.seed,
        trials=trials,
        samples=len(samples),
        distinct_samples=len(distinct),
        oracle_calls=sum(ceil_log2(len(Rp)) + len(Rp) for Rp in distinct),
        delta=str(params.delta),
        c=params.c,
    )
    best.meta.pop("piece", None)
    return best


class CountingOracle:
    """Pass-through that tallies outer and inner calls."""

    def __init__(self, oracle: CutOracle):
        self.oracle = oracle
        self.outer_calls = 0
        self.inner_calls = 0

    def outer(self, terms):
        self.outer_calls += 1
        return self.oracle.outer(terms)

    def inner(self, r, piece):
        self.inner_calls += 1
        return self.oracle.inner(r, piece)


# ---------------------------------------------------------------------------
# Symmetric submodular set functions, solved by exhaustive minimization.

#: Largest ground set brute_sfm_cut will enumerate.
SFM_MAX_GROUND = 20


def brute_sfm_cut(f: Callable[[frozenset], Weight], A: Iterable, B: Iterable, ground: Iterable, max_ground: int = SFM_MAX_GROUND) -> CutCertificate:
    """Minimize ``f(X)`` over ``A <= X <= ground - B`` by enumeration.

    With ``A`` and ``B`` both empty the trivial sets ``{}`` and ``ground`` are
    excluded.  Ties go to the smallest ``X``, then the lexicographically
    smallest sorted ``X``.
    """
    A, B, V = frozenset(A), frozenset(B), frozenset(ground)
    if len(V) > max_ground:
        raise ValueError(f"ground set of {len(V)} elements exceeds the enumeration cap {max_ground}")
    if A & B:
        raise ValueError("forced sides overlap")
    if not A | B <= V:
        raise ValueError("forced sides leave the ground set")
    free = sorted(V - A - B)
    trivial = not A and not B
    best_key, best_X, best_val = None, None, None
    for size in range(len(free) + 1):
        for combo in itertools.combinations(free, size):
            X = A | frozenset(combo)
            if trivial and (not X or X == V):
                continue
            val = f(X)
            key = (val, len(X), sorted(X))
            if best_key is None or key < best_key:
                best_key, best_X, best_val = key, X, val
    if best_X is None:
        raise ValueError("no admissible set")
    return CutCertificate(best_val, SetPair.bipartition(best_X, V), frozenset(), "set", {})


class SubmodularCutOracle:
    """Bipartition-lattice oracle for a symmetric submodular set function."""

    def __init__(self, f: Callable[[frozenset], Weight], ground: Iterable, max_ground: int = SFM_MAX_GROUND):
        self.f = f
        self.ground = frozenset(ground)
        self.max_ground = max_ground

    def outer(self, terms: SetPair) -> CutCertificate:
        return brute_sfm_cut(self.f, terms.first, terms.second, self.ground, self.max_ground)

    def inner(self, r, piece: SetPair) -> CutCertificate:
        # Everything outside the piece behaves as one contracted element
        # forced onto the far side.
        return brute_sfm_cut(self.f, {r}, self.ground - piece.first, self.ground, self.max_ground)


def check_symmetric_submodular(f: Callable[[frozenset], Weight], ground: Iterable, samples: int = 200, seed: int = 0) -> bool:
    """Spot-check symmetry and submodularity of ``f`` on random set pairs."""
    V = sorted(ground)
    full = frozenset(V)
    rng = random.Random(seed)
    for _ in range(samples):
        X = frozenset(v for v in V if rng.random() < 0.5)
        Y = frozenset(v for v in V if rng.random() < 0.5)
        if f(X) != f(full - X):
            return False
        if f(X) + f(Y) < f(X | Y) + f(X & Y):
            return False
    return True


def symsubmod_min_cut(f: Callable[[frozenset], Weight], ground: Iterable, R: Sequence | None = None, params: SamplingParams = SamplingParams(), check: bool = True) -> CutCertificate:
    """Minimum ``f``-cut separating two elements of ``R`` (default: the whole ground set)."""
    ground = frozenset(ground)
    if check and not check_symmetric_submodular(f, ground, seed=params.seed):
        raise ValueError("function is not symmetric submodular")
    R = sorted(ground) if R is None else list(R)
    return global_min_cut_sampling(SubmodularCutOracle(f, ground), R, params)


__all__ = [
    "CutOracle",
    "CountingOracle",
    "LatticeError",
    "OracleContractError",
    "SamplingParams",
    "binary_partitions",
    "brute_sfm_cut",
    "check_symmetric_submodular",
    "derive_rng",
    "global_min_cut_sampling",
    "isolating_components",
    "isolating_cuts",
    "symsubmod_min_cut",
    "INF",
]
