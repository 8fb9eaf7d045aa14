"""Ordered pairs of disjoint sets and the crossing-lattice operations on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Hashable, Iterable


class LatticeError(ValueError):
    """Raised when a set-pair operation leaves the pairwise-disjoint lattice."""


@dataclass(frozen=True)
class SetPair:
    """A set-pair ``(first, second)`` with ``first`` and ``second`` disjoint.

    ``a | b`` is the union-first operation ``(A1 | A2, B1 & B2)`` and
    ``a & b`` is the intersection-first operation ``(A1 & A2, B1 | B2)``.
    ``a <= b`` is the lattice order: ``a.first <= b.first`` and
    ``b.second <= a.second``.
    """

    first: frozenset
    second: frozenset

    def __post_init__(self):
        if not isinstance(self.first, frozenset):
            object.__setattr__(self, "first", frozenset(self.first))
        if not isinstance(self.second, frozenset):
            object.__setattr__(self, "second", frozenset(self.second))
        if self.first & self.second:
            raise LatticeError(
                f"set-pair components overlap on {sorted(self.first & self.second, key=repr)}"
            )

    @classmethod
    def of(cls, first: Iterable[Hashable], second: Iterable[Hashable]) -> "SetPair":
        return cls(frozenset(first), frozenset(second))

    @classmethod
    def bipartition(cls, first: Iterable[Hashable], ground: AbstractSet) -> "SetPair":
        first = frozenset(first)
        return cls(first, frozenset(ground) - first)

    @property
    def T(self) -> "SetPair":
        return SetPair(self.second, self.first)

    def __or__(self, other: "SetPair") -> "SetPair":
        return SetPair(self.first | other.first, self.second & other.second)

    def __and__(self, other: "SetPair") -> "SetPair":
        return SetPair(self.first & other.first, self.second | other.second)

    def __le__(self, other: "SetPair") -> bool:
        return self.first <= other.first and other.second <= self.second

    def __ge__(self, other: "SetPair") -> bool:
        return other <= self

    def cuts(self, terminals: "SetPair") -> bool:
        """True if this pair is a cut for ``terminals`` (componentwise containment)."""
        return terminals.first <= self.first and terminals.second <= self.second

    def sort_key(self) -> tuple:
        return (len(self.first), sorted(self.first))


# Naming follows the lattice definition used throughout the package: the
# union-first operation is called the meet and the intersection-first one
# the join.
def meet(a: SetPair, b: SetPair) -> SetPair:
    return a | b


def join(a: SetPair, b: SetPair) -> SetPair:
    return a & b


def transpose(a: SetPair) -> SetPair:
    return a.T


def leq(a: SetPair, b: SetPair) -> bool:
    return a <= b
