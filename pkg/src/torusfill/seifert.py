"""Exceptional fibres and the partition calculus for vertical splittings.

A vertical genus-two splitting of a Seifert fibred space over the sphere
with three exceptional fibres is recorded by an ordered partition of the
fibres: ``side1`` lies in the first compression body, and the surface is
oriented towards ``side2``.  Two such splittings are isotopic exactly
when one can be reached from the other by moving flippable fibres
(``b = +-1 mod a``) across the partition.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

__all__ = [
    "ExceptionalFiber",
    "OrientedPartition",
    "IsotopyClasses",
    "fiber_flippable",
    "normalize_b",
    "enumerate_oriented_partitions",
    "flip_moves",
    "isotopy_classes",
]


@dataclass(frozen=True)
class ExceptionalFiber:
    a: int
    b: int
    label: str = "f"

    def __post_init__(self):
        if abs(self.a) < 2:
            raise ValueError(f"exceptional fibre needs |a| >= 2, got a={self.a}")

    @property
    def b_normalized(self) -> int:
        return normalize_b(self.a, self.b)

    @property
    def flippable(self) -> bool:
        return fiber_flippable(self)


def normalize_b(a: int, b: int) -> int:
    if a == 0:
        raise ValueError("a must be non-zero")
    return b % abs(a)


def fiber_flippable(f: ExceptionalFiber) -> bool:
    m = abs(f.a)
    if m < 2:
        raise ValueError(f"exceptional fibre needs |a| >= 2, got a={f.a}")
    return f.b % m in (1, m - 1)


@dataclass(frozen=True)
class OrientedPartition:
    side1: frozenset
    side2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "side1", frozenset(self.side1))
        object.__setattr__(self, "side2", frozenset(self.side2))
        if not self.side1 or not self.side2:
            raise ValueError("both sides of a partition must be non-empty")
        if self.side1 & self.side2:
            raise ValueError("sides of a partition must be disjoint")

    @property
    def labels(self) -> frozenset:
        return self.side1 | self.side2

    def reversed(self) -> "OrientedPartition":
        return OrientedPartition(self.side2, self.side1)

    def key(self) -> tuple:
        return (len(self.side1), tuple(sorted(self.side1)), tuple(sorted(self.side2)))

    def __str__(self) -> str:
        return "{%s || %s}" % (",".join(sorted(self.side1)), ",".join(sorted(self.side2)))


def enumerate_oriented_partitions(labels: Iterable[str]) -> list[OrientedPartition]:
    """Every ordered split of ``labels`` into two non-empty sides."""
    labels = sorted(set(labels))
    if len(labels) < 2:
        raise ValueError("need at least two labels")
    out = []
    for k in range(1, len(labels)):
        for side1 in combinations(labels, k):
            out.append(OrientedPartition(frozenset(side1), frozenset(labels) - frozenset(side1)))
    return sorted(out, key=OrientedPartition.key)


def flip_moves(p: OrientedPartition, flippable: Mapping[str, bool]) -> list[OrientedPartition]:
    moves = set()
    for f in sorted(p.labels):
        if not flippable.get(f, False):
            continue
        if f in p.side1:
            s1, s2 = p.side1 - {f}, p.side2 | {f}
        else:
            s1, s2 = p.side1 | {f}, p.side2 - {f}
        # a move that empties a side leaves the genus-two family
        if s1 and s2:
            moves.add(OrientedPartition(s1, s2))
    return sorted(moves, key=OrientedPartition.key)


@dataclass(frozen=True)
class IsotopyClasses:
    orbits: tuple  # tuple of frozenset[OrientedPartition], ordered by representative

    def __len__(self) -> int:
        return len(self.orbits)

    def representative(self, orbit: frozenset) -> OrientedPartition:
        return min(orbit, key=OrientedPartition.key)

    def orbit_of(self, p: OrientedPartition) -> frozenset:
        for orbit in self.orbits:
            if p in orbit:
                return orbit
        raise KeyError(str(p))

    def flips(self, orbit: frozenset) -> bool:
        """An orbit flips when it contains some partition together with its reversal."""
        return any(p.reversed() in orbit for p in orbit)


def isotopy_classes(labels: Iterable[str], flippable: Mapping[str, bool]) -> IsotopyClasses:
    """Connected components of the flip-move graph, found by breadth-first search."""
    nodes = enumerate_oriented_partitions(labels)
    seen: set = set()
    orbits = []
    for start in nodes:
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in flip_moves(cur, flippable):
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        seen |= orbit
        orbits.append(frozenset(orbit))
    orbits.sort(key=lambda o: min(p.key() for p in o))
    return IsotopyClasses(tuple(orbits))
