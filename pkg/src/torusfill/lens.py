"""Lens spaces up to (unoriented) homeomorphism."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

__all__ = [
    "LensSpace",
    "EngmannResult",
    "normal_form",
    "homeomorphic",
    "torus_flips",
    "engmann_class_count",
]


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"L({self.p},{self.q}): p must be positive")
        if self.p == 1 and self.q != 0:
            raise ValueError("S3 is stored as L(1,0)")
        if self.p >= 2 and not (0 <= self.q < self.p and gcd(self.p, self.q) == 1):
            raise ValueError(f"L({self.p},{self.q}) is not in normal form")

    @property
    def is_s3(self) -> bool:
        return self.p == 1

    def __str__(self) -> str:
        return "S3" if self.is_s3 else f"L({self.p},{self.q})"


def normal_form(p: int, q: int) -> LensSpace:
    if p <= 0:
        raise ValueError(f"L({p},{q}): p must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"L({p},{q}): p and q must be coprime")
    return LensSpace(p, q % p)


def _class(L: LensSpace) -> frozenset:
    if L.p == 1:
        return frozenset({0})
    inv = pow(L.q, -1, L.p)
    return frozenset({L.q, -L.q % L.p, inv, -inv % L.p})


def homeomorphic(L1: LensSpace, L2: LensSpace) -> bool:
    """Classical classification, orientation ignored: ``q2 = +-q1^(+-1) mod p``."""
    return L1.p == L2.p and L2.q in _class(L1)


def torus_flips(L: LensSpace) -> bool:
    """Whether the Heegaard torus is isotopic to its reverse, i.e. ``L = L(k,1)``."""
    if L.p == 1:
        return True
    return L.q in (1, L.p - 1)


@dataclass(frozen=True)
class EngmannResult:
    guaranteed_distinct: bool
    exception: Optional[str]  # None, "a" or "b"


def engmann_class_count(L1: LensSpace, L2: LensSpace) -> EngmannResult:
    """Whether ``L1 # L2`` is known to carry four distinct oriented genus-2 surfaces.

    When one of the two exceptional conditions fires the number of classes
    is not determined here; only the exception tag is reported.
    """
    for L in (L1, L2):
        if (L.q * L.q) % L.p in (1 % L.p, (L.p - 1) % L.p):
            return EngmannResult(False, "a")
    if L1.p == L2.p:
        ratio = (L1.q * pow(L2.q, -1, L1.p)) % L1.p
        if ratio in (1, L1.p - 1):
            return EngmannResult(False, "b")
    return EngmannResult(True, None)
