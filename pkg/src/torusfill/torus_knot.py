"""Torus knot exteriors and Moser's classification of their Dehn fillings."""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .lens import LensSpace, normal_form
from .seifert import ExceptionalFiber, normalize_b
from .slope import Slope, dual_pair, normalize, parse_slope

__all__ = [
    "TorusKnot",
    "Admissibility",
    "InadmissibleKnot",
    "FilledManifold",
    "admissibility",
    "require_admissible",
    "fiber_slope",
    "moser_a",
    "longitude",
    "moser_classify",
    "horizontal_genus",
    "horizontal_strongly_irreducible",
    "bridge_number",
]


@dataclass(frozen=True)
class TorusKnot:
    """A non-trivial torus knot, stored with ``p > q >= 2``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = max(self.p, self.q), min(self.p, self.q)
        if q < 2:
            raise ValueError(f"T({self.p},{self.q}) is trivial; need both |p|,|q| >= 2")
        if p == q or gcd(p, q) != 1:
            raise ValueError(f"T({self.p},{self.q}): p and q must be coprime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class Admissibility:
    condition1: bool
    condition2: bool

    @property
    def ok(self) -> bool:
        return self.condition1 and self.condition2

    def failures(self) -> list[str]:
        out = []
        if not self.condition1:
            out.append("condition (1): p = +-1 mod q or q = +-1 mod p")
        if not self.condition2:
            out.append("condition (2): q^2 = +-1 mod p or p^2 = +-1 mod q")
        return out


class InadmissibleKnot(ValueError):
    def __init__(self, knot: TorusKnot, adm: Admissibility):
        self.knot = knot
        self.admissibility = adm
        super().__init__(f"{knot} is not admissible; fails " + "; ".join(adm.failures()))


def _pm1(x: int, m: int) -> bool:
    return x % m in (1 % m, (m - 1) % m)


def admissibility(K: TorusKnot) -> Admissibility:
    p, q = K.p, K.q
    c1 = not _pm1(p, q) and not _pm1(q, p)
    c2 = not _pm1(q * q, p) and not _pm1(p * p, q)
    return Admissibility(c1, c2)


def require_admissible(K: TorusKnot, force: bool = False) -> Admissibility:
    adm = admissibility(K)
    if not adm.ok and not force:
        raise InadmissibleKnot(K, adm)
    return adm


def fiber_slope(K: TorusKnot) -> Slope:
    """Slope of the regular fibre on the knot boundary, ``pq/1``."""
    return normalize(K.p * K.q, 1)


def moser_a(K: TorusKnot, alpha: Slope) -> int:
    return K.p * K.q * alpha.s - alpha.r


def longitude(alpha: Slope) -> Slope:
    """Canonical ``t/u`` with ``r*u - t*s = 1`` and ``0 < u <= s`` (``0/1`` for ``1/0``)."""
    t, u = dual_pair(alpha)
    return Slope(t, u)


@dataclass(frozen=True)
class FilledManifold:
    type: str  # "S3" | "Lens" | "ConnSum" | "SFS"
    a: int
    b_raw: int
    longitude: Slope
    lens: Optional[LensSpace] = None
    summands: tuple = ()
    fibers: tuple = ()

    @property
    def b_normalized(self) -> Optional[int]:
        return None if self.a == 0 else normalize_b(self.a, self.b_raw)

    def __str__(self) -> str:
        if self.type in ("S3", "Lens"):
            return str(self.lens)
        if self.type == "ConnSum":
            return " # ".join(str(L) for L in self.summands)
        return "SFS{S2 | %s}" % ", ".join(f"({f.a},{f.b})" for f in self.fibers)

    def to_dict(self) -> dict:
        d: dict = {"type": self.type}
        if self.type == "Lens":
            d["lens"] = [self.lens.p, self.lens.q]
        elif self.type == "ConnSum":
            d["summands"] = [[L.p, L.q] for L in self.summands]
        elif self.type == "SFS":
            d["fibers"] = [[f.a, f.b] for f in self.fibers]
        d["a"] = self.a
        d["b_raw"] = self.b_raw
        d["b_normalized"] = self.b_normalized
        d["longitude"] = str(self.longitude)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "FilledManifold":
        kind = d["type"]
        lon = parse_slope(d["longitude"])
        kw: dict = {}
        if kind == "S3":
            kw["lens"] = normal_form(1, 0)
        elif kind == "Lens":
            kw["lens"] = normal_form(*d["lens"])
        elif kind == "ConnSum":
            kw["summands"] = tuple(normal_form(*pq) for pq in d["summands"])
        elif kind == "SFS":
            kw["fibers"] = tuple(
                ExceptionalFiber(a, b, label) for (a, b), label in zip(d["fibers"], _FIBER_LABELS)
            )
        else:
            raise ValueError(f"unknown manifold type {kind!r}")
        return cls(kind, d["a"], d["b_raw"], lon, **kw)

    @classmethod
    def from_json(cls, text: str) -> "FilledManifold":
        return cls.from_dict(json.loads(text))


_FIBER_LABELS = ("f_i", "f_o", "f_new")


def moser_classify(K: TorusKnot, alpha: Slope) -> FilledManifold:
    """The manifold obtained by ``alpha``-filling the exterior of ``K``."""
    p, q = K.p, K.q
    a = moser_a(K, alpha)
    lon = longitude(alpha)
    b = p * q * lon.s - lon.r
    if a == 0:
        return FilledManifold("ConnSum", a, b, lon, summands=(normal_form(p, q), normal_form(q, p)))
    if abs(a) == 1:
        L = normal_form(abs(alpha.r), alpha.s * q * q)
        return FilledManifold("S3" if L.is_s3 else "Lens", a, b, lon, lens=L)
    fibers = (
        ExceptionalFiber(p, q, "f_i"),
        ExceptionalFiber(q, p, "f_o"),
        ExceptionalFiber(a, b, "f_new"),
    )
    return FilledManifold("SFS", a, b, lon, fibers=fibers)


def horizontal_genus(K: TorusKnot) -> int:
    # Printed as 2 g(F) = 2(p-1)(q-1); the fibre surface itself has genus (p-1)(q-1)/2.
    return 2 * (K.p - 1) * (K.q - 1)


def horizontal_strongly_irreducible(K: TorusKnot, alpha: Slope) -> bool:
    """For ``alpha = 1/n``: whether the horizontal splitting of the filling is strongly irreducible."""
    if abs(alpha.r) != 1:
        raise ValueError(f"{alpha} does not meet 0/1 once")
    return abs(moser_a(K, alpha)) > K.p * K.q


def bridge_number(K: TorusKnot) -> int:
    return min(K.p, K.q)
