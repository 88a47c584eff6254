"""Canopies of oriented Heegaard trees for fillings of torus knot exteriors.

Every filling slope falls into one of seven cases.  For each case the
canopy is built explicitly: non-stabilized surfaces are leaves, and each
leaf is joined to the stabilized surface it becomes after one
stabilization.  In the closed manifolds all one-fold stabilizations of
genus-two surfaces agree, so the apexes carry no sign.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .lens import torus_flips
from .seifert import OrientedPartition, isotopy_classes
from .slope import INFINITY, Slope, on_line, on_line_of_lines, parse_slope
from .torus_knot import (
    TorusKnot,
    fiber_slope,
    horizontal_genus,
    horizontal_strongly_irreducible,
    moser_a,
    moser_classify,
    require_admissible,
)

__all__ = [
    "FillingCase",
    "Kind",
    "SurfaceClass",
    "CanopyGraph",
    "filling_case",
    "build_canopy",
    "canopy_for_exterior",
    "vertical_label",
    "vertical_classes",
    "VERTICAL_LABELS",
]


class FillingCase(str, Enum):
    C1_S3 = "C1_S3"
    C2_Lens = "C2_Lens"
    C3_ConnSum = "C3_ConnSum"
    C4_SFS_Generic = "C4_SFS_Generic"
    C5_SFS_Horizontal = "C5_SFS_Horizontal"
    C6_SFS_TwoVertical = "C6_SFS_TwoVertical"
    C7_SFS_TwoVertical_Horizontal = "C7_SFS_TwoVertical_Horizontal"

    @property
    def code(self) -> int:
        return int(self.value[1])

    @property
    def short(self) -> str:
        return self.value[:2]

    @classmethod
    def from_code(cls, code: int) -> "FillingCase":
        return _BY_CODE[code]


_BY_CODE = {c.code: c for c in FillingCase}


class Kind(str, Enum):
    SPHERE = "Sphere"
    TORUS = "Torus"
    CONNSUM_TORUS = "ConnSumTorus"
    VERTICAL_INNER = "VerticalInner"
    VERTICAL_MIDDLE = "VerticalMiddle"
    VERTICAL_OUTER = "VerticalOuter"
    HORIZONTAL = "Horizontal"
    STABILIZED_APEX = "StabilizedApex"
    CHAIN_NODE = "ChainNode"


_KIND_ORDER = {k: i for i, k in enumerate(Kind)}
_SIGN_ORDER = {"+": 0, "-": 1, None: 2}
VERTICAL_LABELS = ("i+", "i-", "m+", "m-", "o+", "o-")
_LABEL_ORDER = {lab: i for i, lab in enumerate(VERTICAL_LABELS)}
_VERTICAL_KIND = {"i": Kind.VERTICAL_INNER, "m": Kind.VERTICAL_MIDDLE, "o": Kind.VERTICAL_OUTER}


@dataclass(frozen=True)
class SurfaceClass:
    name: str
    kind: Kind
    genus: int
    sign: Optional[str] = None
    merged_labels: frozenset = frozenset()
    self_flipping: bool = False

    @property
    def is_leaf(self) -> bool:
        return self.kind not in (Kind.STABILIZED_APEX, Kind.CHAIN_NODE)

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], _SIGN_ORDER[self.sign], self.genus, self.name)

    @property
    def label(self) -> str:
        """Human-readable label used in DOT output."""
        sign = self.sign or ""
        if self.kind is Kind.SPHERE:
            text = "S2"
        elif self.kind is Kind.TORUS:
            text = "T" + sign
        elif self.kind is Kind.CONNSUM_TORUS:
            s1, s2 = self.name[len("connsum"):]
            text = f"T1{s1}#T2{s2}"
        elif self.kind in _VERTICAL_KIND.values():
            labs = sorted(self.merged_labels, key=_LABEL_ORDER.__getitem__)
            text = "=".join(f"Sigma_{lab}" for lab in labs)
        elif self.kind is Kind.HORIZONTAL:
            text = "Sigma_h" + sign
        elif self.kind is Kind.STABILIZED_APEX:
            text = "S(Sigma)" + sign
        else:
            text = "chain"
        return f"{text} (g={self.genus})"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "genus": self.genus,
            "sign": self.sign,
            "merged_labels": sorted(self.merged_labels, key=lambda x: _LABEL_ORDER.get(x, 99)),
            "self_flipping": self.self_flipping,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SurfaceClass":
        return cls(
            d["name"], Kind(d["kind"]), d["genus"], d["sign"],
            frozenset(d["merged_labels"]), d["self_flipping"],
        )


def _apex(genus: int, sign: Optional[str] = None) -> SurfaceClass:
    return SurfaceClass(f"apex_g{genus}{sign or ''}", Kind.STABILIZED_APEX, genus, sign)


@dataclass(frozen=True)
class CanopyGraph:
    knot: TorusKnot
    vertices: tuple
    edges: tuple  # (source name, target name): target is one stabilization of source
    case: Optional[FillingCase] = None
    slope: Optional[Slope] = None
    chain_elided: bool = False
    chain_span: Optional[tuple] = None
    certainty: Optional[str] = None

    def vertex(self, name: str) -> SurfaceClass:
        for v in self.vertices:
            if v.name == name:
                return v
        raise KeyError(name)

    @property
    def leaves(self) -> list[SurfaceClass]:
        return [v for v in self.vertices if v.is_leaf]

    @property
    def min_leaf_genus(self) -> int:
        return min(v.genus for v in self.leaves)

    def components(self) -> int:
        parent = {v.name: v.name for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        return len({find(v) for v in parent})

    def to_dot(self) -> str:
        title = str(self.knot)
        if self.slope is not None:
            title += f" filled along {self.slope}"
        if self.case is not None:
            title += f" [{self.case.value}]"
        lines = ["digraph canopy {", f'  graph [label="{title}", rankdir=BT];']
        for v in self.vertices:
            attrs = f'label="{v.label}"'
            if v.self_flipping:
                attrs += ", peripheries=2"
            lines.append(f'  "{v.name}" [{attrs}];')
        for a, b in self.edges:
            if self.chain_elided and self.chain_span and (a, b) == self._chain_edge():
                lo, hi = self.chain_span
                lines.append(
                    f'  "{a}" -> "{b}" [id="chain_elided", label="chain g={lo}..{hi}", style=dashed];'
                )
            else:
                lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def _chain_edge(self) -> tuple:
        lo, hi = self.chain_span
        return (f"apex_g{lo}", f"apex_g{hi}")

    def to_dict(self) -> dict:
        return {
            "knot": [self.knot.p, self.knot.q],
            "slope": None if self.slope is None else str(self.slope),
            "case": None if self.case is None else self.case.value,
            "vertices": [v.to_dict() for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "chain_elided": self.chain_elided,
            "chain_span": None if self.chain_span is None else list(self.chain_span),
            "certainty": self.certainty,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "CanopyGraph":
        return cls(
            knot=TorusKnot(*d["knot"]),
            vertices=tuple(SurfaceClass.from_dict(v) for v in d["vertices"]),
            edges=tuple(tuple(e) for e in d["edges"]),
            case=None if d["case"] is None else FillingCase(d["case"]),
            slope=None if d["slope"] is None else parse_slope(d["slope"]),
            chain_elided=d["chain_elided"],
            chain_span=None if d["chain_span"] is None else tuple(d["chain_span"]),
            certainty=d["certainty"],
        )

    @classmethod
    def from_json(cls, text: str) -> "CanopyGraph":
        return cls.from_dict(json.loads(text))


def _graph(knot, vertices, edges, **kw) -> CanopyGraph:
    vs = tuple(sorted(vertices, key=SurfaceClass.sort_key))
    order = {v.name: i for i, v in enumerate(vs)}
    es = tuple(sorted(set(edges), key=lambda e: (order[e[0]], order[e[1]])))
    return CanopyGraph(knot, vs, es, **kw)


def filling_case(K: TorusKnot, alpha: Slope, force: bool = False) -> FillingCase:
    """Which of the seven canopy shapes the ``alpha``-filling of ``K`` has."""
    require_admissible(K, force)
    if alpha == INFINITY:
        return FillingCase.C1_S3
    a = moser_a(K, alpha)
    if a == 0:
        return FillingCase.C3_ConnSum
    if abs(a) == 1:
        return FillingCase.C1_S3 if abs(alpha.r) == 1 else FillingCase.C2_Lens
    horizontal = on_line(Slope(0, 1), alpha) and horizontal_strongly_irreducible(K, alpha)
    two_vertical = on_line_of_lines(fiber_slope(K), alpha)
    if horizontal and two_vertical:
        return FillingCase.C7_SFS_TwoVertical_Horizontal
    if horizontal:
        return FillingCase.C5_SFS_Horizontal
    if two_vertical:
        return FillingCase.C6_SFS_TwoVertical
    return FillingCase.C4_SFS_Generic


def vertical_label(part: OrientedPartition, boundary: str = "f_new") -> str:
    """Name a vertical splitting ``i+``, ``m-``, ... by where the boundary fibre sits."""
    if boundary in part.side1:
        sign, own = "+", part.side1
    else:
        sign, own = "-", part.side2
    others = own - {boundary}
    if not others:
        return "m" + sign
    (other,) = others
    return ("i" if other == "f_i" else "o") + sign


def _vertical_leaves(flippable: dict, boundary: str) -> list[SurfaceClass]:
    classes = isotopy_classes(["f_i", "f_o", boundary], flippable)
    leaves = []
    for orbit in classes.orbits:
        labs = frozenset(vertical_label(p, boundary) for p in orbit)
        ordered = sorted(labs, key=_LABEL_ORDER.__getitem__)
        rep = ordered[0]
        flips = classes.flips(orbit)
        leaves.append(
            SurfaceClass(
                "vert_" + "=".join(ordered),
                _VERTICAL_KIND[rep[0]],
                2,
                None if flips else rep[1],
                labs,
                flips,
            )
        )
    return leaves


def vertical_classes(K: TorusKnot, alpha: Slope):
    """Isotopy classes of the six oriented vertical splittings after an SFS filling."""
    M = moser_classify(K, alpha)
    if M.type != "SFS":
        raise ValueError(f"{alpha}-filling of {K} is not a small Seifert fibred space")
    flippable = {f.label: f.flippable for f in M.fibers}
    return isotopy_classes(["f_i", "f_o", "f_new"], flippable)


def build_canopy(
    K: TorusKnot, alpha: Slope, force: bool = False, expand_chain: bool = False
) -> CanopyGraph:
    adm = require_admissible(K, force)
    case = filling_case(K, alpha, force=True)
    M = moser_classify(K, alpha)
    kw: dict = {"case": case, "slope": alpha}
    vertices: list = []
    edges: list = []

    if case is FillingCase.C1_S3:
        vertices.append(SurfaceClass("sphere", Kind.SPHERE, 0, None, self_flipping=True))
    elif case is FillingCase.C2_Lens:
        if torus_flips(M.lens):
            vertices.append(SurfaceClass("torus", Kind.TORUS, 1, None, self_flipping=True))
        else:
            apex = _apex(2)
            vertices += [SurfaceClass("torus+", Kind.TORUS, 1, "+"),
                         SurfaceClass("torus-", Kind.TORUS, 1, "-"), apex]
            edges += [("torus+", apex.name), ("torus-", apex.name)]
    elif case is FillingCase.C3_ConnSum:
        apex = _apex(3)
        vertices.append(apex)
        for s1 in "+-":
            for s2 in "+-":
                v = SurfaceClass(f"connsum{s1}{s2}", Kind.CONNSUM_TORUS, 2, None,
                                 frozenset({f"T1{s1}", f"T2{s2}"}))
                vertices.append(v)
                edges.append((v.name, apex.name))
        kw["certainty"] = "proven" if adm.condition2 else "conjectured"
    else:
        flippable = {f.label: f.flippable for f in M.fibers}
        apex = _apex(3)
        vertices.append(apex)
        for leaf in _vertical_leaves(flippable, "f_new"):
            vertices.append(leaf)
            edges.append((leaf.name, apex.name))
        if case in (FillingCase.C5_SFS_Horizontal, FillingCase.C7_SFS_TwoVertical_Horizontal):
            hg = horizontal_genus(K)
            top = _apex(hg + 1)
            vertices += [SurfaceClass("horiz+", Kind.HORIZONTAL, hg, "+"),
                         SurfaceClass("horiz-", Kind.HORIZONTAL, hg, "-"), top]
            edges += [("horiz+", top.name), ("horiz-", top.name)]
            kw["chain_span"] = (3, hg + 1)
            if expand_chain:
                prev = apex.name
                for g in range(4, hg + 1):
                    node = SurfaceClass(f"chain_g{g}", Kind.CHAIN_NODE, g)
                    vertices.append(node)
                    edges.append((prev, node.name))
                    prev = node.name
                edges.append((prev, top.name))
            else:
                kw["chain_elided"] = True
                edges.append((apex.name, top.name))
    return _graph(K, vertices, edges, **kw)


def canopy_for_exterior(K: TorusKnot, force: bool = False) -> CanopyGraph:
    """Canopy of the knot exterior itself: one tree per sign, never joined."""
    require_admissible(K, force)
    # f_i has invariants (p,q), f_o has (q,p); the boundary torus never moves
    flippable = {
        "f_i": K.q % K.p in (1, K.p - 1),
        "f_o": K.p % K.q in (1, K.q - 1),
        "dX": False,
    }
    vertices: list = []
    edges: list = []
    for leaf in _vertical_leaves(flippable, "dX"):
        apex = _apex(3, leaf.sign)
        vertices.append(leaf)
        edges.append((leaf.name, apex.name))
        if apex not in vertices:
            vertices.append(apex)
    return _graph(K, vertices, edges)
