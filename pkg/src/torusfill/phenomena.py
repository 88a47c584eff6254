"""What happens to the Heegaard structure at each filling slope.

Four phenomena are tracked for the genus-two splittings of the knot
exterior: the Heegaard genus drops, new non-stabilized surfaces appear,
old surfaces destabilize, and old surfaces become isotopic.
"""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from . import _accel
from .canopy import (
    VERTICAL_LABELS,
    FillingCase,
    build_canopy,
    Kind,
    SurfaceClass,
    filling_case,
    vertical_classes,
    vertical_label,
)
from .slope import INFINITY, Slope, on_line
from .torus_knot import (
    TorusKnot,
    bridge_number,
    fiber_slope,
    require_admissible,
)

__all__ = [
    "OLD_SURFACES",
    "Trichotomy",
    "PhenomenaReport",
    "SurveyRow",
    "Survey",
    "in_NX",
    "in_HX",
    "genus_filled",
    "new_surfaces",
    "destabilizations",
    "identifications",
    "flips_old",
    "trichotomy",
    "report",
    "survey",
    "swap_diagram",
    "SwapDiagram",
    "CSV_COLUMNS",
]

OLD_SURFACES = ("i", "m", "o")
GENUS_BEFORE = 2
_SIX = frozenset(VERTICAL_LABELS)
_ZERO_ONE = Slope(0, 1)


def in_NX(K: TorusKnot, alpha: Slope) -> bool:
    return alpha == INFINITY


def in_HX(K: TorusKnot, alpha: Slope) -> bool:
    """Membership in the union of the lines ``L_{pq/1}`` and ``L_{0/1}``."""
    return on_line(fiber_slope(K), alpha) or on_line(_ZERO_ONE, alpha)


def genus_filled(K: TorusKnot, alpha: Slope, force: bool = False) -> int:
    case = filling_case(K, alpha, force)
    return {FillingCase.C1_S3: 0, FillingCase.C2_Lens: 1}.get(case, 2)


def new_surfaces(K: TorusKnot, alpha: Slope, force: bool = False) -> list[SurfaceClass]:
    """New non-stabilized surfaces: canopy leaves not inherited from the exterior."""
    g = build_canopy(K, alpha, force)
    return [v for v in g.leaves if v.kind in _NEW_KINDS]


_NEW_KINDS = (Kind.SPHERE, Kind.TORUS, Kind.HORIZONTAL)


def destabilizations(K: TorusKnot, alpha: Slope, force: bool = False) -> frozenset:
    case = filling_case(K, alpha, force)
    if case in (FillingCase.C1_S3, FillingCase.C2_Lens):
        return frozenset(OLD_SURFACES)
    return frozenset()


def identifications(K: TorusKnot, alpha: Slope, force: bool = False) -> Optional[tuple]:
    """Which oriented old surfaces become isotopic; ``None`` when not determined."""
    case = filling_case(K, alpha, force)
    if case in (FillingCase.C1_S3, FillingCase.C2_Lens):
        return (_SIX,)
    if case is FillingCase.C3_ConnSum:
        return None
    classes = vertical_classes(K, alpha)
    out = [frozenset(vertical_label(p) for p in orbit) for orbit in classes.orbits]
    return tuple(sorted(out, key=_class_key))


def _class_key(c: frozenset) -> int:
    return min(VERTICAL_LABELS.index(x) for x in c)


def _flips_from(idents: Optional[tuple]) -> Optional[dict]:
    if idents is None:
        return None
    return {
        lab: any(f"{lab}+" in c and f"{lab}-" in c for c in idents)
        for lab in OLD_SURFACES
    }


def flips_old(K: TorusKnot, alpha: Slope, force: bool = False) -> Optional[dict]:
    return _flips_from(identifications(K, alpha, force))


@dataclass(frozen=True)
class Trichotomy:
    """Position of the core of the attached solid torus relative to each surface family."""

    summary: str  # "N", "H" or "C"
    families: dict = field(default_factory=dict)
    bridge_number: Optional[int] = None

    def to_dict(self) -> dict:
        return {"summary": self.summary, "families": dict(self.families),
                "bridge_number": self.bridge_number}


def trichotomy(K: TorusKnot, alpha: Slope, force: bool = False) -> Trichotomy:
    require_admissible(K, force)
    if in_NX(K, alpha):
        return Trichotomy("N", {"sphere": "N", "vertical": "C"}, bridge_number(K))
    if in_HX(K, alpha):
        family = "torus" if on_line(fiber_slope(K), alpha) else "horizontal"
        return Trichotomy("H", {family: "H", "vertical": "C"})
    return Trichotomy("C", {"vertical": "C"})


@dataclass(frozen=True)
class PhenomenaReport:
    knot: TorusKnot
    slope: Slope
    case: FillingCase
    genus_before: int
    genus_after: int
    new_surfaces: tuple
    destabilized_old: frozenset
    identifications: Optional[tuple]
    flips_old: Optional[dict]
    trichotomy: Trichotomy
    in_NX: bool
    in_HX: bool

    @property
    def class_count(self) -> Optional[int]:
        return None if self.identifications is None else len(self.identifications)

    def to_dict(self) -> dict:
        return {
            "knot": [self.knot.p, self.knot.q],
            "slope": str(self.slope),
            "case": self.case.value,
            "genus_before": self.genus_before,
            "genus_after": self.genus_after,
            "new_surfaces": [v.to_dict() for v in self.new_surfaces],
            "destabilized_old": sorted(self.destabilized_old),
            "identifications": None if self.identifications is None else [
                sorted(c, key=VERTICAL_LABELS.index) for c in self.identifications
            ],
            "flips_old": self.flips_old,
            "trichotomy": self.trichotomy.to_dict(),
            "in_NX": self.in_NX,
            "in_HX": self.in_HX,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        lines = [
            f"knot:            {self.knot}",
            f"slope:           {self.slope}",
            f"case:            {self.case.value}",
            f"genus:           {self.genus_before} -> {self.genus_after}",
            "new surfaces:    " + (", ".join(v.label for v in self.new_surfaces) or "none"),
            "destabilized:    " + (",".join(sorted(self.destabilized_old)) or "none"),
        ]
        if self.identifications is None:
            lines.append("identifications: unknown")
            lines.append("flips:           unknown")
        else:
            parts = ["{" + ",".join(sorted(c, key=VERTICAL_LABELS.index)) + "}"
                     for c in self.identifications]
            lines.append(f"identifications: {len(parts)} classes " + " ".join(parts))
            flipped = [k for k, v in self.flips_old.items() if v]
            lines.append("flips:           " + (",".join(flipped) or "none"))
        tri = self.trichotomy
        fam = ", ".join(f"{k}={v}" for k, v in tri.families.items())
        extra = f" (bridge number {tri.bridge_number})" if tri.bridge_number is not None else ""
        lines.append(f"trichotomy:      {tri.summary} [{fam}]{extra}")
        lines.append(f"in N_X / H_X:    {self.in_NX} / {self.in_HX}")
        return "\n".join(lines)


def report(K: TorusKnot, alpha: Slope, force: bool = False) -> PhenomenaReport:
    require_admissible(K, force)
    case = filling_case(K, alpha, force=True)
    idents = identifications(K, alpha, force=True)
    news = tuple(new_surfaces(K, alpha, force=True))
    return PhenomenaReport(
        knot=K,
        slope=alpha,
        case=case,
        genus_before=GENUS_BEFORE,
        genus_after=genus_filled(K, alpha, force=True),
        new_surfaces=news,
        destabilized_old=destabilizations(K, alpha, force=True),
        identifications=idents,
        flips_old=_flips_from(idents),
        trichotomy=trichotomy(K, alpha, force=True),
        in_NX=in_NX(K, alpha),
        in_HX=in_HX(K, alpha),
    )


CSV_COLUMNS = ("r", "s", "case", "genus", "new", "destab", "classes", "flips", "trichotomy")


@dataclass(frozen=True)
class SurveyRow:
    r: int
    s: int
    case: FillingCase
    genus: int
    new: str
    destab: str
    classes: str
    flips: str
    trichotomy: str

    @property
    def slope(self) -> Slope:
        return Slope(self.r, self.s)

    def as_tuple(self) -> tuple:
        return (self.r, self.s, self.case.short, self.genus, self.new, self.destab,
                self.classes, self.flips, self.trichotomy)

    def to_dict(self) -> dict:
        return dict(zip(CSV_COLUMNS, self.as_tuple()))


def _row_fields(rep: PhenomenaReport) -> tuple:
    kinds = sorted({v.kind.value for v in rep.new_surfaces})
    if rep.identifications is None:
        classes, flips = "unknown", "unknown"
    else:
        classes = str(len(rep.identifications))
        flips = ",".join(k for k, v in rep.flips_old.items() if v)
    return (rep.genus_after, ",".join(kinds), ",".join(sorted(rep.destabilized_old)), classes, flips)


@dataclass(frozen=True)
class Survey:
    knot: TorusKnot
    r_max: int
    s_max: int
    rows: tuple

    @property
    def histogram(self) -> dict:
        counts = Counter(row.case for row in self.rows)
        return {c.short: counts.get(c, 0) for c in FillingCase}

    def slopes_in(self, case: FillingCase) -> list[Slope]:
        return [row.slope for row in self.rows if row.case is case]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in self.rows:
            w.writerow(row.as_tuple())
        return buf.getvalue()

    def to_jsonl(self) -> str:
        return "".join(json.dumps(row.to_dict()) + "\n" for row in self.rows)

    def histogram_text(self) -> str:
        return "".join(f"{k}\t{v}\n" for k, v in self.histogram.items())


def survey(
    K: TorusKnot, r_max: int, s_max: int, force: bool = False, backend: str = "auto"
) -> Survey:
    """Tabulate every reduced slope with ``|r| <= r_max`` and ``0 <= s <= s_max``."""
    if r_max < 1:
        raise ValueError("r_max must be positive")
    if s_max < 0:
        raise ValueError("s_max must be non-negative")
    require_admissible(K, force)
    rs, ss, codes = _accel.classify_grid(K.p, K.q, r_max, s_max, backend=backend)
    pq = K.p * K.q
    # everything except the trichotomy is a function of the case for a fixed knot
    per_case: dict = {}
    rows = []
    for r, s, code in zip(rs, ss, codes):
        case = FillingCase.from_code(code)
        fields = per_case.get(case)
        if fields is None:
            fields = per_case[case] = _row_fields(report(K, Slope(r, s), force=True))
        if s == 0:
            tri = "N"
        elif abs(pq * s - r) == 1 or abs(r) == 1:
            tri = "H"
        else:
            tri = "C"
        rows.append(SurveyRow(r, s, case, *fields, tri))
    return Survey(K, r_max, s_max, tuple(rows))


# Left-to-right layout of the two rows of the pq/1 swap figure.
_SWAP_TOP = ("Sigma_i+", "S(T_i)-", "Sigma_m+", "S(T_o)-", "Sigma_o+")
_SWAP_BOTTOM = ("Sigma_o-", "S(T_o)+", "Sigma_m-", "S(T_i)+", "Sigma_i-")


@dataclass(frozen=True)
class SwapDiagram:
    top: tuple
    bottom: tuple
    edges: tuple

    @property
    def nodes(self) -> tuple:
        return self.top + self.bottom

    def to_dot(self) -> str:
        lines = ["graph swaps {", '  graph [label="swaps along annuli of slope pq/1"];']
        for row in (self.top, self.bottom):
            lines.append("  { rank=same; " + " ".join(f'"{n}";' for n in row) + " }")
        lines += [f'  "{a}" -- "{b}";' for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def swap_diagram() -> SwapDiagram:
    """Genus-two surfaces related by annulus swaps of slope ``pq/1`` (knot independent)."""
    top, bot = _SWAP_TOP, _SWAP_BOTTOM
    edges = [(top[k], top[k + 1]) for k in range(4)] + [(bot[k], bot[k + 1]) for k in range(4)]
    # the horizontal tori T_i and T_o swap into each other with opposite orientation
    edges += [("S(T_i)-", "S(T_o)+"), ("S(T_o)-", "S(T_i)+")]
    return SwapDiagram(top, bot, tuple(edges))
