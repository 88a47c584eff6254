"""Exact arithmetic on slopes of a boundary torus.

A slope is stored as a reduced pair ``(r, s)`` with ``s >= 0``; the sign
lives on the numerator and every ``k/0`` collapses to ``1/0``.  With the
meridian/longitude basis of a knot exterior, ``r`` counts meridians and
``s`` longitudes.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Optional

__all__ = [
    "Slope",
    "Unimodular",
    "normalize",
    "parse_slope",
    "delta",
    "delta_signed",
    "on_line",
    "enumerate_line",
    "on_line_of_lines",
    "find_ll_witness",
    "apply",
    "basis_to_infinity",
    "INFINITY",
]


@dataclass(frozen=True, order=True)
class Slope:
    r: int
    s: int

    def __post_init__(self):
        if (self.r, self.s) == (0, 0):
            raise ValueError("0/0 is not a slope")
        if self.s < 0:
            raise ValueError(f"denominator must be non-negative, got {self.s}")
        if gcd(abs(self.r), self.s) != 1:
            raise ValueError(f"{self.r}/{self.s} is not in lowest terms")
        if self.s == 0 and self.r != 1:
            raise ValueError("the slope at infinity is stored as 1/0")

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"

    @property
    def is_infinity(self) -> bool:
        return self.s == 0

    def sort_key(self) -> tuple[int, int, int]:
        """Order used for every deterministic listing: ``(s, |r|, r)``."""
        return (self.s, abs(self.r), self.r)


INFINITY = Slope(1, 0)


@dataclass(frozen=True)
class Unimodular:
    """Integer 2x2 matrix ``[[m11, m12], [m21, m22]]`` with determinant +-1."""

    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"determinant {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> "Unimodular":
        d = self.det
        return Unimodular(self.m22 * d, -self.m12 * d, -self.m21 * d, self.m11 * d)


def normalize(r: int, s: int) -> Slope:
    if r == 0 and s == 0:
        raise ValueError("0/0 is not a slope")
    if s == 0:
        return INFINITY
    g = gcd(r, s)
    r, s = r // g, s // g
    if s < 0:
        r, s = -r, -s
    return Slope(r, s)


_SLOPE_RE = re.compile(r"^\s*([-−]?\d+)\s*/\s*(\d+)\s*$")


def parse_slope(text: str) -> Slope:
    """Parse ``"r/s"``; a minus sign is accepted on ``r`` only."""
    m = _SLOPE_RE.match(text)
    if m is None:
        raise ValueError(f"malformed slope {text!r}; expected r/s")
    r = int(m.group(1).replace("−", "-"))
    return normalize(r, int(m.group(2)))


def delta_signed(alpha: Slope, beta: Slope) -> int:
    return alpha.r * beta.s - beta.r * alpha.s


def delta(alpha: Slope, beta: Slope) -> int:
    """Geometric intersection number of two slopes."""
    return abs(delta_signed(alpha, beta))


def on_line(alpha: Slope, beta: Slope) -> bool:
    return delta(alpha, beta) == 1


def enumerate_line(alpha: Slope, height: int) -> list[Slope]:
    """All slopes meeting ``alpha`` once with ``max(|r|, s) <= height``.

    Sorted by ``(s, |r|, r)``.
    """
    if height < 1:
        raise ValueError("height must be positive")
    ra, sa = alpha.r, alpha.s
    found = []
    if sa == 1:
        # 1/0 meets alpha in |ra*0 - 1*sa| = sa points
        found.append(INFINITY)
    for s in range(1, height + 1):
        if sa == 0:
            if s == 1:
                found.extend(Slope(r, 1) for r in range(-height, height + 1))
            continue
        # ra*s - sa*r = eps for eps in {+1, -1}
        for eps in (1, -1):
            num = ra * s - eps
            if num % sa == 0:
                r = num // sa
                if abs(r) <= height and gcd(abs(r), s) == 1:
                    found.append(Slope(r, s))
    return sorted(set(found), key=Slope.sort_key)


def apply(m: Unimodular, alpha: Slope) -> Slope:
    return normalize(m.m11 * alpha.r + m.m12 * alpha.s, m.m21 * alpha.r + m.m22 * alpha.s)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def dual_pair(alpha: Slope) -> tuple[int, int]:
    """Return ``(t, u)`` with ``r*u - t*s = 1`` and ``0 < u <= s`` (``u = 1`` at infinity)."""
    r, s = alpha.r, alpha.s
    if s == 0:
        return 0, 1
    g, x, y = _ext_gcd(r, s)  # r*x + s*y = g = +-1
    u, t = x * g, -y * g
    # shift along alpha into the window 0 < u <= s
    k = (u - 1) // s
    u, t = u - k * s, t - k * r
    assert r * u - t * s == 1 and 0 < u <= s
    return t, u


def basis_to_infinity(alpha: Slope) -> Unimodular:
    """A determinant +1 change of basis carrying ``alpha`` to ``1/0``."""
    t, u = dual_pair(alpha)
    return Unimodular(u, -t, -alpha.s, alpha.r)


def on_line_of_lines(alpha: Slope, gamma: Slope) -> bool:
    """True iff some slope meets both ``alpha`` and ``gamma`` exactly once."""
    g = apply(basis_to_infinity(alpha), gamma)
    if g.s <= 1:
        return True
    return g.r % g.s in (1, g.s - 1)


def find_ll_witness(alpha: Slope, gamma: Slope) -> Optional[Slope]:
    """Least ``beta`` (in ``(s, |r|, r)`` order) with ``delta(alpha, beta) = delta(beta, gamma) = 1``."""
    m = basis_to_infinity(alpha)
    back = m.inverse()
    c = apply(m, gamma)
    if c.s == 0:
        # gamma == alpha: every slope of the line is a witness
        return _least_on_line(alpha)
    # in the new frame witnesses are integers n with |c.r - n*c.s| = 1
    cands = []
    for eps in (1, -1):
        if (c.r - eps) % c.s == 0:
            cands.append(apply(back, Slope((c.r - eps) // c.s, 1)))
    if not cands:
        return None
    return min(cands, key=Slope.sort_key)


def _least_on_line(alpha: Slope) -> Slope:
    if alpha.s == 0:
        return Slope(0, 1)
    if alpha.s == 1:
        return INFINITY
    r, sa = alpha.r, alpha.s
    # denominators y of neighbours satisfy r*y = +-1 (mod sa)
    y0 = pow(r, -1, sa)
    y = min(y0, sa - y0)
    cands = []
    for eps in (1, -1):
        num = r * y - eps
        if num % sa == 0:
            cands.append(Slope(num // sa, y))
    return min(cands, key=Slope.sort_key)
