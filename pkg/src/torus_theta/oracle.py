"""Independent checks for the closed-form constituent formulas.

Two engines live here.  ``brute_force_jk`` scans every candidate (j, k).
``cover_walk`` rebuilds theta(p, q, r) in the universal cover R^2 of T
with exact rationals and reads the constituent classes off the endpoint
translations of the lifted edges.  Neither calls into ``constituents``.

Cover coordinates: x counts longitudes, y counts meridians, so a deck
translation (a, b) is the class a*l + b*m.  The lifted knot t(p, q) is
the family of parallel lines q*x - p*y = n for n in Z; the integer n is
called the *level* of a point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd
from typing import NamedTuple

from .errors import DegenerateGeometry, InvalidInput, MultipleSolutions, NoSolution

__all__ = [
    "CoverLift",
    "CoverPath",
    "CoverPoint",
    "CrossCheckReport",
    "brute_force_jk",
    "cover_walk",
    "cover_walk_constituents",
    "cross_check",
]


class CoverPoint(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):
        return CoverPoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return CoverPoint(self.x - other[0], self.y - other[1])


def _pt(x, y) -> CoverPoint:
    return CoverPoint(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class CoverPath:
    """Piecewise-linear lift of one edge, listed vertex by vertex."""

    points: tuple[CoverPoint, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise DegenerateGeometry("a path needs at least two points")
        for a, b in zip(self.points, self.points[1:]):
            if a == b:
                raise DegenerateGeometry(f"repeated point {a}")

    @property
    def start(self) -> CoverPoint:
        return self.points[0]

    @property
    def end(self) -> CoverPoint:
        return self.points[-1]

    @property
    def displacement(self) -> CoverPoint:
        return self.end - self.start

    def segments(self):
        return list(zip(self.points, self.points[1:]))


def _integral(v: CoverPoint) -> tuple[int, int]:
    if v.x.denominator != 1 or v.y.denominator != 1:
        raise DegenerateGeometry(f"{v} is not a deck translation")
    return int(v.x), int(v.y)


@dataclass(frozen=True)
class CoverLift:
    p: int
    q: int
    r: int
    v1: CoverPoint
    v2: CoverPoint
    e1: CoverPath
    e2: CoverPath
    e3: CoverPath
    steps: int = field(default=0, compare=False)

    def level(self, pt: CoverPoint) -> Fraction:
        return self.q * pt.x - self.p * pt.y

    def classes(self):
        """Homology classes (k1, k2, k3) with k_i = e_{i+1} - e_{i+2}."""
        d1, d2, d3 = self.e1.displacement, self.e2.displacement, self.e3.displacement
        k3 = _integral(d1 - d2)
        k2 = _integral(d3 - d1)
        k1 = _integral(d2 - d3)
        return k1, k2, k3

    @property
    def walk_jk(self) -> tuple[int, int]:
        """(j, k) as read off the walk: e1 ends at the lift (j, k + 1/p) of v2."""
        end = self.e1.end - self.v2
        return _integral(end)


def brute_force_jk(p: int, q: int):
    """Scan 1 <= j < p, 1 <= k < q for j*q - k*p = 1.

    Each j admits at most one k, namely (j*q - 1) / p, so the scan walks j
    and tests that candidate instead of looping over k as well.
    """
    from .constituents import JKPair

    hits = []
    for j in range(1, p):
        k, rem = divmod(j * q - 1, p)
        if rem == 0 and 1 <= k < q:
            hits.append((j, k))
    if not hits:
        raise NoSolution(f"no (j, k) for ({p},{q})")
    if len(hits) > 1:
        raise MultipleSolutions(f"{len(hits)} solutions for ({p},{q})")
    return JKPair(*hits[0])


def _first_level_crossing(p, q, start: CoverPoint, direction) -> Fraction:
    """Smallest t > 0 at which start + t*direction lies on the lifted knot."""
    dx, dy = direction
    slope = q * dx - p * dy
    if slope == 0:
        raise DegenerateGeometry("direction is parallel to the knot")
    level = q * start.x - p * start.y
    target = floor(level) + 1 if slope > 0 else ceil(level) - 1
    return (target - level) / slope


def _is_lift(pt: CoverPoint, base: CoverPoint) -> bool:
    d = pt - base
    return d.x.denominator == 1 and d.y.denominator == 1


def _walk_knot(p, q, v1: CoverPoint, v2: CoverPoint, sign: int) -> tuple[CoverPath, int]:
    """Follow the lifted knot from v1 in direction sign*(p, q) until a lift of v2.

    Every crossing of a grid line x in Z or y in Z is recorded, so the
    path is the sequence of pieces the arc leaves in the unit square.
    """
    dx, dy = sign * p, sign * q
    pts = [v1]
    cur = v1
    t = Fraction(0)
    steps = 0
    limit = 2 * (abs(p) + abs(q)) + 4
    while True:
        steps += 1
        if steps > limit:
            raise DegenerateGeometry(f"no lift of v2 found along t({p},{q})")
        cands = []
        for coord, d in ((cur.x, dx), (cur.y, dy)):
            if d:
                nxt = floor(coord) + 1 if d > 0 else ceil(coord) - 1
                cands.append((nxt - coord) / d)
        t_step = min(cands)
        t += t_step
        cur = v1 + (dx * t, dy * t)
        pts.append(cur)
        if _is_lift(cur, v2):
            return CoverPath(tuple(pts)), steps
        if t >= 1:
            raise DegenerateGeometry("walked once around the knot without meeting v2")


def cover_walk(p: int, q: int, r: int = 0) -> CoverLift:
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise InvalidInput(f"cover walk needs coprime p, q >= 2, got ({p},{q})")
    v1 = _pt(0, 0)

    # v2: first point of the knot met when leaving v1 along m.
    t_hit = _first_level_crossing(p, q, v1, (0, 1))
    v2 = v1 + (0, t_hit)

    e1, n1 = _walk_knot(p, q, v1, v2, +1)
    e2, n2 = _walk_knot(p, q, v1, v2, -1)

    # e3 runs inside the strip between the knot lines through v1 and v2.
    # Winding r times around the annulus is a detour of r*(p, q) along the
    # strip's midline before finishing the meridian step.
    if r == 0:
        e3 = CoverPath((v1, v2))
    else:
        a = v1 + (0, t_hit / 2)
        b = a + (r * p, r * q)
        t_end = _first_level_crossing(p, q, b, (0, 1))
        c = b + (0, t_end)
        e3 = CoverPath((v1, a, b, c))
    if not _is_lift(e3.end, v2):
        raise DegenerateGeometry(f"e3 ends at {e3.end}, not a lift of v2")
    _check_e3_interior(p, q, e3)
    return CoverLift(p, q, r, v1, v2, e1, e2, e3, steps=n1 + n2)


def _check_e3_interior(p, q, e3: CoverPath) -> None:
    # The level is affine along each leg, so checking vertices is enough:
    # interior vertices must sit strictly between the two boundary levels.
    lo = q * e3.start.x - p * e3.start.y
    hi = q * e3.end.x - p * e3.end.y
    lo, hi = min(lo, hi), max(lo, hi)
    if hi - lo != 1:
        raise DegenerateGeometry("e3 does not join adjacent strands of the knot")
    for pt in e3.points[1:-1]:
        lev = q * pt.x - p * pt.y
        if not lo < lev < hi:
            raise DegenerateGeometry(f"e3 meets the knot at {pt}")


def cover_walk_constituents(p: int, q: int, r: int = 0):
    """Constituent classes (k1, k2, k3) of theta(p, q, r) as (a, b) pairs, computed geometrically."""
    return cover_walk(p, q, r).classes()


@dataclass
class CrossCheckReport:
    range_max: int
    r_max: int
    pairs_checked: int = 0
    cases_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "range_max": self.range_max,
            "r_max": self.r_max,
            "pairs_checked": self.pairs_checked,
            "cases_checked": self.cases_checked,
            "failures": list(self.failures),
        }


def cross_check(range_max: int, r_max: int) -> CrossCheckReport:
    """Compare closed forms against both oracles on all coprime 2 <= p < q <= range_max."""
    from .classify import Prime, classify_pqr
    from .constituents import ThetaPQR, constituents_pq, constituents_pqr, jk_pair

    if range_max < 3:
        raise InvalidInput(f"range_max must be >= 3, got {range_max}")
    report = CrossCheckReport(range_max, r_max)
    for q in range(3, range_max + 1):
        for p in range(2, q):
            if gcd(p, q) != 1:
                continue
            report.pairs_checked += 1
            jk = jk_pair(p, q)
            bf = brute_force_jk(p, q)
            if jk != bf or jk.j * q - jk.k * p != 1:
                report.failures.append(f"jk({p},{q}): closed form {jk} vs scan {bf}")
            for r in range(-r_max, r_max + 1):
                report.cases_checked += 1
                theta = ThetaPQR(p, q, r)
                closed = constituents_pqr(theta)
                expected = tuple((k.p, k.q) for k in closed)
                walked = cover_walk_constituents(p, q, r)
                if walked != expected:
                    report.failures.append(f"{theta}: walk {walked} vs formula {expected}")
                verdict = classify_pqr(theta)
                if not isinstance(verdict, Prime):
                    report.failures.append(f"{theta}: classified {verdict}, expected prime")
                    continue
                normal = constituents_pq(verdict.p, verdict.q)
                if closed.knot_types() != normal.knot_types():
                    report.failures.append(f"{theta}: constituents differ from θ({verdict.p},{verdict.q})")
    return report
