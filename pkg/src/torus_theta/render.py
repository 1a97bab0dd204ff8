"""SVG pictures of theta(p, q, r): the unit-square fundamental domain and a window of the cover.

All geometry comes from ``oracle.cover_walk`` in exact rationals; the only
floating point is the final conversion to pixel coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from pathlib import Path

from .constituents import ThetaPQR
from .oracle import CoverPath, CoverPoint, cover_walk

__all__ = [
    "Segment",
    "SvgDiagram",
    "Vertex",
    "e3_vertical_crossings",
    "render_cover",
    "render_square",
    "split_at_grid",
]

CELL = 60
MARGIN = 24
EDGE_COLORS = {"e1": "#1f77b4", "e2": "#d62728", "e3": "#2ca02c"}
KNOT_LIFT_COLOR = "#bbbbbb"
GRID_COLOR = "#888888"
STROKE = 2.5


@dataclass(frozen=True)
class Segment:
    a: CoverPoint
    b: CoverPoint
    role: str  # "e1", "e2", "e3", "grid", "lift" or "frame"
    arrow: bool = False


@dataclass(frozen=True)
class Vertex:
    at: CoverPoint
    label: str


@dataclass
class SvgDiagram:
    """Exact geometry in cover units plus the window [x0, x1] x [y0, y1] it is drawn in."""

    x0: int
    y0: int
    x1: int
    y1: int
    segments: list[Segment] = field(default_factory=list)
    vertices: list[Vertex] = field(default_factory=list)

    @property
    def width(self) -> int:
        return (self.x1 - self.x0) * CELL + 2 * MARGIN

    @property
    def height(self) -> int:
        return (self.y1 - self.y0) * CELL + 2 * MARGIN

    def edge_segments(self, role: str) -> list[Segment]:
        return [s for s in self.segments if s.role == role]

    def _px(self, pt: CoverPoint) -> tuple[str, str]:
        x = MARGIN + (pt.x - self.x0) * CELL
        y = MARGIN + (self.y1 - pt.y) * CELL
        return f"{float(x):.3f}", f"{float(y):.3f}"

    def to_svg(self) -> str:
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.width}" height="{self.height}" viewBox="0 0 {self.width} {self.height}">',
            "<defs>",
        ]
        for role, color in EDGE_COLORS.items():
            out.append(
                f'<marker id="arrow-{role}" viewBox="0 0 10 10" refX="9" refY="5" '
                f'markerWidth="6" markerHeight="6" orient="auto">'
                f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{color}"/></marker>'
            )
        out.append("</defs>")
        out.append(f'<rect x="0" y="0" width="{self.width}" height="{self.height}" fill="white"/>')
        for s in self.segments:
            x1, y1 = self._px(s.a)
            x2, y2 = self._px(s.b)
            if s.role in EDGE_COLORS:
                style = f'stroke="{EDGE_COLORS[s.role]}" stroke-width="{STROKE}"'
            elif s.role == "lift":
                style = f'stroke="{KNOT_LIFT_COLOR}" stroke-width="1"'
            elif s.role == "grid":
                style = f'stroke="{GRID_COLOR}" stroke-width="0.5" stroke-dasharray="3,3"'
            else:
                style = 'stroke="black" stroke-width="1"'
            marker = f' marker-end="url(#arrow-{s.role})"' if s.arrow else ""
            out.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style} '
                f'stroke-linecap="round" class="{s.role}"{marker}/>'
            )
        for v in self.vertices:
            x, y = self._px(v.at)
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black" class="vertex"/>')
            out.append(
                f'<text x="{float(x) + 6:.3f}" y="{float(y) - 6:.3f}" font-family="sans-serif" '
                f'font-size="12">{v.label}</text>'
            )
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def write(self, out) -> None:
        Path(out).write_text(self.to_svg(), encoding="utf-8")


def split_at_grid(a: CoverPoint, b: CoverPoint) -> list[tuple[CoverPoint, CoverPoint]]:
    """Cut segment ab wherever it crosses a line x in Z or y in Z."""
    cuts = {Fraction(0), Fraction(1)}
    for ca, cb in ((a.x, b.x), (a.y, b.y)):
        if ca == cb:
            continue
        lo, hi = min(ca, cb), max(ca, cb)
        for n in range(floor(lo) + 1, ceil(hi)):
            cuts.add((n - ca) / (cb - ca))
    ts = sorted(cuts)
    pts = [CoverPoint(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)) for t in ts]
    return list(zip(pts, pts[1:]))


def _path_pieces(path: CoverPath):
    pieces = []
    for a, b in path.segments():
        pieces.extend(split_at_grid(a, b))
    return pieces


def _mod1(pt: CoverPoint) -> CoverPoint:
    return CoverPoint(pt.x - floor(pt.x), pt.y - floor(pt.y))


def render_square(p: int, q: int, r: int = 0, out=None) -> SvgDiagram:
    """theta(p, q, r) drawn in the unit square with opposite sides identified."""
    theta = ThetaPQR(p, q, r)
    lift = cover_walk(theta.p, theta.q, theta.r)
    d = SvgDiagram(0, 0, 1, 1)
    corners = [CoverPoint(Fraction(x), Fraction(y)) for x, y in ((0, 0), (1, 0), (1, 1), (0, 1))]
    for a, b in zip(corners, corners[1:] + corners[:1]):
        d.segments.append(Segment(a, b, "frame"))
    for role, path in (("e1", lift.e1), ("e2", lift.e2), ("e3", lift.e3)):
        pieces = _path_pieces(path)
        for i, (a, b) in enumerate(pieces):
            ra, rb = _reduce_into_square(a, b)
            d.segments.append(Segment(ra, rb, role, arrow=i == len(pieces) - 1))
    d.vertices.append(Vertex(_mod1(lift.v1), "v1"))
    d.vertices.append(Vertex(_mod1(lift.v2), "v2"))
    if out is not None:
        d.write(out)
    return d


def _reduce_into_square(a: CoverPoint, b: CoverPoint) -> tuple[CoverPoint, CoverPoint]:
    mid_x, mid_y = (a.x + b.x) / 2, (a.y + b.y) / 2
    shift = (-floor(mid_x), -floor(mid_y))
    return a + shift, b + shift


def e3_vertical_crossings(p: int, q: int, r: int) -> int:
    """How often e3 passes through the identified vertical sides of the square."""
    lift = cover_walk(p, q, r)
    count = 0
    for a, b in lift.e3.segments():
        if a.x == b.x:
            continue
        for s, _ in split_at_grid(a, b)[1:]:
            if s.x.denominator == 1:
                count += 1
    return count


def _clip_line(p, q, n, x0, y0, x1, y1):
    """Part of the line q*x - p*y = n inside the box, or None."""
    hits = set()
    for x in (x0, x1):
        y = Fraction(q * x - n, p)
        if y0 <= y <= y1:
            hits.add(CoverPoint(Fraction(x), y))
    for y in (y0, y1):
        x = Fraction(n + p * y, q)
        if x0 <= x <= x1:
            hits.add(CoverPoint(x, Fraction(y)))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


def render_cover(p: int, q: int, r: int = 0, out=None) -> SvgDiagram:
    """A window of the universal cover holding full lifts of e1, e2 and e3."""
    theta = ThetaPQR(p, q, r)
    lift = cover_walk(theta.p, theta.q, theta.r)
    pts = [pt for path in (lift.e1, lift.e2, lift.e3) for pt in path.points]
    x0, x1 = floor(min(pt.x for pt in pts)), ceil(max(pt.x for pt in pts))
    y0, y1 = floor(min(pt.y for pt in pts)), ceil(max(pt.y for pt in pts))
    d = SvgDiagram(x0, y0, x1, y1)
    for x in range(x0, x1 + 1):
        d.segments.append(Segment(CoverPoint(Fraction(x), Fraction(y0)), CoverPoint(Fraction(x), Fraction(y1)), "grid"))
    for y in range(y0, y1 + 1):
        d.segments.append(Segment(CoverPoint(Fraction(x0), Fraction(y)), CoverPoint(Fraction(x1), Fraction(y)), "grid"))
    # Levels q*x - p*y over the box corners bound the strands that can appear.
    levels = [q * x - p * y for x in (x0, x1) for y in (y0, y1)]
    for n in range(min(levels), max(levels) + 1):
        seg = _clip_line(p, q, n, x0, y0, x1, y1)
        if seg is not None:
            d.segments.append(Segment(seg[0], seg[1], "lift"))
    for role, path in (("e1", lift.e1), ("e2", lift.e2), ("e3", lift.e3)):
        legs = path.segments()
        for i, (a, b) in enumerate(legs):
            d.segments.append(Segment(a, b, role, arrow=i == len(legs) - 1))
    d.vertices.append(Vertex(lift.v1, "v1"))
    for end in {lift.e1.end, lift.e2.end, lift.e3.end}:
        d.vertices.append(Vertex(end, "v2"))
    d.vertices.sort(key=lambda v: (v.label, v.at))
    if out is not None:
        d.write(out)
    return d
