import xml.etree.ElementTree as ET

import pytest

from torus_theta import InvalidInput, cover_walk
from torus_theta.render import e3_vertical_crossings, render_cover, render_square

SVG = "{http://www.w3.org/2000/svg}"


def test_square_piece_count():
    d = render_square(3, 5, 0)
    knot = d.edge_segments("e1") + d.edge_segments("e2")
    # The (3,5) line meets x = 1, 2 and y = 1..4 once each inside the square.
    assert len(knot) == 3 + 5 - 1
    assert len(knot) + len(d.edge_segments("e3")) == 8
    for s in d.segments:
        for c in (*s.a, *s.b):
            assert 0 <= c <= 1


def test_square_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    render_square(2, 3, 0, a)
    render_square(2, 3, 0, b)
    assert a.read_bytes() == b.read_bytes()
    root = ET.parse(a).getroot()
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    assert len(root.findall(f"{SVG}circle")) == 2


@pytest.mark.parametrize("r", [-3, -1, 1, 2])
def test_e3_crossings(r):
    p, q = 2, 3
    # The midline leg of e3 runs from x = 0 to x = r*p; count interior integers.
    middle = cover_walk(p, q, r).e3.points[1:3]
    lo, hi = sorted(pt.x for pt in middle)
    expected = len([x for x in range(int(lo) + 1, int(hi))])
    assert expected == abs(r) * p - 1
    assert e3_vertical_crossings(p, q, r) == expected


def test_e3_crossings_r0():
    assert e3_vertical_crossings(2, 3, 0) == 0


def test_cover_viewport():
    d = render_cover(3, 5, 0)
    assert d.x1 - d.x0 >= 3 and d.y1 - d.y0 >= 5
    lift = cover_walk(3, 5, 0)
    for path in (lift.e1, lift.e2, lift.e3):
        for pt in path.points:
            assert d.x0 <= pt.x <= d.x1 and d.y0 <= pt.y <= d.y1


def test_cover_winding():
    d0, d2 = render_cover(2, 3, 0), render_cover(2, 3, 2)
    end0 = d0.edge_segments("e3")[-1].b
    end2 = d2.edge_segments("e3")[-1].b
    assert end2 - end0 == (4, 6)


def test_cover_svg_parses(tmp_path):
    out = tmp_path / "c.svg"
    render_cover(5, 8, -1, out)
    root = ET.parse(out).getroot()
    assert root.findall(f"{SVG}line")


def test_render_rejects_negative():
    with pytest.raises(InvalidInput):
        render_cover(3, -5, 0)
    with pytest.raises(InvalidInput):
        render_square(3, -5, 1)
