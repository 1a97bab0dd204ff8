"""
Walking the universal cover
===========================

The closed forms are checked against a geometric construction.  The lifted
knot is the family of lines q*x - p*y = n in the plane; e3 leaves the origin
upwards and stops on the next line, and e1, e2 follow the knot forwards and
backwards until they reach a translate of that point.  Everything is exact.
"""
from pathlib import Path

from torus_theta import constituents_pqr, ThetaPQR, cover_walk, cross_check
from torus_theta.render import render_cover, render_square

###############################################################################
# The lift of θ(3,5).  e1 ends at (j, k + 1/p), which is how the pair (2, 3)
# shows up geometrically.
lift = cover_walk(3, 5)
print("v2 =", tuple(str(c) for c in lift.v2))
print("e1 ends at", tuple(str(c) for c in lift.e1.end))
print("walk classes (k1, k2, k3):", lift.classes())
print("closed form:              ", [tuple(k) for k in constituents_pqr(ThetaPQR(3, 5))])

###############################################################################
# With r windings e3 picks up r copies of the knot's class.
for r in (-2, -1, 0, 1, 2):
    print(r, cover_walk(2, 3, r).classes())

###############################################################################
# The batch cross-check compares both oracles against the formulas.
report = cross_check(20, 3)
print(f"{report.pairs_checked} pairs, {report.cases_checked} cases, {len(report.failures)} failures")

###############################################################################
# Pictures: the fundamental square and a window of the cover.
out = Path("demo_output")
out.mkdir(exist_ok=True)
render_square(3, 5, 0, out / "theta_3_5_square.svg")
render_cover(3, 5, 0, out / "theta_3_5_cover.svg")
render_square(2, 3, 1, out / "theta_2_3_1_square.svg")
print("wrote", sorted(p.name for p in out.iterdir()))
