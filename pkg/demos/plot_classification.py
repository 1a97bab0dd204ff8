"""
Classifying theta-curves on the torus
=====================================

Any theta-curve drawn on the standard torus is decided by six integers: the
homology classes (a, b) of its three constituent knots.  The verdict is one
of three cases.
"""
from torus_theta import (
    HomologyClass,
    ThetaOnTorus,
    ThetaPQR,
    classify_pqr,
    classify_theta,
    constituents_pqr,
    homeo_invariant,
    theta_equivalent,
)

###############################################################################
# All three constituents unknotted: the theta-curve is trivial.  An
# inessential constituent next to a knotted one: a knot tied into an edge of
# the trivial theta-curve.  Otherwise: a prime θ(p, q).
examples = {
    "meridian, longitude, diagonal": [(0, 1), (1, 0), (-1, -1)],
    "trefoil tied into an edge": [(2, 3), (0, 0), (-2, -3)],
    "θ(3,5)": [(3, 5), (-2, -3), (-1, -2)],
    "mirror of θ(3,5)": [(3, -5), (-2, 3), (-1, 2)],
}
for label, pairs in examples.items():
    verdict = classify_theta(ThetaOnTorus.from_pairs(pairs))
    print(f"{label:32s} -> {verdict}   homeomorphism type {homeo_invariant(verdict)}")

###############################################################################
# Letting e3 wind r times around the annulus produces θ(p, q, r).  Every one
# of them is isotopic on the torus to some θ(P, Q): the largest constituent
# becomes the new torus knot.
for r in range(-3, 4):
    theta = ThetaPQR(2, 3, r)
    classes = [tuple(c) for c in constituents_pqr(theta).classes]
    print(f"{str(theta):10s} classes {classes} -> {classify_pqr(theta)}")

###############################################################################
# Up to isotopy only the sign agreement of (p, q) survives besides {|p|, |q|};
# up to homeomorphism the signs are forgotten entirely.
for other in [(5, 3), (-3, -5), (3, -5), (5, 8)]:
    v = theta_equivalent((3, 5), other)
    print(f"θ(3,5) vs θ{other}: isotopic={v.isotopic}, homeomorphic={v.homeomorphic}")

###############################################################################
# A classification also works directly from intersection numbers with l and m.
k = HomologyClass(8, 13)
print("I(k, m) =", k.a, " I(l, k) =", k.b)
