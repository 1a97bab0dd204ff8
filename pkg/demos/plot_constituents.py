"""
Constituent knots of θ(p, q)
============================

A torus theta-curve θ(p, q) is the torus knot t(p, q) together with a short
arc e3 running along the meridian from the base point v1 to the first point
v2 where it meets the knot again.  Deleting one edge at a time leaves three
constituent knots, and all three are torus knots again.
"""
from torus_theta import (
    ThetaSignVariant,
    constituents_pq,
    constituents_sign_variant,
    fib_table,
    jk_pair,
)
from torus_theta.cli import format_knot

###############################################################################
# The two short constituents are governed by the pair (j, k) with
# j*q - k*p = 1, which is a pair of modular inverses.
jk = jk_pair(3, 5)
print(f"θ(3,5): j={jk.j}, k={jk.k}, j*q - k*p = {jk.j * 5 - jk.k * 3}")

c = constituents_pq(3, 5)
for name, knot in (("k3", c.k3), ("k2", c.k2), ("k1", c.k1)):
    print(f"  {name} = {format_knot(knot)}")

###############################################################################
# Reflecting or rotating the curve acts on its constituents in the obvious
# way, so the four sign variants are easy to list.
for v in ThetaSignVariant:
    knots = sorted(constituents_sign_variant(3, 5, v))
    print(v.value, ", ".join(str(k) for k in knots))

###############################################################################
# Adjacent integers always give j = k = 1, so t(1,1) is one constituent.
for n in range(2, 7):
    print(f"θ({n},{n + 1}):", sorted(constituents_pq(n, n + 1).unoriented_set()))

###############################################################################
# Consecutive Fibonacci numbers reproduce themselves: the constituents of
# θ(F_n, F_{n+1}) are torus knots on the two preceding Fibonacci pairs, and
# the roles of k1 and k2 swap with the parity of n.
for rec in fib_table(10):
    c = rec.constituents
    print(f"n={rec.n:2d}  k2 = {format_knot(c.k2):>12}  k1 = {format_knot(c.k1):>12}")
