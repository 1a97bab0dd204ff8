"""Torus knots t(p, q) on the standard torus T and classes in H_1(T).

A torus knot is stored as an oriented pair of coprime integers in the
ordered basis [l, m] (longitude first).  Python integers are unbounded,
so no overflow handling is needed anywhere in the package.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput

__all__ = [
    "HomologyClass",
    "KnotEquivalence",
    "TorusKnot",
    "canonical_unoriented",
    "intersection_number",
    "is_prime_knot",
    "is_trivial",
    "knots_equivalent",
    "reflect_R",
    "reverse",
    "rotate_rho",
    "rotate_sigma",
    "unoriented",
]


class KnotEquivalence(enum.Enum):
    ISOTOPY = "isotopy"
    HOMEOMORPHISM = "homeomorphism"


@dataclass(frozen=True, order=True)
class HomologyClass:
    """An element a*l + b*m of H_1(T) = Z^2."""

    a: int
    b: int

    def __add__(self, other: HomologyClass) -> HomologyClass:
        return HomologyClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        return HomologyClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> HomologyClass:
        return HomologyClass(-self.a, -self.b)

    def __iter__(self):
        yield self.a
        yield self.b

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a, self.b) == 1

    def knot(self) -> TorusKnot:
        """The torus knot carried by this class; raises for (0, 0) or imprimitive classes."""
        return TorusKnot(self.a, self.b)


@dataclass(frozen=True, order=True)
class TorusKnot:
    """The oriented torus knot t(p, q)."""

    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise InvalidInput(f"t({self.p!r}, {self.q!r}): coordinates must be integers")
        if gcd(self.p, self.q) != 1:
            raise InvalidInput(f"t({self.p}, {self.q}): p and q must be coprime")

    def __neg__(self) -> TorusKnot:
        return reverse(self)

    def __iter__(self):
        yield self.p
        yield self.q

    def __str__(self) -> str:
        return f"t({self.p},{self.q})"

    @property
    def homology(self) -> HomologyClass:
        return HomologyClass(self.p, self.q)


def is_trivial(k: TorusKnot) -> bool:
    return abs(k.p) <= 1 or abs(k.q) <= 1


def is_prime_knot(k: TorusKnot) -> bool:
    # The unknot is not prime; every nontrivial torus knot is.
    return not is_trivial(k)


def reverse(k: TorusKnot) -> TorusKnot:
    return TorusKnot(-k.p, -k.q)


def reflect_R(k: TorusKnot) -> TorusKnot:
    """Image under the reflection across the plane containing l."""
    return TorusKnot(k.p, -k.q)


def rotate_sigma(k: TorusKnot) -> TorusKnot:
    """Image under the rotation of S^3 swapping l and m."""
    return TorusKnot(k.q, k.p)


def rotate_rho(k: TorusKnot) -> TorusKnot:
    """Image under the rotation by pi about the axis meeting T in four points."""
    return TorusKnot(-k.p, -k.q)


def unoriented(k: TorusKnot) -> TorusKnot:
    """Representative of {k, -k} whose first nonzero coordinate is positive."""
    if k.p < 0 or (k.p == 0 and k.q < 0):
        return reverse(k)
    return k


def knots_equivalent(k1: TorusKnot, k2: TorusKnot, rel: KnotEquivalence) -> bool:
    t1, t2 = is_trivial(k1), is_trivial(k2)
    if t1 or t2:
        return t1 and t2
    target = {k2.p, k2.q}
    p, q = k1.p, k1.q
    candidates = [{p, q}, {-p, -q}]
    if rel is KnotEquivalence.HOMEOMORPHISM:
        candidates += [{p, -q}, {-p, q}]
    return target in candidates


def canonical_unoriented(k: TorusKnot, rel: KnotEquivalence) -> TorusKnot:
    """Canonical representative of the equivalence class of ``k``.

    Trivial knots map to the meridian t(0, 1).  Nontrivial knots map to
    t(P, Q) with 2 <= P < Q, except that isotopy keeps the mixed-sign
    family apart as t(P, -Q).
    """
    if is_trivial(k):
        return TorusKnot(0, 1)
    lo, hi = sorted((abs(k.p), abs(k.q)))
    if rel is KnotEquivalence.ISOTOPY and (k.p > 0) != (k.q > 0):
        return TorusKnot(lo, -hi)
    return TorusKnot(lo, hi)


def intersection_number(c1: HomologyClass, c2: HomologyClass) -> int:
    """Algebraic intersection number det [[a1, a2], [b1, b2]]; I(l, m) = 1."""
    a1, b1 = c1
    a2, b2 = c2
    return a1 * b2 - a2 * b1
