"""Classification of theta-curves lying on the standard torus.

A torus theta-curve enters as the triple of homology classes of its
constituent knots.  Those six integers (the intersection numbers of each
k_i with l and m) decide which of the three cases holds: unknotted, a
2-connected sum of the trivial theta-curve with a torus knot, or a prime
theta(p, q).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Union

from .constituents import ThetaPQR, constituents_pqr
from .errors import InvalidInput, NonPrimitiveClass, NotRealizable, SumNotZero
from .knot_core import (
    HomologyClass,
    KnotEquivalence,
    TorusKnot,
    canonical_unoriented,
    intersection_number,
)

__all__ = [
    "ConnectedSum",
    "Prime",
    "SignType",
    "ThetaClassification",
    "ThetaEquivalenceVerdict",
    "ThetaOnTorus",
    "Unknotted",
    "class_is_unknotted",
    "classify_pqr",
    "classify_theta",
    "homeo_invariant",
    "is_prime_theta",
    "is_three_connected_sum",
    "theta_equivalent",
    "validate_triple",
]


@dataclass(frozen=True)
class ThetaOnTorus:
    c1: HomologyClass
    c2: HomologyClass
    c3: HomologyClass

    @classmethod
    def from_pairs(cls, pairs) -> ThetaOnTorus:
        c1, c2, c3 = (HomologyClass(int(a), int(b)) for a, b in pairs)
        return cls(c1, c2, c3)

    def __iter__(self):
        yield self.c1
        yield self.c2
        yield self.c3


class SignType(enum.Enum):
    SAME = "same_signs"
    OPPOSITE = "opposite_signs"


@dataclass(frozen=True)
class Unknotted:
    def __str__(self) -> str:
        return "θ_U"


@dataclass(frozen=True)
class ConnectedSum:
    """theta_U #_2 K; ``knot`` is the isotopy-canonical form of K."""

    knot: TorusKnot

    @property
    def homeomorphism_knot(self) -> TorusKnot:
        return canonical_unoriented(self.knot, KnotEquivalence.HOMEOMORPHISM)

    def __str__(self) -> str:
        return f"θ_U #2 {self.knot}"


@dataclass(frozen=True)
class Prime:
    """theta(p, q) up to isotopy: 2 <= p < q, with the sign agreement of its arguments."""

    p: int
    q: int
    sign: SignType

    def __post_init__(self):
        if not (2 <= self.p < self.q) or gcd(self.p, self.q) != 1:
            raise InvalidInput(f"Prime verdict needs coprime 2 <= p < q, got ({self.p},{self.q})")

    def __str__(self) -> str:
        if self.sign is SignType.SAME:
            return f"θ({self.p},{self.q})"
        return f"θ({self.p},-{self.q})"


ThetaClassification = Union[Unknotted, ConnectedSum, Prime]


@dataclass(frozen=True)
class ThetaEquivalenceVerdict:
    isotopic: bool
    homeomorphic: bool


def validate_triple(t: ThetaOnTorus) -> ThetaOnTorus:
    """Return ``t`` unchanged if it can be the constituent data of a torus theta-curve.

    The pairwise |det| = 1 rule for triples of essential classes is
    necessary for realizability; it is not known here to be sufficient.
    """
    c1, c2, c3 = t
    total = c1 + c2 + c3
    if not total.is_zero:
        raise SumNotZero(f"classes sum to ({total.a},{total.b}), not (0,0)")
    for c in t:
        if not c.is_zero and not c.is_primitive:
            raise NonPrimitiveClass(f"class ({c.a},{c.b}) is not primitive")
    # With the sum zero, either all three classes vanish, exactly one does
    # (the other two are then negatives), or none do.
    if not any(c.is_zero for c in t):
        for x, y in ((c1, c2), (c2, c3), (c3, c1)):
            if abs(intersection_number(x, y)) != 1:
                raise NotRealizable(
                    f"I(({x.a},{x.b}),({y.a},{y.b})) = {intersection_number(x, y)}, expected +-1"
                )
    return t


def class_is_unknotted(c: HomologyClass) -> bool:
    """True if the class is inessential or carries a trivial torus knot."""
    return min(abs(c.a), abs(c.b)) <= 1


def classify_theta(t: ThetaOnTorus) -> ThetaClassification:
    validate_triple(t)
    classes = list(t)
    if all(class_is_unknotted(c) for c in classes):
        return Unknotted()
    if any(c.is_zero for c in classes):
        nonzero = next(c for c in classes if not c.is_zero)
        return ConnectedSum(canonical_unoriented(nonzero.knot(), KnotEquivalence.ISOTOPY))

    def size(c):
        return abs(c.a) + abs(c.b)

    largest = max(size(c) for c in classes)
    top = [c for c in classes if size(c) == largest]
    if len(top) != 1:
        raise NotRealizable(f"no unique largest constituent among {classes}")
    a, b = top[0]
    lo, hi = sorted((abs(a), abs(b)))
    sign = SignType.SAME if a * b > 0 else SignType.OPPOSITE
    return Prime(lo, hi, sign)


def classify_pqr(theta: ThetaPQR) -> ThetaClassification:
    return classify_theta(ThetaOnTorus(*constituents_pqr(theta).classes))


def _check_signed_pair(pair) -> tuple[int, int]:
    p, q = pair
    if abs(p) < 2 or abs(q) < 2 or gcd(p, q) != 1:
        raise InvalidInput(f"θ({p},{q}) needs coprime arguments with |p|, |q| >= 2")
    return p, q


def theta_equivalent(a, b) -> ThetaEquivalenceVerdict:
    """Compare theta(p, q) with theta(p', q') for signed pairs ``a`` and ``b``."""
    p, q = _check_signed_pair(a)
    target = set(_check_signed_pair(b))
    isotopic = target in ({p, q}, {-p, -q})
    homeomorphic = isotopic or target in ({p, -q}, {-p, q})
    return ThetaEquivalenceVerdict(isotopic=isotopic, homeomorphic=homeomorphic)


def is_prime_theta(c: ThetaClassification) -> bool:
    return isinstance(c, Prime)


def is_three_connected_sum(t: ThetaOnTorus) -> bool:
    """Whether ``t`` splits as a 3-connected sum of knotted theta-curves.

    Never true for a torus theta-curve; the input is still validated.
    """
    validate_triple(t)
    return False


def homeo_invariant(c: ThetaClassification) -> tuple:
    """Descriptor that agrees for two classifications iff the theta-curves are homeomorphic."""
    if isinstance(c, Prime):
        return ("prime", c.p, c.q)
    if isinstance(c, ConnectedSum):
        k = c.homeomorphism_knot
        return ("connected_sum", k.p, k.q)
    return ("unknotted",)
