"""Closed-form constituent knots of the torus theta-curves theta(p, q, r).

Constituents follow the cyclic convention k_i = e_{i+1} - e_{i+2}, so
k3 = e1 - e2 is the torus knot itself, k2 = e3 - e1 and k1 = e2 - e3.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput, NotInvertible
from .knot_core import HomologyClass, KnotEquivalence, TorusKnot, canonical_unoriented, unoriented

__all__ = [
    "ConstituentTriple",
    "JKPair",
    "ThetaPQR",
    "ThetaSignVariant",
    "constituents_1q",
    "constituents_pq",
    "constituents_pqr",
    "constituents_sign_variant",
    "jk_pair",
    "mod_inverse",
]


def _check_pq(p: int, q: int) -> None:
    if p < 2 or q < 2:
        raise InvalidInput(f"theta({p},{q}): need p, q >= 2")
    if gcd(p, q) != 1:
        raise InvalidInput(f"theta({p},{q}): p and q must be coprime")


@dataclass(frozen=True)
class ThetaPQR:
    """theta(p, q, r): t(p, q) plus an arc e3 winding r times around the annulus T - t(p, q)."""

    p: int
    q: int
    r: int = 0

    def __post_init__(self):
        _check_pq(self.p, self.q)

    def __str__(self) -> str:
        if self.r == 0:
            return f"θ({self.p},{self.q})"
        return f"θ({self.p},{self.q},{self.r})"


class ThetaSignVariant(enum.Enum):
    PP = "pp"  # theta(p, q)
    PN = "pn"  # theta(p, -q) = R(theta(p, q))
    NN = "nn"  # theta(-p, -q) = rho(theta(p, q))
    NP = "np"  # theta(-p, q)


@dataclass(frozen=True)
class JKPair:
    j: int
    k: int


@dataclass(frozen=True)
class ConstituentTriple:
    k1: TorusKnot
    k2: TorusKnot
    k3: TorusKnot

    def __iter__(self):
        yield self.k1
        yield self.k2
        yield self.k3

    @property
    def classes(self) -> tuple[HomologyClass, HomologyClass, HomologyClass]:
        return (self.k1.homology, self.k2.homology, self.k3.homology)

    def unoriented_set(self) -> frozenset[TorusKnot]:
        return frozenset(unoriented(k) for k in self)

    def knot_types(self, rel: KnotEquivalence = KnotEquivalence.ISOTOPY) -> tuple[TorusKnot, ...]:
        """Sorted canonical forms of the three constituents as knots in S^3."""
        return tuple(sorted(canonical_unoriented(k, rel) for k in self))


def mod_inverse(x: int, n: int) -> int:
    """Inverse of x modulo n in the range [1, n - 1]; negative x is reduced first."""
    if n < 2:
        raise InvalidInput(f"modulus must be >= 2, got {n}")
    try:
        return pow(x % n, -1, n)
    except ValueError:
        raise NotInvertible(f"{x} is not invertible modulo {n}") from None


def jk_pair(p: int, q: int) -> JKPair:
    """The unique 1 <= j < p, 1 <= k < q with j*q - k*p = 1."""
    _check_pq(p, q)
    return JKPair(mod_inverse(q, p), mod_inverse(-p, q))


def constituents_pq(p: int, q: int) -> ConstituentTriple:
    jk = jk_pair(p, q)
    j, k = jk.j, jk.k
    return ConstituentTriple(
        k1=TorusKnot(j - p, k - q),
        k2=TorusKnot(-j, -k),
        k3=TorusKnot(p, q),
    )


def constituents_sign_variant(p: int, q: int, variant: ThetaSignVariant) -> frozenset[TorusKnot]:
    """Unoriented constituent knots of theta(+-p, +-q), each as its ``unoriented`` representative."""
    jk = jk_pair(p, q)
    j, k = jk.j, jk.k
    if variant is ThetaSignVariant.PP:
        knots = [(p, q), (j, k), (p - j, q - k)]
    elif variant is ThetaSignVariant.PN:
        knots = [(p, -q), (j, -k), (p - j, k - q)]
    elif variant is ThetaSignVariant.NN:
        knots = [(-p, -q), (-j, -k), (j - p, k - q)]
    else:
        knots = [(-p, q), (-j, k), (j - p, q - k)]
    return frozenset(unoriented(TorusKnot(a, b)) for a, b in knots)


def constituents_pqr(theta: ThetaPQR) -> ConstituentTriple:
    p, q, r = theta.p, theta.q, theta.r
    jk = jk_pair(p, q)
    j, k = jk.j, jk.k
    return ConstituentTriple(
        k1=TorusKnot(j - (r + 1) * p, k - (r + 1) * q),
        k2=TorusKnot(r * p - j, r * q - k),
        k3=TorusKnot(p, q),
    )


def constituents_1q(q: int, r: int) -> ConstituentTriple:
    """Constituents when k3 = t(1, q) and e3 winds r times around the complementary annulus."""
    if q < 1:
        raise InvalidInput(f"need q >= 1, got {q}")
    return ConstituentTriple(
        k1=TorusKnot(-r, -q * r - 1),
        k2=TorusKnot(r - 1, q * (r - 1) + 1),
        k3=TorusKnot(1, q),
    )
