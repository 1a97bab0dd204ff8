"""Constituent knots, primeness and classification of theta-curves on the standard torus."""

__version__ = "0.1.0"

from .classify import (
    ConnectedSum,
    Prime,
    SignType,
    ThetaEquivalenceVerdict,
    ThetaOnTorus,
    Unknotted,
    classify_pqr,
    classify_theta,
    homeo_invariant,
    is_prime_theta,
    is_three_connected_sum,
    theta_equivalent,
    validate_triple,
)
from .constituents import (
    ConstituentTriple,
    JKPair,
    ThetaPQR,
    ThetaSignVariant,
    constituents_1q,
    constituents_pq,
    constituents_pqr,
    constituents_sign_variant,
    jk_pair,
    mod_inverse,
)
from .errors import *  # noqa: F401,F403
from .fibonacci import FibRecord, cassini, fib, fib_table, fib_theta, tagiuri
from .knot_core import (
    HomologyClass,
    KnotEquivalence,
    TorusKnot,
    canonical_unoriented,
    intersection_number,
    is_prime_knot,
    is_trivial,
    knots_equivalent,
    reflect_R,
    reverse,
    rotate_rho,
    rotate_sigma,
    unoriented,
)
from .oracle import brute_force_jk, cover_walk, cover_walk_constituents, cross_check
