from hypothesis import given
import hypothesis.strategies as st
import pytest

from torus_theta import (
    HomologyClass,
    InvalidInput,
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
)

ISO = KnotEquivalence.ISOTOPY
HOMEO = KnotEquivalence.HOMEOMORPHISM

coords = st.integers(min_value=-10**30, max_value=10**30)
classes = st.builds(HomologyClass, coords, coords)


@st.composite
def torus_knots(draw):
    p = draw(st.integers(-200, 200))
    q = draw(st.integers(-200, 200))
    try:
        return TorusKnot(p, q)
    except InvalidInput:
        return TorusKnot(1, q)


def test_rejects_non_coprime():
    with pytest.raises(InvalidInput):
        TorusKnot(0, 0)
    with pytest.raises(InvalidInput):
        TorusKnot(2, 4)
    assert HomologyClass(0, 0).is_zero


@pytest.mark.parametrize(
    "p, q, trivial",
    [(1, 5, True), (0, 1, True), (2, 3, False), (-1, 7, True), (5, -2, False)],
)
def test_is_trivial(p, q, trivial):
    assert is_trivial(TorusKnot(p, q)) is trivial


def test_is_prime_knot():
    assert is_prime_knot(TorusKnot(3, 5))
    assert not is_prime_knot(TorusKnot(1, 1))
    assert is_prime_knot(TorusKnot(-2, -3))
    assert is_prime_knot(rotate_rho(TorusKnot(-2, -3)))


def test_symmetries():
    assert reverse(TorusKnot(3, 5)) == TorusKnot(-3, -5)
    assert reverse(TorusKnot(0, 1)) == TorusKnot(0, -1)
    assert -TorusKnot(2, 3) == TorusKnot(-2, -3)
    assert reflect_R(TorusKnot(3, 5)) == TorusKnot(3, -5)
    assert rotate_sigma(TorusKnot(3, 5)) == TorusKnot(5, 3)
    k = TorusKnot(2, 7)
    assert rotate_rho(reflect_R(k)) == reflect_R(rotate_rho(k))


def test_symmetry_invariants(box8):
    for k in box8:
        assert is_prime_knot(k) != is_trivial(k)
        for op in (reverse, reflect_R, rotate_rho, rotate_sigma):
            assert op(op(k)) == k
        assert rotate_rho(k) == reverse(k)
        assert knots_equivalent(k, rotate_rho(k), ISO)
        assert knots_equivalent(k, rotate_sigma(k), ISO)
        assert knots_equivalent(k, reflect_R(k), HOMEO)


@pytest.mark.parametrize(
    "a, b, rel, expected",
    [
        ((3, 5), (5, 3), ISO, True),
        ((3, 5), (3, -5), ISO, False),
        ((3, 5), (3, -5), HOMEO, True),
        ((1, 7), (0, 1), ISO, True),
        ((2, 3), (1, 7), HOMEO, False),
    ],
)
def test_knots_equivalent(a, b, rel, expected):
    assert knots_equivalent(TorusKnot(*a), TorusKnot(*b), rel) is expected


@pytest.mark.parametrize("rel", [ISO, HOMEO])
def test_equivalence_relation_exhaustive(box8, rel):
    # Partition into classes, then transitivity is pairwise agreement inside a class.
    for k in box8:
        assert knots_equivalent(k, k, rel)
    for k1 in box8:
        for k2 in box8:
            e = knots_equivalent(k1, k2, rel)
            assert e == knots_equivalent(k2, k1, rel)
            if e and rel is ISO:
                assert knots_equivalent(k1, k2, HOMEO)
            assert e == (canonical_unoriented(k1, rel) == canonical_unoriented(k2, rel))


def test_canonical_examples():
    assert canonical_unoriented(TorusKnot(-5, -3), HOMEO) == TorusKnot(3, 5)
    assert canonical_unoriented(TorusKnot(5, 3), ISO) == TorusKnot(3, 5)
    assert canonical_unoriented(TorusKnot(1, 9), ISO) == TorusKnot(0, 1)
    assert canonical_unoriented(TorusKnot(-5, 3), ISO) == TorusKnot(3, -5)


def test_canonical_idempotent(box8):
    for k in box8:
        for rel in (ISO, HOMEO):
            c = canonical_unoriented(k, rel)
            assert canonical_unoriented(c, rel) == c


def test_intersection_examples():
    l, m = HomologyClass(1, 0), HomologyClass(0, 1)
    assert intersection_number(l, m) == 1
    assert intersection_number(m, l) == -1
    assert intersection_number(HomologyClass(3, 5), HomologyClass(3, 5)) == 0
    assert intersection_number(HomologyClass(3, 5), HomologyClass(2, 3)) == 3 * 3 - 5 * 2 == -1


@given(classes, classes, classes)
def test_intersection_bilinear_antisymmetric(c1, c2, c3):
    assert intersection_number(c1 + c2, c3) == intersection_number(c1, c3) + intersection_number(c2, c3)
    assert intersection_number(c1, c2) == -intersection_number(c2, c1)


@given(torus_knots())
def test_canonical_respects_symmetries(k):
    assert canonical_unoriented(rotate_sigma(k), ISO) == canonical_unoriented(k, ISO)
    assert canonical_unoriented(reverse(k), ISO) == canonical_unoriented(k, ISO)
    assert canonical_unoriented(reflect_R(k), HOMEO) == canonical_unoriented(k, HOMEO)
