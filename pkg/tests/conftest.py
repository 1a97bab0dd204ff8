from math import gcd

import pytest

from torus_theta import TorusKnot


def coprime_pairs(lo, hi, *, ordered=True):
    """All coprime (p, q) with lo <= p, q <= hi (p < q when ``ordered``)."""
    return [
        (p, q)
        for q in range(lo, hi + 1)
        for p in range(lo, hi + 1)
        if gcd(p, q) == 1 and (p < q or not ordered)
    ]


def knots_in_box(n):
    """Every valid TorusKnot with |p|, |q| <= n."""
    return [TorusKnot(p, q) for p in range(-n, n + 1) for q in range(-n, n + 1) if gcd(p, q) == 1]


@pytest.fixture(scope="session")
def box8():
    return knots_in_box(8)
