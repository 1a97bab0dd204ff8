"""Theta-curves theta(F_n, F_{n+1}) built from consecutive Fibonacci numbers."""
from __future__ import annotations

from dataclasses import dataclass

from .constituents import ConstituentTriple, constituents_pq
from .errors import InvalidInput
from .knot_core import TorusKnot

__all__ = ["FibRecord", "PatternMismatch", "cassini", "fib", "fib_table", "fib_theta", "tagiuri"]


class PatternMismatch(RuntimeError):
    """The computed constituents break the Fibonacci pattern."""


def fib(n: int) -> int:
    if n < 0:
        raise InvalidInput(f"fib needs n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def cassini(n: int) -> int:
    """F_{n-1} F_{n+1} - F_n^2, which equals (-1)^n."""
    if n < 1:
        raise InvalidInput(f"cassini needs n >= 1, got {n}")
    return fib(n - 1) * fib(n + 1) - fib(n) ** 2


def tagiuri(n: int) -> int:
    """F_{n-1} F_n - F_{n-2} F_{n+1}, which equals (-1)^n."""
    if n < 2:
        raise InvalidInput(f"tagiuri needs n >= 2, got {n}")
    return fib(n - 1) * fib(n) - fib(n - 2) * fib(n + 1)


@dataclass(frozen=True)
class FibRecord:
    n: int
    Fn: int
    Fn1: int
    constituents: ConstituentTriple


def fib_theta(n: int) -> FibRecord:
    if n < 3:
        raise InvalidInput(f"fib_theta needs n >= 3, got {n}")
    f0, f1, f2, f3 = fib(n - 2), fib(n - 1), fib(n), fib(n + 1)
    triple = constituents_pq(f2, f3)

    larger = TorusKnot(-f1, -f2)
    smaller = TorusKnot(-f0, -f1)
    if n % 2 == 0:
        expected = ConstituentTriple(k1=smaller, k2=larger, k3=TorusKnot(f2, f3))
    else:
        expected = ConstituentTriple(k1=larger, k2=smaller, k3=TorusKnot(f2, f3))
    if triple != expected:
        raise PatternMismatch(f"θ(F_{n},F_{n + 1}): got {triple}, expected {expected}")
    return FibRecord(n=n, Fn=f2, Fn1=f3, constituents=triple)


def fib_table(n_max: int) -> list[FibRecord]:
    if n_max < 3:
        raise InvalidInput(f"fib_table needs n_max >= 3, got {n_max}")
    return [fib_theta(n) for n in range(3, n_max + 1)]
