"""Small combinatorial helpers shared across modules."""

from __future__ import annotations

import itertools
from typing import Iterator


def nonempty_subsets(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of range(n), by size then lexicographically."""
    for size in range(1, n + 1):
        yield from itertools.combinations(range(n), size)


def all_subsets(n: int) -> Iterator[tuple[int, ...]]:
    """All subsets of range(n): the empty tuple first, then nonempty_subsets."""
    yield ()
    yield from nonempty_subsets(n)


def prime_factorization(m: int) -> dict[int, int]:
    """Prime -> exponent map of m >= 1, by trial division."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m >= 1."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def partitions(n: int, _max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if _max_part is None or _max_part > n else _max_part
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_power_of(m: int, q: int) -> bool:
    """True iff m == q**k for some integer k >= 0 (q >= 2, m >= 1)."""
    if q < 2 or m < 1:
        return False
    while m % q == 0:
        m //= q
    return m == 1
