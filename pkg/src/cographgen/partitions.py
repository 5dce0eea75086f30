"""Integer partitions with at least two parts, in lexicographic order.

A partition is stored as a plain tuple of non-decreasing positive ints,
e.g. ``(1, 1, 3)`` for 5.  Partitions with a single part are excluded.
"""
from __future__ import annotations

from enum import IntEnum
from typing import Optional, Sequence

Partition = tuple[int, ...]


class UsageError(ValueError):
    """Raised when an operation is called outside its domain."""


class Ordering(IntEnum):
    """Three-way comparison result shared by partitions, nodes and trees."""

    LESS = -1
    EQUIVALENT = 0
    GREATER = 1

    EQUAL = 0  # alias; partitions are "equal", nodes are "equivalent"

    @classmethod
    def of(cls, a, b) -> Ordering:
        return cls.LESS if a < b else cls.GREATER if a > b else cls.EQUIVALENT


def is_partition(parts: Sequence[int]) -> bool:
    if len(parts) < 2:
        return False
    prev = 1
    for p in parts:
        if not isinstance(p, int) or p < prev:
            return False
        prev = p
    return True


def check_partition(parts: Sequence[int]) -> Partition:
    """Return ``parts`` as a tuple, raising `UsageError` if it is not a partition."""
    if not is_partition(parts):
        raise UsageError(f"not a partition with >= 2 non-decreasing positive parts: {tuple(parts)!r}")
    return tuple(parts)


def compare_partitions(a: Sequence[int], b: Sequence[int]) -> Ordering:
    """Lexicographic comparison of two partitions of the same integer."""
    if sum(a) != sum(b):
        raise UsageError(f"partitions of different integers: {sum(a)} vs {sum(b)}")
    for x, y in zip(a, b):
        if x != y:
            return Ordering.LESS if x < y else Ordering.GREATER
    # two distinct partitions of the same n cannot be prefixes of each other
    return Ordering.EQUAL


def min_partition(n: int) -> Partition:
    if n < 2:
        raise UsageError(f"partitions need n >= 2, got {n}")
    return (1,) * n


def max_partition(n: int) -> Partition:
    if n < 2:
        raise UsageError(f"partitions need n >= 2, got {n}")
    return (n // 2, n - n // 2)


def is_max_partition(a: Sequence[int]) -> bool:
    """Constant-time test for ``(floor(n/2), ceil(n/2))``."""
    return len(a) == 2 and a[0] == (a[0] + a[1]) // 2


def next_partition(a: Sequence[int]) -> Optional[Partition]:
    """Immediate lexicographic successor of ``a`` among partitions of ``sum(a)``.

    Returns ``None`` when ``a`` is the maximum ``(n // 2, n - n // 2)``.
    Runs in O(n); the worst case is ``(1, n - 1)``, which expands into a
    run of ``(n - 2) // 2`` twos.
    """
    return _successor(check_partition(a))


def _successor(a: Partition) -> Optional[Partition]:
    # unchecked core of next_partition, called on the tree hot path
    n = sum(a)
    k = len(a)
    if a[0] != n // 2:
        lo, hi = a[k - 2], a[k - 1]
        if hi - lo <= 1:
            return a[: k - 2] + (lo + hi,)
        lo += 1
        hi -= 1
        q, r = divmod(hi, lo)
        if q > 1:
            return a[: k - 2] + (lo,) * q + (lo + r,)
        return a[: k - 2] + (lo, hi)
    if n != 3:
        return None
    # n == 3: both (1, 1, 1) and (1, 2) start with floor(3/2) == 1
    if a[1] == 2:
        return None
    return (1, 2)
