"""Streaming enumeration of unlabeled cographs on n vertices.

Each tree with n leaves is emitted twice, first with a disjoint-union
root (type 0, disconnected graph) and then with a join root (type 1,
connected graph).  The caller pulls outputs one at a time:

    >>> state = start(3)
    >>> [h.text for h in state]
    ['0:(1 1 1)', '1:(1 1 1)', '0:(1 (1 1))', '1:(1 (1 1))']
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .cotree import Cotree, induced_partition, leaf_tree, min_tree, serialize
from .partitions import Partition, UsageError, _successor, min_partition
from .successor import _rebuild, next_tree


@dataclass(frozen=True)
class CographHandle:
    """One output: a snapshot of the current tree plus the root type.

    The two handles emitted for the same tree share one snapshot.
    """

    tree: Cotree = field(repr=False)
    root_type: int
    ordinal: int

    @property
    def text(self) -> str:
        return f"{self.root_type}:{serialize(self.tree)}"

    def __str__(self) -> str:
        return self.text


class GeneratorState:
    """Position in the enumeration; iterate it, or call `next_cograph`."""

    def __init__(self, n: int):
        if n < 1:
            raise UsageError(f"need n >= 1, got {n}")
        self.n = n
        self.tree = leaf_tree() if n == 1 else min_tree(n)
        self.index = 1
        self.finished = False
        self.emit_parity = 0
        self.emitted = 0
        self._snapshot: Optional[Cotree] = None

    def __iter__(self) -> Iterator[CographHandle]:
        return self

    def __next__(self) -> CographHandle:
        h = next_cograph(self)
        if h is None:
            raise StopIteration
        return h


def start(n: int) -> GeneratorState:
    """Position a new enumeration at the least tree, O(n)."""
    return GeneratorState(n)


def next_cograph(state: GeneratorState) -> Optional[CographHandle]:
    if state.finished:
        return None
    if state.emit_parity == 0:
        state._snapshot = state.tree.copy()
    h = CographHandle(state._snapshot, state.emit_parity, state.emitted)
    state.emitted += 1
    if state.n == 1:
        # the one-vertex graph has a single cotree; there is no type-1 twin
        state.finished = True
    elif state.emit_parity == 0:
        state.emit_parity = 1
    else:
        state.emit_parity = 0
        state._snapshot = None
        if next_tree(state.tree):
            state.index += 1
        else:
            state.finished = True
    return h


def cographs(n: int) -> Iterator[CographHandle]:
    return iter(start(n))


def trees(n: int) -> Iterator[Cotree]:
    """Yield the live tree after each step; copy it if you keep it."""
    if n == 1:
        yield leaf_tree()
        return
    t = min_tree(n)
    yield t
    while next_tree(t):
        yield t


def count_trees(n: int) -> int:
    if n < 1:
        raise UsageError(f"need n >= 1, got {n}")
    if n == 1:
        return 1
    t = min_tree(n)
    c = 1
    while next_tree(t):
        c += 1
    return c


def root_partitions(n: int) -> list[Partition]:
    out = []
    p: Optional[Partition] = min_partition(n)
    while p is not None:
        out.append(p)
        p = _successor(p)
    return out


def count_trees_between(n: int, lo: Partition, hi: Optional[Partition]) -> int:
    """Count trees whose root partition lies in ``[lo, hi)``; ``hi=None`` means to the end."""
    t = min_tree(n)
    _rebuild(t, t.root, lo)
    c = 1
    while next_tree(t):
        if hi is not None and induced_partition(t, t.root) == hi:
            break
        c += 1
    return c


def count(n: int, workers: int = 1) -> int:
    """Number of unlabeled cographs on ``n`` vertices, without building outputs.

    With ``workers > 1`` the root partitions are cut into contiguous ranges
    counted in separate processes.
    """
    if n < 1:
        raise UsageError(f"need n >= 1, got {n}")
    if n == 1:
        return 1
    if workers <= 1:
        return 2 * count_trees(n)
    parts = root_partitions(n)
    # more chunks than workers to even out very unequal ranges
    chunks = min(len(parts), 4 * workers)
    bounds = [parts[i * len(parts) // chunks] for i in range(chunks)]
    his: list[Optional[Partition]] = bounds[1:] + [None]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        totals = pool.map(count_trees_between, [n] * chunks, bounds, his)
        return 2 * sum(totals)
