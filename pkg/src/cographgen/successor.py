"""Immediate successor of an ordered tree: pivot search, rebuild, next_tree."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cotree import Cotree, induced_partition, is_ordered, validate
from .partitions import UsageError, _successor, check_partition


@dataclass(frozen=True)
class PivotResult:
    node: Optional[int]
    path_to_root: tuple[int, ...]


@dataclass(frozen=True)
class SiblingSplit:
    before: tuple[int, ...]
    self: int
    after: tuple[int, ...]


def sibling_split(t: Cotree, v: int) -> SiblingSplit:
    parent = t.parent[v]
    if parent is None:
        return SiblingSplit((), v, ())
    sibs = t.children[parent]
    i = sibs.index(v)
    return SiblingSplit(tuple(sibs[:i]), v, tuple(sibs[i + 1:]))


def is_exhausted(t: Cotree, v: int) -> bool:
    """A leaf, or a node whose children split as ``(floor(l/2), ceil(l/2))``."""
    kids = t.children[v]
    return not kids or (len(kids) == 2 and t.leaf_count[kids[0]] == t.leaf_count[v] // 2)


def _search(t: Cotree) -> tuple[Optional[int], list[int], list[int]]:
    """Inverted post-order search for the pivot.

    Returns ``(pivot, path, slots)`` where ``path`` runs from the root down
    to the pivot and ``slots[j]`` is the position of ``path[j + 1]`` among
    the children of ``path[j]``.
    """
    children = t.children
    lc = t.leaf_count
    path = [t.root]
    slots: list[int] = []
    v = t.root
    visited = 0
    while True:
        kids = children[v]
        while kids:
            k = len(kids) - 1
            slots.append(k)
            v = kids[k]
            path.append(v)
            kids = children[v]
        visited += 1  # a leaf, always exhausted
        while True:
            path.pop()
            if not slots:
                t.work += visited
                return None, path, slots
            i = slots.pop()
            if i:
                i -= 1
                slots.append(i)
                v = children[path[-1]][i]
                path.append(v)
                break
            v = path[-1]
            visited += 1
            kids = children[v]
            if len(kids) != 2 or lc[kids[0]] != lc[v] // 2:
                t.work += visited
                return v, path, slots


def find_pivot(t: Cotree) -> PivotResult:
    """First non-exhausted node in inverted post-order, with its root path.

    Siblings are traversed right to left and children before their parent;
    the search stops at the first hit.
    """
    v, path, _ = _search(t)
    if v is None:
        return PivotResult(None, ())
    return PivotResult(v, tuple(reversed(path)))


def _rebuild(t: Cotree, v: int, parts: Sequence[int]) -> None:
    freed = t.clear_children(v)
    # inlined Cotree.new_node: this loop dominates the enumeration
    parent = t.parent
    children = t.children
    lc = t.leaf_count
    free = t._free
    kids = children[v]
    for a in parts:
        if free:
            c = free.pop()
            parent[c] = v
            lc[c] = a
        else:
            c = len(parent)
            parent.append(v)
            children.append([])
            lc.append(a)
        kids.append(c)
        if a > 1:
            grandkids = children[c]
            for _ in range(a):
                if free:
                    g = free.pop()
                    parent[g] = c
                    lc[g] = 1
                else:
                    g = len(parent)
                    parent.append(c)
                    children.append([])
                    lc.append(1)
                grandkids.append(g)
    t.work += freed + len(parts) + lc[v]


def rebuild_node(t: Cotree, v: int, parts: Sequence[int]) -> None:
    """Replace ``T(v)`` by the least subtree whose root induces ``parts``.

    Each child gets leaf count ``parts[i]`` and, when that exceeds one,
    exactly that many leaf children.  Old descendants are recycled.
    """
    parts = check_partition(parts)
    if sum(parts) != t.leaf_count[v]:
        raise UsageError(f"partition {parts} does not sum to l({v}) = {t.leaf_count[v]}")
    _rebuild(t, v, parts)


def _clone_onto(t: Cotree, src: int, dst: int) -> None:
    """Make ``T(dst)`` a copy of ``T(src)``; the two subtrees must be disjoint."""
    freed = t.clear_children(dst)
    created = 0
    children = t.children
    lc = t.leaf_count
    new_node = t.new_node
    stack = [(src, dst)]
    while stack:
        s, d = stack.pop()
        for c in children[s]:
            nc = new_node(d, lc[c])
            created += 1
            if children[c]:
                stack.append((c, nc))
    t.work += freed + created


def next_tree(t: Cotree, check: bool = False) -> bool:
    """Advance ``t`` in place to the next tree with the same leaf count.

    Returns ``False`` and leaves ``t`` untouched when ``t`` is already the
    maximum.  Otherwise the pivot is rebuilt with the next partition, and
    walking from the pivot up to the root, every right sibling of the
    current node is reset: an equally sized one becomes a copy of the
    (already updated) current subtree, any other one becomes a star of
    leaves under an all-ones partition.

    ``check=True`` first validates labels and sibling order, raising
    `UsageError`; the enumeration loop leaves it off.
    """
    if check:
        try:
            validate(t)
        except ValueError as exc:
            raise UsageError(f"next_tree needs a labelled tree: {exc}") from exc
        if not is_ordered(t):
            raise UsageError("next_tree needs an ordered tree")
    v, path, slots = _search(t)
    if v is None:
        return False
    parts = induced_partition(t, v)
    _rebuild(t, v, _successor(parts))

    children = t.children
    lc = t.leaf_count
    x = v
    for depth in range(len(slots) - 1, -1, -1):
        sibs = children[path[depth]]
        lx = lc[x]
        for y in sibs[slots[depth] + 1:]:
            if lc[y] == lx:
                _clone_onto(t, x, y)
            else:
                _rebuild(t, y, (1,) * lc[y])
        x = path[depth]
    return True
