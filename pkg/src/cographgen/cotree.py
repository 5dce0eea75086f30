"""Rooted trees whose internal nodes have at least two children.

Nodes live in an arena of parallel lists indexed by integer id; removed
subtrees go on a free-list and their ids are reused.  Every node carries
its leaf count, so a tree in canonical form doubles as its own labelling.

The text format is ``tree := "1" | "(" tree (" " tree)+ ")"``, children in
sibling order, e.g. ``"(1 (1 1) (1 1))"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .partitions import Ordering, Partition, UsageError, compare_partitions


class ParseError(ValueError):
    """Malformed cotree text; ``position`` is the offending character offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Node:
    """Read-only snapshot of one arena slot."""

    parent: Optional[int]
    children: tuple[int, ...]
    leaf_count: int


class Cotree:
    """Arena-backed rooted tree.

    ``work`` is a running counter of node visits, creations and deletions
    performed by the successor routines; it only ever grows and callers
    diff it around the operation they want to measure.
    """

    __slots__ = ("parent", "children", "leaf_count", "root", "_free", "work")

    def __init__(self):
        self.parent: list[Optional[int]] = []
        self.children: list[list[int]] = []
        self.leaf_count: list[int] = []
        self._free: list[int] = []
        self.root = self.new_node(None)
        self.work = 0

    # -- arena -----------------------------------------------------------

    def new_node(self, parent: Optional[int], leaf_count: int = 1) -> int:
        if self._free:
            v = self._free.pop()
            self.parent[v] = parent
            self.leaf_count[v] = leaf_count
        else:
            v = len(self.parent)
            self.parent.append(parent)
            self.children.append([])
            self.leaf_count.append(leaf_count)
        if parent is not None:
            self.children[parent].append(v)
        return v

    def clear_children(self, v: int) -> int:
        """Recycle every descendant of ``v``; return how many were freed."""
        freed = 0
        stack = self.children[v]
        self.children[v] = []
        free = self._free
        while stack:
            w = stack.pop()
            kids = self.children[w]
            if kids:
                stack.extend(kids)
                self.children[w] = []
            self.parent[w] = None
            free.append(w)
            freed += 1
        return freed

    # -- queries ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self.leaf_count[self.root]

    def node(self, v: int) -> Node:
        return Node(self.parent[v], tuple(self.children[v]), self.leaf_count[v])

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def nodes(self) -> Iterator[int]:
        """Live node ids in pre-order, left to right."""
        stack = [self.root]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(self.children[v]))

    def node_count(self) -> int:
        return len(self.parent) - len(self._free)

    def leaves(self, v: Optional[int] = None) -> list[int]:
        """Leaf ids below ``v`` (default root) in left-to-right order."""
        stack = [self.root if v is None else v]
        out = []
        while stack:
            w = stack.pop()
            kids = self.children[w]
            if kids:
                stack.extend(reversed(kids))
            else:
                out.append(w)
        return out

    def copy(self) -> Cotree:
        t = Cotree.__new__(Cotree)
        t.parent = list(self.parent)
        t.children = [list(c) for c in self.children]
        t.leaf_count = list(self.leaf_count)
        t._free = list(self._free)
        t.root = self.root
        t.work = 0
        return t

    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"Cotree({serialize(self)!r})"


def leaf_tree() -> Cotree:
    """The one-node tree, standing for the single-vertex graph."""
    return Cotree()


def min_tree(n: int) -> Cotree:
    """Root with ``n`` leaf children: the least tree with ``n`` leaves."""
    if n < 2:
        raise UsageError(f"min_tree needs n >= 2, got {n}")
    t = Cotree()
    t.leaf_count[t.root] = n
    for _ in range(n):
        t.new_node(t.root)
    return t


def induced_partition(t: Cotree, v: int) -> Partition:
    kids = t.children[v]
    if not kids:
        raise UsageError(f"node {v} is a leaf and induces no partition")
    lc = t.leaf_count
    return tuple(lc[w] for w in kids)


def relabel(t: Cotree) -> Cotree:
    """Recompute every leaf count bottom-up, in place.  Returns ``t``."""
    order = list(t.nodes())
    lc = t.leaf_count
    for v in reversed(order):
        kids = t.children[v]
        if not kids:
            lc[v] = 1
        elif len(kids) < 2:
            raise ValidationError(f"internal node {v} has a single child")
        else:
            lc[v] = sum(lc[w] for w in kids)
    return t


def compare_nodes(t1: Cotree, v: int, t2: Cotree, w: int) -> Ordering:
    """Order two nodes, possibly of different trees, both trees ordered.

    Leaf count first, then the induced partitions, then children pairwise
    from the left.  ``EQUIVALENT`` means the subtrees agree up to sibling
    permutation.
    """
    lv, lw = t1.leaf_count[v], t2.leaf_count[w]
    if lv != lw:
        return Ordering.LESS if lv < lw else Ordering.GREATER
    if lv == 1:
        return Ordering.EQUIVALENT
    by_partition = compare_partitions(induced_partition(t1, v), induced_partition(t2, w))
    if by_partition != Ordering.EQUAL:
        return by_partition
    for x, y in zip(t1.children[v], t2.children[w]):
        c = compare_nodes(t1, x, t2, y)
        if c != Ordering.EQUIVALENT:
            return c
    return Ordering.EQUIVALENT


def compare_trees(t1: Cotree, t2: Cotree) -> Ordering:
    if t1.n != t2.n:
        raise UsageError(f"trees have different leaf counts: {t1.n} vs {t2.n}")
    return compare_nodes(t1, t1.root, t2, t2.root)


def is_ordered(t: Cotree) -> bool:
    """True when every siblinghood is non-decreasing under `compare_nodes`."""
    for v in t.nodes():
        kids = t.children[v]
        for a, b in zip(kids, kids[1:]):
            if compare_nodes(t, a, t, b) == Ordering.GREATER:
                return False
    return True


def validate(t: Cotree) -> None:
    """Check structure and labels; raise `ValidationError` on the first defect."""
    count = 0
    for v in t.nodes():
        count += 1
        kids = t.children[v]
        if len(kids) == 1:
            raise ValidationError(f"internal node {v} has a single child")
        for w in kids:
            if t.parent[w] != v:
                raise ValidationError(f"node {w} does not point back to parent {v}")
        expected = sum(t.leaf_count[w] for w in kids) if kids else 1
        if t.leaf_count[v] != expected:
            raise ValidationError(f"node {v} labelled {t.leaf_count[v]}, expected {expected}")
    if t.parent[t.root] is not None:
        raise ValidationError("root has a parent")
    if count != t.node_count():
        raise ValidationError(f"arena holds {t.node_count()} live nodes, reachable {count}")
    if t.n > 1 and count > 2 * t.n - 1:
        raise ValidationError(f"{count} nodes exceed 2n - 1 for n = {t.n}")


def serialize(t: Cotree, v: Optional[int] = None) -> str:
    """Canonical text of ``T(v)`` (default the whole tree)."""
    out: list[str] = []
    # entries are node ids, or None meaning "close the current group"
    stack: list[Optional[int]] = [t.root if v is None else v]
    children = t.children
    while stack:
        w = stack.pop()
        if w is None:
            out.append(")")
            continue
        if out and out[-1] != "(":
            out.append(" ")
        kids = children[w]
        if kids:
            out.append("(")
            stack.append(None)
            stack.extend(reversed(kids))
        else:
            out.append("1")
    return "".join(out)


def parse(text: str) -> Cotree:
    """Inverse of `serialize`; raises `ParseError` on malformed input."""
    t = Cotree()
    pos = 0
    size = len(text)

    def expect_tree_start() -> None:
        if pos >= size:
            raise ParseError("unexpected end of input", text, pos)
        if text[pos] not in "(1":
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)

    expect_tree_start()
    if text[pos] == "1":
        pos += 1
        if pos != size:
            raise ParseError("trailing characters", text, pos)
        return t

    open_nodes: list[int] = []
    opened_at: list[int] = []
    while True:
        ch = text[pos]
        if ch == "(":
            v = t.new_node(open_nodes[-1]) if open_nodes else t.root
            open_nodes.append(v)
            opened_at.append(pos)
            pos += 1
            expect_tree_start()
            continue
        if ch == "1":
            t.new_node(open_nodes[-1])
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, pos)
        # after a complete subtree: either " " then another tree, or ")"
        while True:
            if pos >= size:
                raise ParseError("unbalanced parentheses", text, pos)
            ch = text[pos]
            if ch == " ":
                pos += 1
                expect_tree_start()
                break
            if ch == ")":
                v = open_nodes.pop()
                start = opened_at.pop()
                if len(t.children[v]) < 2:
                    raise ParseError("internal node with fewer than two children", text, start)
                pos += 1
                if not open_nodes:
                    if pos != size:
                        raise ParseError("trailing characters", text, pos)
                    return relabel(t)
                continue
            raise ParseError(f"unexpected character {ch!r}", text, pos)
