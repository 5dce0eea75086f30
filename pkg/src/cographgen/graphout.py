"""Turn cotrees into concrete graphs and write them out.

Vertices are the leaves, numbered left to right in serialization order.
Node types alternate with depth starting from the root type, and two
vertices are adjacent exactly when their lowest common ancestor is a
join (type 1) node.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .cotree import Cotree
from .generator import CographHandle

GRAPH6_MAX_N = 68719476735


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not 0 <= u < v < self.vertex_count:
                raise ValueError(f"bad edge ({u}, {v}) for {self.vertex_count} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset((min(u, v), max(u, v)) for u, v in edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def complement(self) -> SimpleGraph:
        n = self.vertex_count
        return SimpleGraph(n, frozenset(p for p in combinations(range(n), 2) if p not in self.edges))

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def materialize(h: Union[CographHandle, Cotree], root_type: int | None = None) -> SimpleGraph:
    """Build the graph of a handle, or of a tree with an explicit root type.

    Edges come from cross products between child leaf sets at join nodes,
    so the cost is O(n + |E|).
    """
    if isinstance(h, CographHandle):
        t, root_type = h.tree, h.root_type
    else:
        t = h
        if root_type not in (0, 1):
            raise ValueError("root_type must be 0 or 1 when materializing a bare tree")
    index = {leaf: i for i, leaf in enumerate(t.leaves())}
    edges = set()
    # post-order over (node, type); leaf sets bubble up from the children
    below: dict[int, list[int]] = {}
    stack = [(t.root, root_type, False)]
    while stack:
        v, kind, done = stack.pop()
        kids = t.children[v]
        if not kids:
            below[v] = [index[v]]
            continue
        if not done:
            stack.append((v, kind, True))
            stack.extend((w, 1 - kind, False) for w in kids)
            continue
        groups = [below.pop(w) for w in kids]
        if kind == 1:
            for a, b in combinations(groups, 2):
                edges.update((min(x, y), max(x, y)) for x in a for y in b)
        below[v] = [x for g in groups for x in g]
    return SimpleGraph(len(index), frozenset(edges))


def complement_check(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    """True iff ``g2`` is the edge complement of ``g1``."""
    n = g1.vertex_count
    if g2.vertex_count != n:
        return False
    if len(g1.edges) + len(g2.edges) != n * (n - 1) // 2:
        return False
    return g1.edges.isdisjoint(g2.edges)


def to_edgelist(g: SimpleGraph) -> str:
    """``"n m"`` header, then one ``"u v"`` line per edge with u < v, sorted."""
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines)


def _graph6_size(n: int) -> str:
    if n < 0 or n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 cannot encode {n} vertices")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: SimpleGraph) -> str:
    """graph6 encoding: size prefix, then the upper triangle column by column."""
    n = g.vertex_count
    out = [_graph6_size(n)]
    bits = [(i, j) in g.edges for j in range(1, n) for i in range(j)]
    bits.extend([False] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chr(chunk + 63))
    return "".join(out)


def from_graph6(text: str) -> SimpleGraph:
    data = [ord(c) - 63 for c in text.strip()]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"not a graph6 string: {text!r}")
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] == 63:
        n, rest = _unpack(data[2:8]), data[8:]
    else:
        n, rest = _unpack(data[1:4]), data[4:]
    want = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != want:
        raise FormatError(f"graph6 body has {len(rest)} bytes, expected {want}")
    bits = [(d >> s) & 1 for d in rest for s in range(5, -1, -1)]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return SimpleGraph(n, frozenset(p for p, b in zip(pairs, bits) if b))


def _unpack(chunks: list[int]) -> int:
    n = 0
    for c in chunks:
        n = (n << 6) | c
    return n


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    lines.extend(f"  {u} -- {v};" for u, v in sorted(g.edges))
    lines.append("}")
    return "\n".join(lines)
