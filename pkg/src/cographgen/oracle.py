"""Brute-force ground truth for small n.

Nothing here uses the successor machinery.  Trees are built by plain
recursion and ordered with a tuple sort key written directly from the
node order (leaf count, then child leaf counts, then children pairwise),
not with `compare_nodes`.  Graph classes come from all labelled graphs,
filtered to those without an induced four-vertex path.
"""
from __future__ import annotations

from functools import cache
from itertools import combinations, combinations_with_replacement, permutations, product

from .cotree import Cotree, parse
from .graphout import SimpleGraph
from .partitions import Partition, UsageError

MAX_TREE_N = 9
MAX_GRAPH_N = 6
LONG_GRAPH_N = 7


def all_partitions(n: int) -> list[Partition]:
    """Every partition of ``n`` with at least two parts, ascending."""
    if not 2 <= n <= 20:
        raise UsageError(f"all_partitions supports 2 <= n <= 20, got {n}")

    def rec(remaining: int, smallest: int) -> list[tuple[int, ...]]:
        if remaining == 0:
            return [()]
        return [(p,) + rest for p in range(smallest, remaining + 1) for rest in rec(remaining - p, p)]

    # lexicographic tuple order agrees with partition order within one n
    return sorted(p for p in rec(n, 1) if len(p) >= 2)


def partition_count(n: int) -> int:
    """Unrestricted partition number p(n), by the classic coin-change table."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


# A tree is modelled as a nested tuple of children; a leaf is ().
# sort_key(node) = (leaf count, child leaf counts, child keys), so plain
# tuple comparison realizes the node order.


@cache
def _shapes(m: int) -> tuple[tuple, ...]:
    """All trees with ``m`` leaves as nested tuples, children ascending by key."""
    if m == 1:
        return ((),)
    found: dict[str, tuple] = {}
    for parts in all_partitions(m):
        groups: dict[int, int] = {}
        for p in parts:
            groups[p] = groups.get(p, 0) + 1
        choices = [list(combinations_with_replacement(_shapes(size), mult)) for size, mult in sorted(groups.items())]
        for pick in product(*choices):
            kids = tuple(sorted((c for group in pick for c in group), key=sort_key))
            # dedup by canonical text with string-sorted children
            found.setdefault(_canonical_text(kids), kids)
    return tuple(sorted(found.values(), key=sort_key))


def leaf_count(shape: tuple) -> int:
    return 1 if not shape else sum(leaf_count(c) for c in shape)


@cache
def sort_key(shape: tuple) -> tuple:
    if not shape:
        return (1, (), ())
    return (leaf_count(shape), tuple(leaf_count(c) for c in shape), tuple(sort_key(c) for c in shape))


def _canonical_text(shape: tuple) -> str:
    if not shape:
        return "1"
    return "(" + " ".join(sorted(_canonical_text(c) for c in shape)) + ")"


def shape_text(shape: tuple) -> str:
    """Text in the cotree format, children kept in their stored order."""
    if not shape:
        return "1"
    return "(" + " ".join(shape_text(c) for c in shape) + ")"


def all_tree_texts(n: int) -> list[str]:
    if not 2 <= n <= MAX_TREE_N:
        raise UsageError(f"all_trees supports 2 <= n <= {MAX_TREE_N}, got {n}")
    return [shape_text(s) for s in _shapes(n)]


def all_trees(n: int) -> list[Cotree]:
    """Every tree with ``n`` leaves, ordered, ascending."""
    return [parse(s) for s in all_tree_texts(n)]


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _p4_subsets(n: int) -> list[tuple[int, ...]]:
    """For each 4-subset, the bit positions of its six pairs."""
    bit = {p: i for i, p in enumerate(_pairs(n))}
    return [tuple(bit[p] for p in combinations(quad, 2)) for quad in combinations(range(n), 4)]


def _induces_p4(edges: list[tuple[int, int]]) -> bool:
    if len(edges) != 3:
        return False
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return sorted(deg.values()) == [1, 1, 2, 2]


# index: the 6-bit pattern over the pairs of vertices 0..3 in combinations order
_P4_PATTERNS = frozenset(
    mask for mask in range(64)
    if _induces_p4([p for i, p in enumerate(combinations(range(4), 2)) if mask >> i & 1])
)


def is_p4_free(g: SimpleGraph) -> bool:
    """True iff no four vertices induce a path."""
    for quad in combinations(range(g.vertex_count), 4):
        if _induces_p4([p for p in combinations(quad, 2) if p in g.edges]):
            return False
    return True


def canonical_form(g: SimpleGraph) -> int:
    """Least adjacency bit mask over all vertex relabellings.

    Bit ``i`` stands for the i-th pair ``(u, v)``, ``u < v``, in
    lexicographic order.  Equal forms iff isomorphic.
    """
    n = g.vertex_count
    pairs = _pairs(n)
    best = None
    for perm in permutations(range(n)):
        mask = 0
        for i, (u, v) in enumerate(pairs):
            if g.has_edge(perm[u], perm[v]):
                mask |= 1 << i
        if best is None or mask < best:
            best = mask
    return best if best is not None else 0


def cograph_classes_bruteforce(n: int, allow_long: bool = False) -> set[int]:
    """Canonical forms of all P4-free graphs on ``n`` vertices.

    Labelled graphs are scanned in increasing mask order; the first member
    of each isomorphism class seen is its least mask, so every relabelling
    of it is marked and skipped later.
    """
    top = LONG_GRAPH_N if allow_long else MAX_GRAPH_N
    if not 1 <= n <= top:
        raise UsageError(f"brute force supports 1 <= n <= {top}, got {n}")
    pairs = _pairs(n)
    bit = {p: i for i, p in enumerate(pairs)}
    quads = _p4_subsets(n)
    relabel = [
        [bit[(min(perm[u], perm[v]), max(perm[u], perm[v]))] for u, v in pairs]
        for perm in permutations(range(n))
    ]
    seen: set[int] = set()
    classes: set[int] = set()
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        has_p4 = False
        for q in quads:
            pattern = 0
            for j, b in enumerate(q):
                if mask >> b & 1:
                    pattern |= 1 << j
            if pattern in _P4_PATTERNS:
                has_p4 = True
                break
        if has_p4:
            continue
        classes.add(mask)
        for target in relabel:
            image = 0
            for i, b in enumerate(target):
                if mask >> i & 1:
                    image |= 1 << b
            seen.add(image)
    return classes


def count_cographs_bruteforce(n: int, allow_long: bool = False) -> int:
    return len(cograph_classes_bruteforce(n, allow_long))
