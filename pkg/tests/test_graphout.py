import itertools

import networkx as nx
import pytest

from cographgen.cotree import parse
from cographgen.generator import cographs, trees
from cographgen.graphout import (
    FormatError,
    SimpleGraph,
    complement_check,
    from_graph6,
    materialize,
    to_dot,
    to_edgelist,
    to_graph6,
)
from cographgen.oracle import is_p4_free

K4_MINUS_EDGE = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def lca_adjacent(t, root_type, a, b):
    """Independent pairwise rule: walk up to the lowest common ancestor."""
    def up(v):
        path = []
        while v is not None:
            path.append(v)
            v = t.parent[v]
        return path

    pa, pb = up(a), set(up(b))
    lca = next(v for v in pa if v in pb)
    depth = len(up(lca)) - 1
    return (root_type if depth % 2 == 0 else 1 - root_type) == 1


def test_k2():
    g = materialize(parse("(1 1)"), 1)
    assert g == SimpleGraph(2, frozenset({(0, 1)}))


def test_empty4():
    assert materialize(parse("(1 1 1 1)"), 0).edges == frozenset()


def test_k4_minus_edge():
    g = materialize(parse("(1 1 (1 1))"), 1)
    assert g == K4_MINUS_EDGE
    assert not g.has_edge(2, 3)


def test_bare_tree_needs_root_type():
    with pytest.raises(ValueError):
        materialize(parse("(1 1)"))


@pytest.mark.parametrize("n", range(2, 8))
def test_materialize_matches_pairwise_lca_rule(n):
    for t in trees(n):
        leaves = t.leaves()
        for root_type in (0, 1):
            g = materialize(t, root_type)
            for (i, a), (j, b) in itertools.combinations(enumerate(leaves), 2):
                assert g.has_edge(i, j) == lca_adjacent(t, root_type, a, b)


class TestComplement:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_pairs_are_complements(self, n):
        for t in trees(n):
            assert complement_check(materialize(t, 0), materialize(t, 1))

    def test_k2_k2(self):
        k2 = SimpleGraph(2, frozenset({(0, 1)}))
        assert not complement_check(k2, k2)

    def test_empty_vs_complete(self):
        assert complement_check(SimpleGraph(3, frozenset()), SimpleGraph(3, frozenset({(0, 1), (0, 2), (1, 2)})))

    def test_size_mismatch(self):
        assert not complement_check(SimpleGraph(2, frozenset()), SimpleGraph(3, frozenset()))


@pytest.mark.parametrize("n", range(2, 9))
def test_generated_graphs_are_cographs(n):
    for h in cographs(n):
        g = materialize(h)
        assert is_p4_free(g)
        assert g.is_connected() == (h.root_type == 1)


class TestGraph6:
    def test_k2(self):
        assert to_graph6(SimpleGraph(2, frozenset({(0, 1)}))) == "A_"

    def test_single_vertex(self):
        assert to_graph6(SimpleGraph(1, frozenset())) == "@"

    def test_hand_encoded(self):
        # K4 minus {2,3}: column bits 1 | 1 1 | 1 1 0 -> 111110 -> 62 + 63
        assert to_graph6(K4_MINUS_EDGE) == "C}"

    @pytest.mark.parametrize("n", range(1, 9))
    def test_networkx_decodes_our_output(self, n):
        for h in cographs(n):
            g = materialize(h)
            s = to_graph6(g)
            other = nx.from_graph6_bytes(s.encode("ascii"))
            assert other.number_of_nodes() == n
            assert {tuple(sorted(e)) for e in other.edges()} == set(g.edges)
            assert from_graph6(s) == g

    def test_networkx_encoding_matches(self):
        for h in cographs(6):
            g = materialize(h)
            ref = nx.Graph()
            ref.add_nodes_from(range(g.vertex_count))
            ref.add_edges_from(g.edges)
            assert nx.to_graph6_bytes(ref, header=False).decode().strip() == to_graph6(g)

    @pytest.mark.parametrize("n", [62, 63, 200])
    def test_size_prefix_boundaries(self, n):
        g = SimpleGraph.from_edges(n, [(0, n - 1)])
        s = to_graph6(g)
        assert from_graph6(s) == g
        assert nx.from_graph6_bytes(s.encode()).number_of_nodes() == n

    def test_too_large(self):
        with pytest.raises(FormatError):
            to_graph6(SimpleGraph(2 ** 36, frozenset()))

    def test_bad_input(self):
        with pytest.raises(FormatError):
            from_graph6("A")


def test_edgelist():
    assert to_edgelist(K4_MINUS_EDGE) == "4 5\n0 1\n0 2\n0 3\n1 2\n1 3"
    assert to_edgelist(SimpleGraph(2, frozenset())) == "2 0"


def test_dot():
    dot = to_dot(SimpleGraph(2, frozenset({(0, 1)})))
    assert dot.splitlines()[0] == "graph G {" and "  0 -- 1;" in dot and dot.endswith("}")


def test_simple_graph_rejects_loops():
    with pytest.raises(ValueError):
        SimpleGraph(2, frozenset({(1, 1)}))
