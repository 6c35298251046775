"""
Tests for graph products, the odd-girth blowup, alternation graphs, the
wheel recipes and the induced-W5 product search.

Run with:
    pytest tests/test_constructions.py -v
"""

import os  # noqa: E402
import sys  # noqa: E402

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))  # noqa: E402

import networkx as nx  # noqa: E402
import pytest  # noqa: E402
from hypothesis import assume, given, settings  # noqa: E402

from storient.constructions.counterexamples import (
    connected_graph_classes,
    find_w5_in_product,
)
from storient.constructions.girth import odd_girth, odd_girth_blowup
from storient.constructions.products import ProductKind, product
from storient.constructions.recipes import apply_recipe, wheel_recipes
from storient.constructions.words import Word, alternation_graph
from storient.core.errors import GraphArgumentError, UnsupportedSizeError
from storient.graph.canonical import canonical_form
from storient.graph.generators import complete, cycle, path, wheel
from storient.graph.graph import Graph
from storient.solver.solver import is_orientable

from strategies import graphs, words  # noqa: E402


def _circulant(n: int, jumps) -> Graph:
    return Graph.from_edges(
        n, [(i, (i + j) % n) for i in range(n) for j in jumps]
    )


class TestProducts:
    def setup_method(self):
        self.k2 = complete(2)

    def test_k2_products(self):
        tensor = product(self.k2, self.k2, ProductKind.TENSOR)
        assert sorted(e.as_tuple() for e in tensor.edges()) == [(0, 3), (1, 2)]
        assert product(self.k2, self.k2, ProductKind.LEXICOGRAPHIC) == complete(4)
        assert product(self.k2, self.k2, ProductKind.STRONG) == complete(4)
        cartesian = product(self.k2, self.k2, "cartesian")
        assert cartesian.edge_count() == 4
        assert not cartesian.has_edge(0, 3)

    def test_row_major_indexing(self):
        g = product(path(2), Graph.empty(3), ProductKind.LEXICOGRAPHIC)
        # (a, b) -> 3a + b; only pairs with a0 ~ a1 are adjacent
        assert g.has_edge(0, 3) and g.has_edge(2, 4)
        assert not g.has_edge(0, 1)

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            product(complete(8), complete(8), ProductKind.CARTESIAN)

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=5), graphs(max_n=5))
    def test_edge_count_identities(self, g, h):
        eg, eh = g.edge_count(), h.edge_count()
        tensor = product(g, h, ProductKind.TENSOR)
        cartesian = product(g, h, ProductKind.CARTESIAN)
        lex = product(g, h, ProductKind.LEXICOGRAPHIC)
        strong = product(g, h, ProductKind.STRONG)
        assert tensor.edge_count() == 2 * eg * eh
        assert cartesian.edge_count() == g.n * eh + h.n * eg
        assert lex.edge_count() == h.n * h.n * eg + g.n * eh
        assert strong.edge_count() == cartesian.edge_count() + tensor.edge_count()
        for u in range(strong.n):
            assert strong.adj[u] == cartesian.adj[u] | tensor.adj[u]
            assert not cartesian.adj[u] & tensor.adj[u]

    @settings(max_examples=50, deadline=None)
    @given(graphs(min_n=1, max_n=4), graphs(min_n=1, max_n=3))
    def test_cartesian_keeps_orientability(self, g, h):
        assume(is_orientable(g) and is_orientable(h))
        assert is_orientable(product(g, h, ProductKind.CARTESIAN))

    def test_matches_networkx_cartesian(self):
        g, h = cycle(4), path(3)
        ours = product(g, h, ProductKind.CARTESIAN)
        theirs = nx.cartesian_product(nx.cycle_graph(4), nx.path_graph(3))
        assert ours.edge_count() == theirs.number_of_edges()


class TestOddGirth:
    def test_known_values(self):
        assert odd_girth(cycle(5)) == 5
        assert odd_girth(cycle(4)) is None
        assert odd_girth(complete(4)) == 3
        assert odd_girth(Graph.empty(3)) is None
        assert odd_girth(wheel(6)) == 3

    def test_disconnected(self):
        square = [(0, 1), (1, 2), (2, 3), (3, 0)]
        pentagon = [(4, 5), (5, 6), (6, 7), (7, 8), (8, 4)]
        g = Graph.from_edges(9, square + pentagon)
        assert odd_girth(g) == 5

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8))
    def test_bipartite_iff_none(self, g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(e.as_tuple() for e in g.edges())
        assert (odd_girth(g) is None) == nx.is_bipartite(h)


class TestBlowup:
    def test_path_becomes_cycle(self):
        assert odd_girth_blowup(path(4)) == cycle(4)

    def test_cycle5_becomes_complete(self):
        assert odd_girth_blowup(cycle(5)) == complete(5)

    def test_cycle7_circulant(self):
        blown = odd_girth_blowup(cycle(7))
        assert blown == _circulant(7, (1, 3))
        assert blown.edge_count() == 14

    def test_simple_paths_only(self):
        # the walk 0-1-0-1 would join 0 to itself; a triangle gains nothing
        assert odd_girth_blowup(complete(3)) == complete(3)
        assert odd_girth_blowup(path(3)) == path(3)

    @pytest.mark.parametrize("n", [11, 13])
    def test_long_cycles_stay_triangle_free(self, n):
        blown = odd_girth_blowup(cycle(n))
        assert odd_girth(blown) > 3


class TestWords:
    def test_parse(self):
        assert Word.parse("abca").letters == ("a", "b", "c", "a")
        assert Word.parse("x1 x2 x1").letters == ("x1", "x2", "x1")
        assert str(Word.parse("x1 x2")) == "x1 x2"
        with pytest.raises(GraphArgumentError):
            Word.parse("   ")

    def test_known_graphs(self):
        assert alternation_graph(Word.parse("abab")) == complete(2)
        assert alternation_graph(Word.parse("aabb")) == Graph.empty(2)
        assert alternation_graph(Word.parse("abcabc")) == complete(3)

    def test_alphabet_sorted(self):
        word = Word.parse("cab")
        assert word.alphabet == ["a", "b", "c"]
        assert alternation_graph(word) == complete(3)

    def test_restriction(self):
        word = Word.parse("abcba")
        assert word.restrict("a", "c") == ["a", "c", "a"]
        assert word.alternates("a", "c")
        assert not word.alternates("a", "b")

    @settings(max_examples=500, deadline=None)
    @given(words())
    def test_alternation_graphs_orientable(self, text):
        assert is_orientable(alternation_graph(Word.parse(text)))


class TestRecipes:
    def test_three_recipes_reach_w5(self):
        recipes = wheel_recipes()
        assert [r.name for r in recipes] == [
            "delete_from_k6",
            "add_to_empty",
            "contract_subdivided_w5",
        ]
        for recipe in recipes:
            result = apply_recipe(recipe)
            assert result == wheel(5)
            assert canonical_form(result) == canonical_form(wheel(5))
            assert not is_orientable(result)

    def test_subdivided_start(self):
        start = wheel_recipes()[2].start
        assert start.n == 16
        assert start.edge_count() == 20
        assert is_orientable(start)

    def test_edit_counts(self):
        deletion, addition, contraction = wheel_recipes()
        assert len(deletion.ops) == 5
        assert len(addition.ops) == 10
        assert len(contraction.ops) == 10


class TestW5InProducts:
    def test_connected_classes(self):
        classes = connected_graph_classes(4)
        assert [g.n for g in classes] == [1, 2, 3, 3, 4, 4, 4, 4, 4, 4]
        assert all(g.is_connected() for g in classes)

    def test_cartesian_has_no_w5(self):
        assert find_w5_in_product(ProductKind.CARTESIAN, max_order=4) is None

    def test_order_checked(self):
        with pytest.raises(GraphArgumentError):
            find_w5_in_product(ProductKind.TENSOR, max_order=6)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "kind",
        [ProductKind.TENSOR, ProductKind.LEXICOGRAPHIC, ProductKind.STRONG],
    )
    def test_w5_found(self, kind):
        hit = find_w5_in_product(kind)
        assert hit is not None
        assert hit.g.n <= 5 and hit.h.n <= 5
        assert is_orientable(hit.g) and is_orientable(hit.h)
        assert hit.embedding.is_valid(hit.product, wheel(5))
        assert hit.to_dict()["kind"] == kind.value

    @pytest.mark.slow
    def test_parallel_search_is_deterministic(self):
        single = find_w5_in_product(ProductKind.LEXICOGRAPHIC, workers=1)
        pooled = find_w5_in_product(ProductKind.LEXICOGRAPHIC, workers=2)
        assert single == pooled
