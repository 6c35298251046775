"""
Tests for graphs, bitsets, generators and graph edits.

Run with:
    pytest tests/test_graph_core.py -v
"""

import os  # noqa: E402
import sys  # noqa: E402

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))  # noqa: E402

import pytest  # noqa: E402

from storient.core.bitset import bits, from_members, full_mask, lowest, members
from storient.core.errors import GraphArgumentError, UnsupportedSizeError
from storient.graph.edits import (
    EditOp,
    add_edge,
    apply_edits,
    contract_edge,
    delete_edge,
    delete_vertex,
    edit,
    lift_path,
    subdivide_edge,
)
from storient.graph.generators import (
    GraphFamily,
    complete,
    cycle,
    diamond,
    generate,
    path,
    wheel,
)
from storient.graph.graph import (
    Edge,
    Graph,
    cliques_containing,
    graph_from_index,
    is_complete_multipartite,
    labeled_graph_count,
)


class TestBitset:
    def test_members_ascending(self):
        assert members(0b101001) == [0, 3, 5]
        assert list(bits(0)) == []

    def test_from_members_inverse(self):
        assert from_members([5, 0, 3]) == 0b101001

    def test_lowest_and_full(self):
        assert lowest(0b10100) == 2
        assert full_mask(4) == 0b1111


class TestGraph:
    def test_from_edges_symmetric(self):
        g = Graph.from_edges(3, [(0, 1), (2, 1)])
        assert g.has_edge(1, 0)
        assert g.has_edge(1, 2)
        assert not g.has_edge(0, 2)
        assert g.degrees() == [1, 2, 1]

    def test_loops_and_range_rejected(self):
        with pytest.raises(GraphArgumentError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(GraphArgumentError):
            Graph.from_edges(3, [(0, 3)])

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            Graph.empty(63)

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphArgumentError):
            Graph(2, (0b10, 0))

    def test_edges_sorted(self):
        g = Graph.from_edges(4, [(2, 3), (0, 3), (0, 1)])
        assert [e.as_tuple() for e in g.edges()] == [(0, 1), (0, 3), (2, 3)]

    def test_edge_normalisation(self):
        assert Edge.of(4, 1) == Edge(1, 4)
        with pytest.raises(GraphArgumentError):
            Edge(3, 1)
        with pytest.raises(GraphArgumentError):
            Edge.of(2, 2)

    def test_connectivity(self):
        assert cycle(5).is_connected()
        two = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not two.is_connected()
        assert len(two.components()) == 2

    def test_complement_of_cycle5_is_cycle5(self):
        c = cycle(5).complement()
        assert c.edge_count() == 5
        assert all(d == 2 for d in c.degrees())

    def test_relabel_moves_edges(self):
        g = Graph.from_edges(3, [(0, 1)])
        assert g.relabel([2, 0, 1]).has_edge(2, 0)

    def test_induced_subgraph(self):
        sub = wheel(5).induced_subgraph([0, 1, 2, 5])
        assert sub.edge_count() == 5

    def test_with_edges(self):
        g = path(3).with_edges(added=[(0, 2)], removed=[(0, 1)])
        assert sorted(e.as_tuple() for e in g.edges()) == [(0, 2), (1, 2)]

    def test_graph_from_index_column_order(self):
        assert graph_from_index(3, 0b001).has_edge(0, 1)
        assert graph_from_index(3, 0b010).has_edge(0, 2)
        assert graph_from_index(3, 0b100).has_edge(1, 2)
        assert labeled_graph_count(4) == 64

    def test_complete_multipartite(self):
        assert is_complete_multipartite(complete(4))
        assert is_complete_multipartite(cycle(4))
        assert not is_complete_multipartite(path(4))
        assert is_complete_multipartite(Graph.empty(3))

    def test_cliques_containing_edge(self):
        cliques = cliques_containing(diamond(), 0b101)
        found = {tuple(members(c)) for c in cliques}
        assert found == {(0, 2), (0, 1, 2), (0, 2, 3)}
        assert cliques_containing(diamond(), 0b1010) == []


class TestGenerators:
    def test_wheel_hub_last(self):
        w = wheel(5)
        assert w.n == 6
        assert w.degree(5) == 5
        assert w.edge_count() == 10

    def test_diamond_is_k4_minus_edge(self):
        d = diamond()
        assert d.edge_count() == 5
        assert not d.has_edge(1, 3)

    def test_generate_by_name(self):
        assert generate("complete_bipartite", 2, 3).edge_count() == 6
        assert generate(GraphFamily.STAR, 4).degree(0) == 4

    def test_generate_bad_parameters(self):
        with pytest.raises(GraphArgumentError):
            generate("wheel", 2)
        with pytest.raises(GraphArgumentError):
            generate("wheel")
        with pytest.raises(GraphArgumentError):
            generate("petersen")


class TestEdits:
    def setup_method(self):
        self.g = cycle(4)

    def test_delete_vertex_shifts_indices(self):
        g = delete_vertex(path(4), 1)
        assert g.n == 3
        assert [e.as_tuple() for e in g.edges()] == [(1, 2)]

    def test_delete_missing_edge(self):
        with pytest.raises(GraphArgumentError):
            delete_edge(self.g, Edge(0, 2))

    def test_add_existing_edge(self):
        with pytest.raises(GraphArgumentError):
            add_edge(self.g, 0, 1)

    def test_subdivide_appends_chain(self):
        g = subdivide_edge(self.g, Edge(0, 1), 2)
        assert g.n == 6
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 4) and g.has_edge(4, 5) and g.has_edge(5, 1)

    def test_subdivide_count_checked(self):
        with pytest.raises(GraphArgumentError):
            subdivide_edge(self.g, Edge(0, 1), 0)

    def test_lift_path_adds_missing_edge(self):
        g = lift_path(path(3), 0, 1, 2)
        assert [e.as_tuple() for e in g.edges()] == [(0, 2)]

    def test_lift_path_keeps_existing_edge(self):
        g = lift_path(complete(3), 0, 1, 2)
        assert [e.as_tuple() for e in g.edges()] == [(0, 2)]

    def test_contract_keeps_lower_index(self):
        g = contract_edge(complete(3), Edge(1, 2))
        assert g.n == 2
        assert g.edge_count() == 1

    def test_contract_cycle(self):
        g = contract_edge(cycle(5), Edge(0, 1))
        assert g.n == 4
        assert all(d == 2 for d in g.degrees())

    def test_edit_dispatch(self):
        ops = (EditOp.add_edge(0, 2), EditOp.delete_edge(1, 2))
        g = apply_edits(self.g, ops)
        assert g.has_edge(0, 2)
        assert not g.has_edge(1, 2)

    def test_edit_operand_count(self):
        with pytest.raises(GraphArgumentError):
            edit(self.g, EditOp(EditOp.lift_path(0, 1, 2).kind, (0, 1)))
