"""
Tests for orientations, digraph predicates and shortcut detection.

Run with:
    pytest tests/test_orientation_engine.py -v
"""

import os  # noqa: E402
import sys  # noqa: E402

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))  # noqa: E402

import pytest  # noqa: E402
from hypothesis import HealthCheck, assume, given, settings  # noqa: E402

from storient.core.errors import (
    GraphArgumentError,
    PreconditionError,
    UnsupportedSizeError,
)
from storient.graph.canonical import canonical_graph
from storient.graph.generators import complete, cycle, path, wheel
from storient.graph.graph import Graph, graph_from_index, labeled_graph_count
from storient.orientation.orientation import Orientation, empty_orientation
from storient.orientation.predicates import (
    is_acyclic,
    is_transitive,
    topological_levels,
    topological_order,
)
from storient.orientation.shortcut import (
    Shortcut,
    acyclic_orientations,
    find_shortcut,
    is_semi_transitive,
    shortcut_oracle,
)
from storient.solver.solver import find_semi_transitive_orientation

from strategies import graphs  # noqa: E402


def _cyclic_triangle() -> Orientation:
    return Orientation.from_arcs(complete(3), [(0, 1), (1, 2), (2, 0)])


def _same_verdict(o: Orientation) -> bool:
    fast = find_shortcut(o)
    slow = shortcut_oracle(o)
    if fast is not None and not fast.validate(o):
        return False
    if slow is not None and not slow.validate(o):
        return False
    return (fast is None) == (slow is None)


class TestOrientation:
    def setup_method(self):
        self.g = cycle(4)
        self.o = Orientation.from_order(self.g, [0, 1, 2, 3])

    def test_every_edge_needs_a_direction(self):
        with pytest.raises(GraphArgumentError):
            Orientation.from_arcs(self.g, [(0, 1), (1, 2), (2, 3)])

    def test_arc_outside_graph(self):
        with pytest.raises(GraphArgumentError):
            Orientation.from_arcs(path(3), [(0, 1), (1, 2), (0, 2)])

    def test_double_direction(self):
        with pytest.raises(GraphArgumentError):
            Orientation(path(2), (0b10, 0b01))

    def test_sources_and_sinks(self):
        assert self.o.sources() == [0]
        assert self.o.sinks() == [3]
        assert self.o.direction(3, 0) is False

    def test_reverse(self):
        r = self.o.reverse()
        assert r.sources() == [3]
        assert r.reverse() == self.o

    def test_restrict_and_extend(self):
        smaller = self.g.with_edges(removed=[(0, 3)])
        rest = self.o.restrict(smaller)
        assert rest.arcs() == [(0, 1), (1, 2), (2, 3)]
        back = rest.extend(self.g, [(0, 3)])
        assert back == self.o

    def test_extend_to_more_vertices(self):
        bigger = Graph.from_edges(5, [e.as_tuple() for e in self.g.edges()] + [(3, 4)])
        ext = self.o.extend(bigger, [(4, 3)])
        assert ext.has_arc(4, 3)
        assert ext.agrees_with(self.o)

    def test_agrees_with_detects_flip(self):
        flipped = Orientation.from_order(self.g, [1, 0, 2, 3])
        assert not flipped.agrees_with(self.o)

    def test_induced(self):
        sub = self.o.induced([1, 2, 3])
        assert sub.arcs() == [(0, 1), (1, 2)]

    def test_relabel(self):
        moved = self.o.relabel([3, 2, 1, 0])
        assert moved.sources() == [3]

    def test_empty_orientation(self):
        assert empty_orientation(Graph.empty(3)).arcs() == []
        assert empty_orientation(self.g) is None


class TestPredicates:
    def test_cycle_detected(self):
        o = _cyclic_triangle()
        assert not is_acyclic(o)
        assert topological_order(o) is None
        with pytest.raises(PreconditionError):
            topological_levels(o)

    def test_good_partition_of_path(self):
        o = Orientation.from_order(path(3), [0, 1, 2])
        levels = topological_levels(o)
        assert levels.as_lists() == [[0], [1], [2]]
        assert levels.level_of() == [0, 1, 2]

    def test_sources_share_first_level(self):
        o = Orientation.from_arcs(path(3), [(0, 1), (2, 1)])
        assert topological_levels(o).as_lists() == [[0, 2], [1]]

    def test_transitivity(self):
        assert is_transitive(Orientation.from_order(complete(4), [2, 0, 3, 1]))
        assert not is_transitive(Orientation.from_order(path(3), [0, 1, 2]))
        assert is_transitive(Orientation.from_arcs(path(3), [(0, 1), (2, 1)]))


class TestShortcut:
    def test_four_cycle_shortcut(self):
        o = Orientation.from_order(cycle(4), [0, 1, 2, 3])
        found = find_shortcut(o)
        assert found == Shortcut((0, 1, 2, 3), (0, 2))
        assert found.chord == (0, 3)
        assert found.to_dict()["missing"] == [0, 2]
        assert not is_semi_transitive(o)

    def test_alternating_four_cycle_is_semi_transitive(self):
        o = Orientation.from_arcs(cycle(4), [(0, 1), (2, 1), (2, 3), (0, 3)])
        assert find_shortcut(o) is None
        assert is_semi_transitive(o)

    def test_transitive_orientation_has_no_shortcut(self):
        assert find_shortcut(Orientation.from_order(complete(5), range(5))) is None

    def test_certificate_rejects_forgery(self):
        o = Orientation.from_order(cycle(4), [0, 1, 2, 3])
        assert not Shortcut((0, 1, 2), (0, 2)).validate(o)
        assert not Shortcut((0, 1, 2, 3), (0, 1)).validate(o)
        assert not Shortcut((3, 2, 1, 0), (3, 1)).validate(o)

    def test_cyclic_input_rejected(self):
        with pytest.raises(PreconditionError):
            find_shortcut(_cyclic_triangle())
        with pytest.raises(PreconditionError):
            shortcut_oracle(_cyclic_triangle())
        assert not is_semi_transitive(_cyclic_triangle())

    def test_oracle_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            shortcut_oracle(Orientation.from_order(Graph.empty(11), range(11)))

    def test_every_wheel_orientation_has_a_shortcut(self):
        orientations = list(acyclic_orientations(wheel(5)))
        assert len(orientations) == 240
        for o in orientations:
            found = find_shortcut(o)
            assert found is not None and found.validate(o)

    def test_acyclic_orientation_counts(self):
        assert len(list(acyclic_orientations(complete(3)))) == 6
        assert len(list(acyclic_orientations(cycle(4)))) == 14
        assert len(list(acyclic_orientations(complete(4)))) == 24
        assert all(is_acyclic(o) for o in acyclic_orientations(cycle(5)))


class TestShortcutOracleEquivalence:
    def test_exhaustive_up_to_four_vertices(self):
        for n in range(5):
            for index in range(labeled_graph_count(n)):
                for o in acyclic_orientations(graph_from_index(n, index)):
                    assert _same_verdict(o)

    def test_five_vertex_classes(self):
        classes = {
            canonical_graph(graph_from_index(5, i))
            for i in range(labeled_graph_count(5))
        }
        assert len(classes) == 34
        for g in classes:
            for o in acyclic_orientations(g):
                assert _same_verdict(o)

    @pytest.mark.slow
    def test_exhaustive_five_vertex_labeled(self):
        for index in range(labeled_graph_count(5)):
            for o in acyclic_orientations(graph_from_index(5, index)):
                assert _same_verdict(o)

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=6, max_n=6))
    def test_random_six_vertex_graphs(self, g):
        for o in acyclic_orientations(g):
            assert _same_verdict(o)

    @pytest.mark.slow
    @settings(max_examples=500, deadline=None)
    @given(graphs(min_n=6, max_n=6))
    def test_random_six_vertex_graphs_full(self, g):
        for o in acyclic_orientations(g):
            assert _same_verdict(o)


class TestHeredity:
    def test_wheel_rim_keeps_orientation(self):
        o = find_semi_transitive_orientation(wheel(4))
        assert o is not None
        rim = o.induced([0, 1, 2, 3])
        assert rim.base == cycle(4)
        assert is_semi_transitive(rim)

    @settings(
        max_examples=200,
        deadline=None,
        suppress_health_check=[HealthCheck.filter_too_much],
    )
    @given(graphs(max_n=9))
    def test_vertex_deletion_keeps_orientation(self, g):
        o = find_semi_transitive_orientation(g)
        assume(o is not None)
        for v in range(g.n):
            keep = [w for w in range(g.n) if w != v]
            sub = o.induced(keep)
            assert sub.base == g.induced_subgraph(keep)
            assert is_semi_transitive(sub)
