"""
Tests for the orientability solver and its brute-force oracle.

Run with:
    pytest tests/test_solver.py -v
"""

import logging  # noqa: E402
import os  # noqa: E402
import sys  # noqa: E402

sys.path.insert(0, os.path.dirname(os.path.dirname(__file__)))  # noqa: E402

import pytest  # noqa: E402
from hypothesis import given, settings  # noqa: E402

from storient.config import SolverConfig
from storient.core.errors import PreconditionError, SearchBudgetExceeded
from storient.graph.canonical import canonical_form, canonical_graph
from storient.graph.generators import complete, complete_bipartite, cycle, wheel
from storient.graph.graph import Graph, graph_from_index, labeled_graph_count
from storient.orientation.predicates import is_transitive
from storient.orientation.shortcut import is_semi_transitive
from storient.solver.oracle import oracle_orientation, orientability_oracle
from storient.solver.solver import (
    StSolver,
    decide,
    find_semi_transitive_orientation,
    find_transitive_orientation,
    is_orientable,
    neighborhood_filter,
)
from storient.solver.verdict import SolveMode, SolveStatus

from strategies import graphs  # noqa: E402


def _config(**overrides) -> SolverConfig:
    values = dict(
        node_budget=10**8,
        filter_min_degree=5,
        census_chunk_size=4096,
        census_workers=1,
    )
    values.update(overrides)
    return SolverConfig(**values)


def _agrees_with_oracle(solver: StSolver, g: Graph) -> bool:
    for mode in SolveMode:
        verdict = solver.decide(g, mode)
        if verdict.orientable != orientability_oracle(g, mode):
            return False
        if verdict.orientation is not None:
            transitive = mode == SolveMode.TRANSITIVE
            check = is_transitive if transitive else is_semi_transitive
            if not check(verdict.orientation):
                return False
    return True


class TestDecide:
    def setup_method(self):
        self.solver = StSolver(_config())

    def test_wheel_is_filtered_at_hub(self):
        verdict = self.solver.decide(wheel(5))
        assert verdict.status == SolveStatus.FILTERED
        assert verdict.vertex == 5
        assert not verdict.orientable
        data = verdict.to_dict()
        assert data["filtered_vertex"] == 5
        assert "digraph" not in data

    def test_wheel_without_filter(self):
        solver = StSolver(_config(filter_min_degree=100))
        verdict = solver.decide(wheel(5))
        assert verdict.status == SolveStatus.NOT_ORIENTABLE
        assert verdict.stats.nodes > 0

    def test_odd_cycle_semi_transitive_not_transitive(self):
        verdict = self.solver.decide(cycle(5))
        assert verdict.orientable
        assert is_semi_transitive(verdict.orientation)
        assert verdict.orientation.base == cycle(5)
        transitive = self.solver.decide(cycle(5), SolveMode.TRANSITIVE)
        assert transitive.status == SolveStatus.NOT_ORIENTABLE

    def test_bipartite_is_comparability(self):
        o = self.solver.find_transitive_orientation(complete_bipartite(3, 3))
        assert o is not None and is_transitive(o)

    def test_even_wheels_orientable_odd_wheels_not(self):
        for k in (3, 4, 6):
            assert self.solver.decide(wheel(k)).orientable
        verdict = self.solver.decide(wheel(7))
        assert verdict.status == SolveStatus.FILTERED
        assert verdict.vertex == 7

    def test_edgeless_and_trivial(self):
        assert self.solver.decide(Graph.empty(0)).orientable
        assert self.solver.decide(Graph.empty(4)).orientation.arcs() == []

    def test_verdict_dict(self):
        data = self.solver.decide(complete(3)).to_dict()
        assert data["status"] == "orientable"
        assert data["mode"] == "semi_transitive"
        assert data["digraph"].startswith("n=3\n")
        assert set(data["stats"]) == {"nodes", "prunings"}

    def test_budget_exceeded(self):
        solver = StSolver(_config(node_budget=1))
        with pytest.raises(SearchBudgetExceeded) as err:
            solver.decide(complete(3))
        assert err.value.stats.nodes == 2
        assert err.value.to_dict()["kind"] == "budget"

    def test_vertex_cap(self):
        with pytest.raises(PreconditionError):
            self.solver.decide(Graph.empty(21))

    def test_debug_summary_logged(self, caplog):
        solver = StSolver(_config(), logger=logging.getLogger("storient.test"))
        with caplog.at_level(logging.DEBUG, logger="storient.test"):
            solver.decide(cycle(4))
        assert "[solver]" in caplog.text


class TestModuleFunctions:
    def test_shortcuts_use_default_solver(self):
        assert not is_orientable(wheel(5))
        assert is_orientable(cycle(6))
        assert neighborhood_filter(wheel(5)) == 5
        assert neighborhood_filter(cycle(5)) is None
        assert find_semi_transitive_orientation(wheel(5)) is None
        assert find_transitive_orientation(cycle(4)) is not None
        verdict = decide(cycle(5), SolveMode.TRANSITIVE)
        assert verdict.status == SolveStatus.NOT_ORIENTABLE


class TestOracle:
    def setup_method(self):
        self.solver = StSolver(_config())

    def test_oracle_rejects_wheel(self):
        assert oracle_orientation(wheel(5)) is None
        assert oracle_orientation(cycle(5), SolveMode.TRANSITIVE) is None

    def test_all_graphs_up_to_four_vertices(self):
        for n in range(5):
            for index in range(labeled_graph_count(n)):
                assert _agrees_with_oracle(self.solver, graph_from_index(n, index))

    def test_five_and_six_vertex_wheels(self):
        assert _agrees_with_oracle(self.solver, wheel(4))
        assert _agrees_with_oracle(self.solver, wheel(5))

    def test_five_vertex_classes(self):
        classes = {
            canonical_graph(graph_from_index(5, i))
            for i in range(labeled_graph_count(5))
        }
        for g in classes:
            assert _agrees_with_oracle(self.solver, g)

    @settings(max_examples=30, deadline=None)
    @given(graphs(min_n=6, max_n=6))
    def test_random_six_vertex_graphs(self, g):
        assert _agrees_with_oracle(self.solver, g)


class TestExhaustiveSweep:
    def setup_method(self):
        self.solver = StSolver(_config())
        self.eager = StSolver(_config(filter_min_degree=0))

    def _failures(self, n: int) -> set:
        failures = set()
        for index in range(labeled_graph_count(n)):
            g = graph_from_index(n, index)
            o = self.solver.find_semi_transitive_orientation(g)
            if o is None:
                assert not orientability_oracle(g)
                failures.add(canonical_form(g))
                continue
            assert o.base == g
            assert is_semi_transitive(o)
            assert self.eager.neighborhood_filter(g) is None
        return failures

    def test_every_graph_up_to_five_vertices(self):
        for n in range(6):
            assert self._failures(n) == set()

    @pytest.mark.slow
    def test_six_vertices_only_wheel_fails(self):
        assert self._failures(6) == {canonical_form(wheel(5))}
