"""
Orientability decisions.

:class:`StSolver` combines the neighbourhood prefilter with the
backtracking search of :mod:`storient.solver.search`.  A vertex whose
neighbourhood does not induce a comparability graph certifies that the
whole graph has no semi-transitive orientation, so the filter can answer
without searching.

The module level functions use a solver built from the packaged
configuration (``STORIENT_*`` environment overrides included), read once
per process.
"""

import functools
import logging
from typing import Optional

from storient.config import SolverConfig, load_config
from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.solver.search import OrientationSearch
from storient.solver.verdict import (
    SearchStats,
    SolveMode,
    SolveStatus,
    SolveVerdict,
)


class StSolver:
    """
    Stateless orientability solver.

    Parameters
    ----------
    config : SolverConfig, optional
        Node budget and prefilter settings; the packaged defaults with
        environment overrides when omitted.
    logger : logging.Logger, optional
        Passed on to every search.
    """

    def __init__(
        self,
        config: Optional[SolverConfig] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._config = config or load_config(logger)
        self._logger = logger

    @property
    def config(self) -> SolverConfig:
        return self._config

    def _search(
        self, g: Graph, mode: SolveMode, stats: Optional[SearchStats] = None
    ) -> Optional[Orientation]:
        search = OrientationSearch(g, mode, self._config.node_budget, self._logger)
        try:
            return search.run()
        finally:
            if stats is not None:
                stats.add(search.stats)

    def neighborhood_filter(
        self, g: Graph, stats: Optional[SearchStats] = None
    ) -> Optional[int]:
        """
        Smallest vertex whose neighbourhood is not a comparability graph.

        Vertices of degree below ``filter_min_degree`` are skipped: every
        graph on at most four vertices has a transitive orientation.
        """
        for v in range(g.n):
            if g.degree(v) < self._config.filter_min_degree:
                continue
            hood = g.induced_subgraph(g.neighbors(v))
            if self._search(hood, SolveMode.TRANSITIVE, stats) is None:
                return v
        return None

    def find_semi_transitive_orientation(self, g: Graph) -> Optional[Orientation]:
        return self._search(g, SolveMode.SEMI_TRANSITIVE)

    def find_transitive_orientation(self, g: Graph) -> Optional[Orientation]:
        return self._search(g, SolveMode.TRANSITIVE)

    def decide(
        self, g: Graph, mode: SolveMode = SolveMode.SEMI_TRANSITIVE
    ) -> SolveVerdict:
        """
        Decide whether *g* has an orientation of the requested kind.

        In semi-transitive mode the neighbourhood prefilter runs first and
        a hit is reported as ``filtered`` with the offending vertex.

        Raises
        ------
        SearchBudgetExceeded
            When one of the searches exhausts the node budget.
        PreconditionError
            When *g* has more than 20 vertices.
        """
        mode = SolveMode(mode)
        stats = SearchStats()
        if mode == SolveMode.SEMI_TRANSITIVE:
            vertex = self.neighborhood_filter(g, stats)
            if vertex is not None:
                return SolveVerdict(
                    SolveStatus.FILTERED, mode, vertex=vertex, stats=stats
                )
        found = self._search(g, mode, stats)
        if found is None:
            return SolveVerdict(SolveStatus.NOT_ORIENTABLE, mode, stats=stats)
        return SolveVerdict(
            SolveStatus.ORIENTABLE, mode, orientation=found, stats=stats
        )


@functools.lru_cache(maxsize=1)
def default_solver() -> StSolver:
    return StSolver()


def neighborhood_filter(g: Graph) -> Optional[int]:
    return default_solver().neighborhood_filter(g)


def find_semi_transitive_orientation(g: Graph) -> Optional[Orientation]:
    return default_solver().find_semi_transitive_orientation(g)


def find_transitive_orientation(g: Graph) -> Optional[Orientation]:
    return default_solver().find_transitive_orientation(g)


def decide(g: Graph, mode: SolveMode = SolveMode.SEMI_TRANSITIVE) -> SolveVerdict:
    return default_solver().decide(g, mode)


def is_orientable(g: Graph) -> bool:
    """True iff *g* has a semi-transitive orientation."""
    return decide(g).orientable
