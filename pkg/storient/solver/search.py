"""
Backtracking search for semi-transitive and transitive orientations.

The search builds an acyclic orientation by placing vertices one at a time in
a topological order: placing ``w`` orients every edge between ``w`` and the
already placed vertices into ``w``.  The placed prefix is thus always fully
oriented, and after each placement only structures ending in ``w`` can be
new:

* semi-transitive mode rejects ``w`` if some shortcut ends in ``w`` (its
  chord is then an arc ``p -> w``),
* transitive mode rejects ``w`` if some in-neighbour ``p`` of ``w`` has an
  in-neighbour that is not an in-neighbour of ``w``.

Every acyclic orientation has exactly one lexicographically least
topological order; the search only builds that order, so no orientation is
visited twice.  Reversing every arc preserves both properties, so the
direction of the first edge is fixed.  Vertices are ranked by descending
degree before the search so that constrained vertices come first.
"""

import logging
from typing import List, Optional

from storient.core.bitset import bits
from storient.core.errors import PreconditionError, SearchBudgetExceeded
from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.orientation.predicates import is_transitive
from storient.orientation.shortcut import is_semi_transitive, shortcut_path
from storient.solver.verdict import SearchStats, SolveMode

MAX_SEARCH_VERTICES = 20


class OrientationSearch:
    """
    One search over the acyclic orientations of a graph.

    Parameters
    ----------
    graph : Graph
        Graph to orient, at most 20 vertices.
    mode : SolveMode
        Which property the orientation must have.
    node_budget : int
        Maximum number of placement attempts before
        :class:`~storient.core.errors.SearchBudgetExceeded` is raised.
    logger : logging.Logger, optional
        Receives a summary of every finished search at DEBUG level.
    """

    def __init__(
        self,
        graph: Graph,
        mode: SolveMode,
        node_budget: int,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        if graph.n > MAX_SEARCH_VERTICES:
            raise PreconditionError(
                f"orientation search is limited to {MAX_SEARCH_VERTICES} vertices, "
                f"got {graph.n}"
            )
        self._graph = graph
        self._mode = SolveMode(mode)
        self._node_budget = node_budget
        self._logger = logger
        self.stats = SearchStats()

        degrees = graph.degrees()
        ranked = sorted(range(graph.n), key=lambda v: (-degrees[v], v))
        self._original = ranked
        perm = [0] * graph.n
        for rank, v in enumerate(ranked):
            perm[v] = rank
        self._h = graph.relabel(perm)

    def run(self) -> Optional[Orientation]:
        """
        Returns
        -------
        Orientation or None
            An orientation of the input graph with the requested property,
            or ``None`` when none exists.

        Raises
        ------
        SearchBudgetExceeded
            When the node budget runs out; carries the partial statistics.
        """
        h = self._h
        n = h.n
        edges = h.edges()
        first = edges[0].as_tuple() if edges else None

        out = [0] * n
        anc = [0] * n
        order: List[int] = []

        def accept(w: int, preds: int, placed: int) -> bool:
            if self._mode == SolveMode.TRANSITIVE:
                for p in bits(preds):
                    if h.adj[p] & placed & ~out[p] & ~preds:
                        return False
                return True
            for p in bits(preds):
                if shortcut_path(out, h.adj, p, w, anc[w]) is not None:
                    return False
            return True

        def canonical(w: int, preds: int) -> bool:
            last = -1
            for i, v in enumerate(order):
                if preds >> v & 1:
                    last = i
            return all(v < w for v in order[last + 1:])

        def place(placed: int) -> bool:
            if len(order) == n:
                return True
            for w in range(n):
                if placed >> w & 1:
                    continue
                if first and w == first[1] and not placed >> first[0] & 1:
                    continue
                preds = h.adj[w] & placed
                if not canonical(w, preds):
                    continue
                self.stats.nodes += 1
                if self.stats.nodes > self._node_budget:
                    raise SearchBudgetExceeded(
                        f"node budget {self._node_budget} exhausted on "
                        f"{n}-vertex graph",
                        self.stats,
                    )
                for p in bits(preds):
                    out[p] |= 1 << w
                    anc[w] |= anc[p] | 1 << p
                if accept(w, preds, placed):
                    order.append(w)
                    if place(placed | 1 << w):
                        return True
                    order.pop()
                else:
                    self.stats.prunings += 1
                for p in bits(preds):
                    out[p] &= ~(1 << w)
                anc[w] = 0
            return False

        found = place(0)
        if self._logger:
            self._logger.debug(
                "[solver] %s search on n=%d: found=%s nodes=%d prunings=%d",
                self._mode.value,
                n,
                found,
                self.stats.nodes,
                self.stats.prunings,
            )
        if not found:
            return None

        result = Orientation.from_order(
            self._graph, [self._original[v] for v in order]
        )
        if self._mode == SolveMode.TRANSITIVE:
            check = is_transitive
        else:
            check = is_semi_transitive
        assert check(result), "search result fails its own check"
        return result
