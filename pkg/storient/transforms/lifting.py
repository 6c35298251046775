"""
Lifting a path ``u v w``: remove ``uv`` and ``vw``, add ``uw`` unless it is
already present, and keep every surviving arc of the orientation.

With three or more good-partition levels the open pair with the smallest
level distance is lifted and ``uw`` is oriented ``u -> w``.  With exactly
two levels every arc runs from the first level to the second, so lifting
any path keeps the orientation semi-transitive; the smallest centre of
degree two and its two smallest neighbours are used, oriented low to high.

When neither rule applies (three or more levels but a transitive
orientation, e.g. a complete graph) all paths are tried in order, centres
first, and each lifted orientation is checked with the engine.
"""

import logging
from itertools import combinations
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from storient.core.bitset import bits
from storient.core.errors import PreconditionError
from storient.graph.edits import lift_path
from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.orientation.predicates import topological_levels
from storient.orientation.shortcut import is_semi_transitive
from storient.transforms.levels import minimal_open_pair
from storient.transforms.operation_interface import (
    OperationInterface,
    require_semi_transitive,
)
from storient.transforms.trace import StepKind, TransformOp, TransformStep


class Lift(NamedTuple):
    path: Tuple[int, int, int]
    orientation: Orientation
    certificate: Dict[str, Any]
    fallback: bool


def _lifted(
    g: Graph,
    o: Orientation,
    u: int,
    v: int,
    w: int,
    arc: Optional[Tuple[int, int]] = None,
) -> Orientation:
    lifted = lift_path(g, u, v, w)
    return o.extend(lifted, [arc] if arc else [])


def _fallback_lift(g: Graph, o: Orientation) -> Optional[Lift]:
    for v in range(g.n):
        for u, w in combinations(bits(g.adj[v]), 2):
            candidates: List[Optional[Tuple[int, int]]]
            if g.has_edge(u, w):
                candidates = [None]
            else:
                candidates = [(u, w), (w, u)]
            for arc in candidates:
                lifted = _lifted(g, o, u, v, w, arc)
                if is_semi_transitive(lifted):
                    return Lift((u, v, w), lifted, {}, True)
    return None


def find_liftable_path(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> Lift:
    """Unchecked core of :func:`liftable_path`; *g* needs a vertex of degree 2."""
    partition = topological_levels(o)
    if len(partition) >= 3:
        pair = minimal_open_pair(g, partition.level_of())
        if pair is not None:
            lifted = _lifted(g, o, pair.u, pair.v, pair.w, (pair.u, pair.w))
            if is_semi_transitive(lifted):
                path = (pair.u, pair.v, pair.w)
                return Lift(path, lifted, pair.certificate(), False)
    elif len(partition) == 2:
        v = next(x for x in range(g.n) if g.degree(x) >= 2)
        u, w = list(bits(g.adj[v]))[:2]
        lifted = _lifted(g, o, u, v, w, (u, w))
        if is_semi_transitive(lifted):
            return Lift((u, v, w), lifted, {"levels": 2}, False)

    if logger:
        logger.warning(
            "[lift_path] no constructive lift for %d levels, trying all paths",
            len(partition),
        )
    found = _fallback_lift(g, o)
    if found is None:
        raise AssertionError("no liftable path for a semi-transitive orientation")
    return found


def liftable_path(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> Tuple[Tuple[int, int, int], Orientation]:
    """
    Pick a path ``u v w`` whose lift keeps *o* semi-transitive.

    Returns
    -------
    Tuple[Tuple[int, int, int], Orientation]
        The lifted path and the orientation of the lifted graph; it agrees
        with *o* on every surviving edge.

    Raises
    ------
    PreconditionError
        If the maximum degree of *g* is below 2 or *o* is not a
        semi-transitive orientation of *g*.
    """
    if g.max_degree() < 2:
        raise PreconditionError("lifting needs a vertex of degree at least 2")
    require_semi_transitive(g, o)
    found = find_liftable_path(g, o, logger)
    return found.path, found.orientation


class LiftingOperation(OperationInterface):
    """Lifts one path per step until every vertex has degree at most one."""

    name = "lift_path"

    def apply(
        self, graph: Graph, orientation: Orientation
    ) -> Optional[TransformStep]:
        if graph.max_degree() < 2:
            return None
        found = find_liftable_path(graph, orientation, self._logger)
        op = TransformOp(
            StepKind.LIFT_PATH,
            found.path,
            certificate=found.certificate,
            fallback=found.fallback,
        )
        return TransformStep(op, found.orientation.base, found.orientation)
