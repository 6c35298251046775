"""
Edge addition that extends a semi-transitive orientation.

The choice depends on the current orientation:

* ``semi_to_comparability`` - the orientation is not transitive.  Join the
  open pair ``u -> v -> w`` with the smallest level distance by ``u -> w``.
* ``to_multipartite`` - the orientation is transitive but the graph is not
  complete multipartite.  ``v`` is taken from the highest level below
  which every higher level is joined to everything outside it, ``u`` is
  its non-neighbour on the lowest level; add ``u -> v``.
* ``to_complete`` - the graph is complete multipartite.  Join the two
  smallest vertices of the first level holding two vertices.

Each choice is checked with the engine.  Should the constructive choice
ever fail the check, every non-adjacent pair is tried in turn and a
warning is logged.
"""

import logging
from typing import Any, Dict, NamedTuple, Optional, Tuple

from storient.core.bitset import bits
from storient.core.errors import PreconditionError
from storient.graph.graph import Graph, is_complete_multipartite
from storient.orientation.orientation import Orientation
from storient.orientation.predicates import (
    GoodPartition,
    is_transitive,
    topological_levels,
)
from storient.orientation.shortcut import is_semi_transitive
from storient.transforms.levels import minimal_open_pair
from storient.transforms.operation_interface import (
    OperationInterface,
    require_semi_transitive,
)
from storient.transforms.trace import (
    AdditionPhase,
    StepKind,
    TransformOp,
    TransformStep,
)


class Addition(NamedTuple):
    arc: Tuple[int, int]
    orientation: Orientation
    phase: AdditionPhase
    certificate: Dict[str, Any]
    fallback: bool


def _joined_level(g: Graph, mask: int) -> bool:
    outside = g.full & ~mask
    return all(not outside & ~g.adj[x] for x in bits(mask))


def _multipartite_pair(
    g: Graph, partition: GoodPartition
) -> Optional[Tuple[int, int, Dict[str, Any]]]:
    level = partition.level_of()
    levels = partition.levels
    upper_joined = True
    for k in range(len(levels) - 1, -1, -1):
        if k < len(levels) - 1:
            upper_joined = upper_joined and _joined_level(g, levels[k + 1])
        if not upper_joined:
            return None
        for v in bits(levels[k]):
            lower = [
                u for u in range(g.n) if level[u] < k and not g.has_edge(u, v)
            ]
            if lower:
                u = min(lower, key=lambda x: (level[x], x))
                return u, v, {"levels": [level[u], k]}
    return None


def _complete_pair(
    partition: GoodPartition,
) -> Optional[Tuple[int, int, Dict[str, Any]]]:
    for z, mask in enumerate(partition.levels):
        if mask.bit_count() >= 2:
            u, v = list(bits(mask))[:2]
            return u, v, {"level": z}
    return None


def _extended(g: Graph, o: Orientation, u: int, v: int) -> Orientation:
    return o.extend(g.with_edges(added=[(u, v)]), [(u, v)])


def find_addable_pair(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> Addition:
    """Unchecked core of :func:`addable_pair`; *g* must not be complete."""
    partition = topological_levels(o)
    if not is_transitive(o):
        phase = AdditionPhase.SEMI_TO_COMPARABILITY
        check = is_semi_transitive
        pair = minimal_open_pair(g, partition.level_of())
        choice = (pair.u, pair.w, pair.certificate()) if pair else None
    elif not is_complete_multipartite(g):
        phase = AdditionPhase.TO_MULTIPARTITE
        check = is_transitive
        choice = _multipartite_pair(g, partition)
    else:
        phase = AdditionPhase.TO_COMPLETE
        check = is_transitive
        choice = _complete_pair(partition)

    if choice is not None:
        u, v, certificate = choice
        extended = _extended(g, o, u, v)
        if check(extended):
            return Addition((u, v), extended, phase, certificate, False)

    if logger:
        logger.warning(
            "[add_edge] constructive %s choice %s failed, trying all pairs",
            phase.value,
            choice[:2] if choice else None,
        )
    for u in range(g.n):
        higher = g.full & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(higher):
            for a, b in ((u, v), (v, u)):
                extended = _extended(g, o, a, b)
                if check(extended):
                    return Addition((a, b), extended, phase, {}, True)
    raise AssertionError(
        f"no addable pair for a semi-transitive orientation ({phase.value})"
    )


def addable_pair(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> Tuple[Tuple[int, int], Orientation, AdditionPhase]:
    """
    Pick a non-adjacent pair and orient the new edge so that *o* extends.

    Returns
    -------
    Tuple[Tuple[int, int], Orientation, AdditionPhase]
        The new arc ``(u, v)`` (oriented ``u -> v``), the extended
        orientation of ``g + uv`` and the phase the choice belongs to.

    Raises
    ------
    PreconditionError
        If *g* is complete or *o* is not a semi-transitive orientation of
        *g*.
    """
    if g.is_complete():
        raise PreconditionError("complete graph has no pair to add")
    require_semi_transitive(g, o)
    found = find_addable_pair(g, o, logger)
    return found.arc, found.orientation, found.phase


class AdditionOperation(OperationInterface):
    """Adds one edge per step until the graph is complete."""

    name = "add_edge"

    def apply(
        self, graph: Graph, orientation: Orientation
    ) -> Optional[TransformStep]:
        if graph.is_complete():
            return None
        found = find_addable_pair(graph, orientation, self._logger)
        op = TransformOp(
            StepKind.ADD_EDGE,
            found.arc,
            phase=found.phase,
            certificate=found.certificate,
            fallback=found.fallback,
        )
        return TransformStep(op, found.orientation.base, found.orientation)
