"""
Edge deletion that keeps a semi-transitive orientation semi-transitive.

Take a sink ``x_n`` that has an in-neighbour and a maximal clique ``K``
containing it.  ``K`` induces a transitive tournament with sink ``x_n``;
the edge from its source ``x_1`` to ``x_n`` can be removed without
creating a shortcut.
"""

from typing import Any, Dict, Optional, Tuple

from storient.core.bitset import bits, members
from storient.core.errors import PreconditionError
from storient.graph.graph import Edge, Graph, cliques_containing
from storient.orientation.orientation import Orientation
from storient.transforms.operation_interface import (
    OperationInterface,
    require_semi_transitive,
)
from storient.transforms.trace import StepKind, TransformOp, TransformStep


def find_deletable_edge(
    g: Graph, o: Orientation
) -> Tuple[Edge, Orientation, Dict[str, Any]]:
    """Choice of :func:`deletable_edge` plus its certificate."""
    sink = min(v for v in o.sinks() if o.in_mask(v))
    clique = 1 << sink
    for v in bits(g.adj[sink]):
        if all(g.has_edge(v, k) for k in bits(clique)):
            clique |= 1 << v
    source = next(v for v in bits(clique) if not o.in_mask(v) & clique)
    edge = Edge.of(source, sink)
    rest = o.restrict(g.with_edges(removed=[edge.as_tuple()]))
    certificate = {"source": source, "sink": sink, "clique": members(clique)}
    return edge, rest, certificate


def deletable_edge(g: Graph, o: Orientation) -> Tuple[Edge, Orientation]:
    """
    Pick an edge whose deletion keeps *o* semi-transitive.

    The sink is the smallest sink with in-degree at least one, the clique
    is grown greedily from it by ascending vertex index.

    Returns
    -------
    Tuple[Edge, Orientation]
        The edge ``x_1 x_n`` and *o* restricted to ``g`` minus that edge.

    Raises
    ------
    PreconditionError
        If *g* has no edges or *o* is not a semi-transitive orientation of
        *g*.
    """
    if not g.edge_count():
        raise PreconditionError("edgeless graph has no edge to delete")
    require_semi_transitive(g, o)
    edge, rest, _ = find_deletable_edge(g, o)
    return edge, rest


def safe_delete_k4free(g: Graph, o: Orientation, e: Edge) -> Orientation:
    """
    Delete an edge that lies in no 4-clique; *o* restricted to ``g - e``
    stays semi-transitive.

    Raises
    ------
    PreconditionError
        If *e* is not an edge, lies in a 4-clique (named in the message),
        or *o* is not semi-transitive.
    """
    if not g.has_edge(e.u, e.v):
        raise PreconditionError(f"{e.u}-{e.v} is not an edge")
    require_semi_transitive(g, o)
    for clique in cliques_containing(g, 1 << e.u | 1 << e.v):
        if clique.bit_count() >= 4:
            extra = [v for v in bits(clique) if v not in (e.u, e.v)][:2]
            k4 = sorted([e.u, e.v] + extra)
            raise PreconditionError(f"edge {e.u}-{e.v} lies in the 4-clique {k4}")
    return o.restrict(g.with_edges(removed=[e.as_tuple()]))


class DeletionOperation(OperationInterface):
    """Deletes one edge per step until the graph is edgeless."""

    name = "delete_edge"

    def apply(
        self, graph: Graph, orientation: Orientation
    ) -> Optional[TransformStep]:
        if not graph.edge_count():
            return None
        edge, rest, certificate = find_deletable_edge(graph, orientation)
        if self._logger:
            self._logger.debug("[delete_edge] removing %d-%d", edge.u, edge.v)
        op = TransformOp(
            StepKind.DELETE_EDGE, edge.as_tuple(), certificate=certificate
        )
        return TransformStep(op, rest.base, rest)
