"""
Pure graph edits.

Every edit returns a new :class:`~storient.graph.graph.Graph`.  Index
conventions:

* deleting a vertex shifts every larger index down by one,
* subdividing ``xy`` (``x < y``) ``t`` times appends vertices
  ``n .. n+t-1`` along the path from ``x`` to ``y``,
* contracting ``xy`` keeps the lower index ``x`` and deletes ``y``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from storient.core.errors import GraphArgumentError
from storient.graph.graph import MAX_VERTICES, Edge, Graph


class EditKind(str, Enum):
    DELETE_VERTEX = "delete_vertex"
    DELETE_EDGE = "delete_edge"
    ADD_EDGE = "add_edge"
    SUBDIVIDE_EDGE = "subdivide_edge"
    LIFT_PATH = "lift_path"
    CONTRACT_EDGE = "contract_edge"


@dataclass(frozen=True)
class EditOp:
    """
    A single edit.  ``vertices`` holds the vertex for ``delete_vertex``,
    the edge or pair for the edge edits and ``(u, v, w)`` for
    ``lift_path``; ``count`` is the subdivision count ``t``.
    """

    kind: EditKind
    vertices: Tuple[int, ...]
    count: int = 0

    @classmethod
    def delete_vertex(cls, v: int) -> "EditOp":
        return cls(EditKind.DELETE_VERTEX, (v,))

    @classmethod
    def delete_edge(cls, u: int, v: int) -> "EditOp":
        return cls(EditKind.DELETE_EDGE, (u, v))

    @classmethod
    def add_edge(cls, u: int, v: int) -> "EditOp":
        return cls(EditKind.ADD_EDGE, (u, v))

    @classmethod
    def subdivide_edge(cls, u: int, v: int, t: int = 1) -> "EditOp":
        return cls(EditKind.SUBDIVIDE_EDGE, (u, v), t)

    @classmethod
    def lift_path(cls, u: int, v: int, w: int) -> "EditOp":
        return cls(EditKind.LIFT_PATH, (u, v, w))

    @classmethod
    def contract_edge(cls, u: int, v: int) -> "EditOp":
        return cls(EditKind.CONTRACT_EDGE, (u, v))


def _require_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphArgumentError(f"vertex {v} not in graph on {g.n} vertices")


def _require_edge(g: Graph, e: Edge) -> None:
    _require_vertex(g, e.u)
    _require_vertex(g, e.v)
    if not g.has_edge(e.u, e.v):
        raise GraphArgumentError(f"edge {e.u}-{e.v} not in graph")


def delete_vertex(g: Graph, v: int) -> Graph:
    _require_vertex(g, v)
    return g.induced_subgraph([w for w in range(g.n) if w != v])


def delete_edge(g: Graph, e: Edge) -> Graph:
    _require_edge(g, e)
    return g.with_edges(removed=[e.as_tuple()])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _require_vertex(g, u)
    _require_vertex(g, v)
    if u == v:
        raise GraphArgumentError(f"cannot add loop at {u}")
    if g.has_edge(u, v):
        raise GraphArgumentError(f"edge {u}-{v} already present")
    return g.with_edges(added=[(u, v)])


def subdivide_edge(g: Graph, e: Edge, t: int = 1) -> Graph:
    """Replace ``e = xy`` by the path ``x, n, n+1, ..., n+t-1, y``."""
    _require_edge(g, e)
    if t < 1:
        raise GraphArgumentError(f"subdivision count must be >= 1, got {t}")
    if g.n + t > MAX_VERTICES:
        raise GraphArgumentError(f"subdivision exceeds {MAX_VERTICES} vertices")
    n = g.n
    chain = [e.u] + list(range(n, n + t)) + [e.v]
    edges = [x.as_tuple() for x in g.edges() if x != e]
    edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n + t, edges)


def lift_path(g: Graph, u: int, v: int, w: int) -> Graph:
    """Remove ``uv`` and ``vw`` and add ``uw`` if it is not already there."""
    if u == w:
        raise GraphArgumentError("lifted path needs distinct endpoints")
    _require_edge(g, Edge.of(u, v))
    _require_edge(g, Edge.of(v, w))
    return g.with_edges(added=[(u, w)], removed=[(u, v), (v, w)])


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Merge ``e.v`` into ``e.u``; parallel edges and the loop disappear."""
    _require_edge(g, e)
    x, y = e.u, e.v
    rows = list(g.adj)
    merged = (rows[x] | rows[y]) & ~(1 << x) & ~(1 << y)
    for w in range(g.n):
        if merged >> w & 1:
            rows[w] |= 1 << x
    rows[x] = merged
    return delete_vertex(Graph(g.n, tuple(rows)), y)


_OPERAND_COUNT = {EditKind.DELETE_VERTEX: 1, EditKind.LIFT_PATH: 3}


def edit(g: Graph, op: EditOp) -> Graph:
    """
    Apply *op* to *g*.

    Raises
    ------
    GraphArgumentError
        On a missing vertex or edge, adding an existing edge, a bad
        subdivision count or malformed operands.
    """
    vs = op.vertices
    expected = _OPERAND_COUNT.get(op.kind, 2)
    if len(vs) != expected:
        raise GraphArgumentError(
            f"{op.kind.value} takes {expected} vertices, got {vs}"
        )
    if op.kind == EditKind.DELETE_VERTEX:
        return delete_vertex(g, vs[0])
    if op.kind == EditKind.ADD_EDGE:
        return add_edge(g, vs[0], vs[1])
    if op.kind == EditKind.LIFT_PATH:
        return lift_path(g, vs[0], vs[1], vs[2])
    e = Edge.of(vs[0], vs[1])
    if op.kind == EditKind.DELETE_EDGE:
        return delete_edge(g, e)
    if op.kind == EditKind.SUBDIVIDE_EDGE:
        return subdivide_edge(g, e, op.count)
    return contract_edge(g, e)


def apply_edits(g: Graph, ops: Optional[Tuple[EditOp, ...]]) -> Graph:
    for op in ops or ():
        g = edit(g, op)
    return g
