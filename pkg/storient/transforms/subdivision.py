"""
Orientation of a subdivided edge from an orientation of the graph without
the edge.

Subdividing ``xy`` (``x < y``) ``t`` times appends ``p_1 .. p_t`` on the
path from ``x`` to ``y``.  The path is oriented by the first of these
strategies that the engine accepts:

* ``A`` - ``x <- p_1 -> p_2 -> ... -> p_t -> y``,
* ``B`` - ``x <- p_1 <- ... <- p_t <- y``,
* ``C`` - ``x -> p_1 -> y`` (``t = 1`` only).
"""

from typing import List, Tuple

from storient.graph.edits import subdivide_edge
from storient.graph.graph import Edge, Graph
from storient.orientation.orientation import Orientation
from storient.orientation.shortcut import is_semi_transitive
from storient.transforms.deletion import safe_delete_k4free
from storient.transforms.operation_interface import require_semi_transitive
from storient.transforms.trace import (
    StepKind,
    TransformOp,
    TransformStep,
    TransformTrace,
)


def _strategies(x: int, y: int, chain: List[int]) -> List[Tuple[str, list]]:
    t = len(chain)
    forward = list(zip(chain, chain[1:]))
    backward = [(b, a) for a, b in forward]
    result = [
        ("A", [(chain[0], x)] + forward + [(chain[-1], y)]),
        ("B", [(chain[0], x)] + backward + [(y, chain[-1])]),
    ]
    if t == 1:
        result.append(("C", [(x, chain[0]), (chain[0], y)]))
    return result


def subdivision_step(
    g: Graph, e: Edge, o: Orientation, t: int = 1
) -> TransformStep:
    """
    Subdivide *e* and orient the new path; see :func:`extend_to_subdivision`.

    The step's certificate names the strategy that succeeded.
    """
    target = subdivide_edge(g, e, t)
    require_semi_transitive(g.with_edges(removed=[e.as_tuple()]), o)
    chain = list(range(g.n, g.n + t))
    for strategy, arcs in _strategies(e.u, e.v, chain):
        candidate = o.extend(target, arcs)
        if is_semi_transitive(candidate):
            op = TransformOp(
                StepKind.SUBDIVIDE_EDGE,
                e.as_tuple(),
                count=t,
                certificate={"strategy": strategy},
            )
            return TransformStep(op, target, candidate)
    raise AssertionError(
        f"no subdivision strategy extends the orientation along {e.u}-{e.v}"
    )


def extend_to_subdivision(
    g: Graph, e: Edge, o: Orientation, t: int = 1
) -> Orientation:
    """
    Extend a semi-transitive orientation of ``g - e`` to ``g`` with *e*
    subdivided *t* times.

    Parameters
    ----------
    g : Graph
        Graph containing the edge *e*.
    e : Edge
        Edge to subdivide.
    o : Orientation
        Semi-transitive orientation of ``g - e``.
    t : int
        Number of new vertices, at least 1.

    Returns
    -------
    Orientation
        Semi-transitive orientation of the subdivided graph that restricts
        to *o* on ``g - e``.

    Raises
    ------
    PreconditionError
        If *o* is not a semi-transitive orientation of ``g - e``.
    GraphArgumentError
        If *e* is not an edge of *g* or ``t < 1``.
    """
    return subdivision_step(g, e, o, t).orientation


def subdivision_trace(
    g: Graph, e: Edge, o: Orientation, t: int = 1
) -> TransformTrace:
    """One-step trace from ``(g - e, o)`` to the subdivided graph."""
    step = subdivision_step(g, e, o, t)
    trace = TransformTrace.start(o.base, o)
    trace.append(step)
    return trace


def safe_subdivide_k4free(
    g: Graph, o: Orientation, e: Edge, t: int = 1
) -> Orientation:
    """
    Subdivide an edge that lies in no 4-clique, starting from a
    semi-transitive orientation *o* of *g* itself.

    *o* restricted to ``g - e`` stays semi-transitive (see
    :func:`~storient.transforms.deletion.safe_delete_k4free`) and is then
    extended along the new path.

    Raises
    ------
    PreconditionError
        If *e* is not an edge, lies in a 4-clique, or *o* is not a
        semi-transitive orientation of *g*.
    """
    rest = safe_delete_k4free(g, o, e)
    return extend_to_subdivision(g, e, rest, t)
