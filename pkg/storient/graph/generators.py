"""
Named graph families with a fixed vertex numbering.

* ``path(n)``   – vertices ``0 .. n-1`` in path order,
* ``cycle(n)``  – ``0 - 1 - ... - (n-1) - 0``,
* ``complete_bipartite(a, b)`` – parts ``0 .. a-1`` and ``a .. a+b-1``,
* ``wheel(k)``  – rim cycle ``0 .. k-1``, hub ``k`` (the last index),
* ``diamond()`` – ``K4`` on ``0 .. 3`` minus the edge ``1-3``,
* ``star(k)``   – centre ``0`` joined to leaves ``1 .. k``.
"""

from enum import Enum
from itertools import combinations
from typing import Any

from storient.core.errors import GraphArgumentError
from storient.graph.graph import MAX_VERTICES, Graph


class GraphFamily(str, Enum):
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    WHEEL = "wheel"
    DIAMOND = "diamond"
    STAR = "star"


def _check_order(name: str, value: Any, low: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise GraphArgumentError(f"{name} must be an integer, got {value!r}")
    if value < low:
        raise GraphArgumentError(f"{name} must be >= {low}, got {value}")
    return value


def _check_total(n: int) -> None:
    if n > MAX_VERTICES:
        raise GraphArgumentError(f"family needs {n} vertices, limit {MAX_VERTICES}")


def empty(n: int) -> Graph:
    _check_total(_check_order("n", n, 0))
    return Graph.empty(n)


def path(n: int) -> Graph:
    _check_total(_check_order("n", n, 1))
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _check_total(_check_order("n", n, 3))
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    _check_total(_check_order("n", n, 0))
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    _check_order("a", a, 1)
    _check_order("b", b, 1)
    _check_total(a + b)
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def wheel(k: int) -> Graph:
    """Wheel ``W_k``: a ``k``-cycle plus a hub, ``k + 1`` vertices."""
    _check_order("k", k, 3)
    _check_total(k + 1)
    rim = [(i, (i + 1) % k) for i in range(k)]
    spokes = [(i, k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + spokes)


def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])


def star(k: int) -> Graph:
    _check_order("k", k, 1)
    _check_total(k + 1)
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


_BUILDERS = {
    GraphFamily.EMPTY: empty,
    GraphFamily.PATH: path,
    GraphFamily.CYCLE: cycle,
    GraphFamily.COMPLETE: complete,
    GraphFamily.COMPLETE_BIPARTITE: complete_bipartite,
    GraphFamily.WHEEL: wheel,
    GraphFamily.DIAMOND: diamond,
    GraphFamily.STAR: star,
}


def generate(family: "GraphFamily | str", *params: int) -> Graph:
    """
    Build a member of a named family.

    Parameters
    ----------
    family : GraphFamily or str
        Family name, e.g. ``"wheel"``.
    *params : int
        Family parameters (``complete_bipartite`` takes two, ``diamond``
        none, every other family one).

    Raises
    ------
    GraphArgumentError
        On an unknown family, a wrong number of parameters or an
        out-of-range parameter.
    """
    try:
        key = GraphFamily(family)
    except ValueError as exc:
        raise GraphArgumentError(f"unknown graph family {family!r}") from exc
    try:
        return _BUILDERS[key](*params)
    except TypeError as exc:
        raise GraphArgumentError(f"wrong parameters for {key.value}: {exc}") from exc
