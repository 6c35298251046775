"""
Shortcut detection.

A shortcut of an acyclic orientation is a directed path ``p_1 -> ... -> p_m``
(``m >= 4``) together with the arc ``p_1 -> p_m`` whose vertex set is not a
clique.  Under acyclicity every arc inside the vertex set points forward
along the path, so a clique would induce a transitive tournament; a missing
pair therefore witnesses that the induced subdigraph is not transitive.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from storient.core.bitset import bits, lowest
from storient.core.errors import PreconditionError, UnsupportedSizeError
from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.orientation.predicates import (
    ancestors,
    is_acyclic,
    topological_order,
)

MAX_ORACLE_VERTICES = 10


@dataclass(frozen=True)
class Shortcut:
    """
    Attributes
    ----------
    path : Tuple[int, ...]
        Directed path ``p_1 .. p_m`` with ``m >= 4``.
    missing : Tuple[int, int]
        Two path vertices, in path order, that are not adjacent.
    """

    path: Tuple[int, ...]
    missing: Tuple[int, int]

    @property
    def chord(self) -> Tuple[int, int]:
        return self.path[0], self.path[-1]

    def validate(self, o: Orientation) -> bool:
        """Re-check this certificate against *o*."""
        p = self.path
        if len(p) < 4 or len(set(p)) != len(p):
            return False
        if any(not 0 <= v < o.n for v in p):
            return False
        if not all(o.has_arc(a, b) for a, b in zip(p, p[1:])):
            return False
        if not o.has_arc(p[0], p[-1]):
            return False
        a, b = self.missing
        if a not in p or b not in p or p.index(a) >= p.index(b):
            return False
        return not o.base.has_edge(a, b)

    def to_dict(self) -> dict:
        return {
            "path": list(self.path),
            "chord": list(self.chord),
            "missing": list(self.missing),
        }


def first_missing_pair(g: Graph, path: Sequence[int]) -> Tuple[int, int]:
    """First non-adjacent pair ``(p_i, p_j)``, ``i < j``, in path order."""
    for i, j in combinations(range(len(path)), 2):
        if not g.has_edge(path[i], path[j]):
            return path[i], path[j]
    raise ValueError("path vertices form a clique")


def shortcut_path(
    out: Sequence[int],
    adj: Sequence[int],
    start: int,
    target: int,
    reach: int,
) -> Optional[List[int]]:
    """
    Search a directed path ``start -> ... -> target`` with at least two
    internal vertices whose vertex set is not a clique.

    Parameters
    ----------
    out : Sequence[int]
        Out-neighbour rows of an acyclic digraph.
    adj : Sequence[int]
        Adjacency rows of the underlying graph.
    start, target : int
        Path ends; the arc ``start -> target`` is assumed to exist.
    reach : int
        Vertices that have a directed path to *target*.  Internal vertices
        are restricted to it.

    Returns
    -------
    List[int] or None
        The first qualifying path in depth first order over ascending
        out-neighbours.
    """
    closed = [row | 1 << v for v, row in enumerate(adj)]
    target_bit = 1 << target

    def complete(path: List[int]) -> List[int]:
        x = path[-1]
        while x != target:
            x = target if out[x] & target_bit else lowest(out[x] & reach)
            path.append(x)
        return path

    def dfs(path: List[int], mask: int, common: int) -> Optional[List[int]]:
        x = path[-1]
        for y in bits(out[x] & (reach | target_bit)):
            if y == target:
                whole = mask | target_bit
                if len(path) >= 3 and whole & ~(common & closed[y]):
                    return path + [y]
                continue
            new_common = common & closed[y]
            new_mask = mask | 1 << y
            if new_mask & ~new_common:
                return complete(path + [y])
            found = dfs(path + [y], new_mask, new_common)
            if found is not None:
                return found
        return None

    return dfs([start], 1 << start, closed[start])


def find_shortcut(o: Orientation) -> Optional[Shortcut]:
    """
    Find a shortcut of *o*.

    Arcs are tried in normalised edge order; for each arc ``a -> b`` paths
    from ``a`` are extended through out-neighbours in index order, pruned
    to vertices that can still reach ``b``.

    Raises
    ------
    PreconditionError
        If *o* has a directed cycle.
    """
    order = topological_order(o)
    if order is None:
        raise PreconditionError("shortcut search needs an acyclic orientation")
    anc = ancestors(o, order)
    for e in o.base.edges():
        a, b = (e.u, e.v) if o.out[e.u] >> e.v & 1 else (e.v, e.u)
        path = shortcut_path(o.out, o.base.adj, a, b, anc[b])
        if path is not None:
            return Shortcut(tuple(path), first_missing_pair(o.base, path))
    return None


def is_semi_transitive(o: Orientation) -> bool:
    return is_acyclic(o) and find_shortcut(o) is None


def _is_transitive_on(o: Orientation, vertices: Sequence[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    for u in vertices:
        row = o.out[u] & mask
        for v in bits(row):
            if o.out[v] & mask & ~row:
                return False
    return True


def shortcut_oracle(o: Orientation) -> Optional[Shortcut]:
    """
    Brute force shortcut search over vertex subsets.

    For every subset of at least four vertices the induced subdigraph is
    tested directly: it must have a directed Hamiltonian path, the arc from
    its first to its last vertex, and fail transitivity.  Independent of
    :func:`find_shortcut`; meant for cross-checking.

    Raises
    ------
    UnsupportedSizeError
        If the base graph has more than 10 vertices.
    PreconditionError
        If *o* has a directed cycle.
    """
    if o.n > MAX_ORACLE_VERTICES:
        raise UnsupportedSizeError(
            f"shortcut oracle is limited to {MAX_ORACLE_VERTICES} vertices"
        )
    order = topological_order(o)
    if order is None:
        raise PreconditionError("shortcut oracle needs an acyclic orientation")
    position = {v: i for i, v in enumerate(order)}
    for size in range(4, o.n + 1):
        for subset in combinations(range(o.n), size):
            path = sorted(subset, key=position.__getitem__)
            if not all(o.has_arc(a, b) for a, b in zip(path, path[1:])):
                continue
            if not o.has_arc(path[0], path[-1]):
                continue
            if _is_transitive_on(o, path):
                continue
            return Shortcut(tuple(path), first_missing_pair(o.base, path))
    return None


def _reaches(out: List[int], start: int, goal: int) -> bool:
    seen = 1 << start
    frontier = seen
    while frontier:
        if frontier >> goal & 1:
            return True
        nxt = 0
        for v in bits(frontier):
            nxt |= out[v]
        frontier = nxt & ~seen
        seen |= frontier
    return False


def acyclic_orientations(g: Graph) -> Iterator[Orientation]:
    """
    Every acyclic orientation of *g*, each exactly once.

    Edges are oriented in normalised order, ``u -> v`` before ``v -> u``;
    a direction is skipped when it would close a directed cycle.
    """
    edges = [e.as_tuple() for e in g.edges()]
    out = [0] * g.n

    def assign(i: int) -> Iterator[Orientation]:
        if i == len(edges):
            yield Orientation(g, tuple(out))
            return
        u, v = edges[i]
        for a, b in ((u, v), (v, u)):
            if _reaches(out, b, a):
                continue
            out[a] |= 1 << b
            yield from assign(i + 1)
            out[a] &= ~(1 << b)

    yield from assign(0)
