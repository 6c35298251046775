"""
Orientations of undirected graphs.

An :class:`Orientation` assigns one direction to every edge of its base
graph.  Directions are stored as out-neighbour bit rows, ``u -> v`` iff bit
``v`` of ``out[u]`` is set.  Orientations are immutable and need not be
acyclic; acyclicity is checked by the predicates module.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from storient.core.bitset import bits
from storient.core.errors import GraphArgumentError
from storient.graph.graph import Graph

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """
    Attributes
    ----------
    base : Graph
        The oriented graph.
    out : Tuple[int, ...]
        ``out[u]`` is the set of heads of arcs leaving ``u``.  For every
        edge ``uv`` of ``base`` exactly one of ``u -> v`` and ``v -> u`` is
        present, and no arc leaves the edge set.
    """

    base: Graph
    out: Tuple[int, ...]

    def __post_init__(self) -> None:
        g = self.base
        if len(self.out) != g.n:
            raise GraphArgumentError(
                f"expected {g.n} out rows, got {len(self.out)}"
            )
        for u, row in enumerate(self.out):
            if row & ~g.adj[u]:
                raise GraphArgumentError(f"vertex {u} has an arc outside the graph")
            for v in bits(row):
                if self.out[v] >> u & 1:
                    raise GraphArgumentError(f"edge {u}-{v} oriented both ways")
        for u in range(g.n):
            for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
                if not (self.out[u] >> v & 1 or self.out[v] >> u & 1):
                    raise GraphArgumentError(f"edge {u}-{v} has no direction")

    # ------------------------------------------------------------------ #
    # construction
    # ------------------------------------------------------------------ #
    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[Arc]) -> "Orientation":
        """
        Raises
        ------
        GraphArgumentError
            If an arc is not an edge of *base*, or the arcs do not orient
            every edge exactly once.
        """
        rows = [0] * base.n
        for u, v in arcs:
            if not base.has_edge(u, v):
                raise GraphArgumentError(f"arc {u}->{v} is not an edge")
            rows[u] |= 1 << v
        return cls(base, tuple(rows))

    @classmethod
    def from_order(cls, base: Graph, order: Sequence[int]) -> "Orientation":
        """Orient every edge from the earlier to the later vertex of *order*."""
        if sorted(order) != list(range(base.n)):
            raise GraphArgumentError("order is not a permutation of the vertices")
        rows = [0] * base.n
        later = base.full
        for v in order:
            later &= ~(1 << v)
            rows[v] = base.adj[v] & later
        return cls(base, tuple(rows))

    # ------------------------------------------------------------------ #
    # queries
    # ------------------------------------------------------------------ #
    @property
    def n(self) -> int:
        return self.base.n

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and bool(self.out[u] >> v & 1)

    def direction(self, u: int, v: int) -> bool:
        """True iff the edge ``uv`` is oriented ``u -> v``."""
        if not self.base.has_edge(u, v):
            raise GraphArgumentError(f"{u}-{v} is not an edge")
        return bool(self.out[u] >> v & 1)

    def in_rows(self) -> List[int]:
        rows = [0] * self.n
        for u, row in enumerate(self.out):
            for v in bits(row):
                rows[v] |= 1 << u
        return rows

    def in_mask(self, v: int) -> int:
        return self.base.adj[v] & ~self.out[v]

    def arcs(self) -> List[Arc]:
        """All arcs, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def sources(self) -> List[int]:
        return [v for v in range(self.n) if not self.in_mask(v)]

    def sinks(self) -> List[int]:
        return [v for v in range(self.n) if not self.out[v]]

    # ------------------------------------------------------------------ #
    # derived orientations
    # ------------------------------------------------------------------ #
    def reverse(self) -> "Orientation":
        return Orientation(self.base, tuple(self.in_rows()))

    def restrict(self, graph: Graph) -> "Orientation":
        """
        Restriction to a spanning subgraph *graph* of :attr:`base`.

        Raises
        ------
        GraphArgumentError
            If *graph* has a different vertex count or an edge not in the base.
        """
        if graph.n != self.n:
            raise GraphArgumentError("restriction needs the same vertex set")
        return Orientation(
            graph, tuple(row & graph.adj[u] for u, row in enumerate(self.out))
        )

    def induced(self, vertices: Sequence[int]) -> "Orientation":
        """Sub-orientation on *vertices*; ``vertices[i]`` becomes vertex ``i``."""
        sub = self.base.induced_subgraph(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bits(self.out[v]):
                i = index.get(w)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Orientation(sub, tuple(rows))

    def extend(self, graph: Graph, arcs: Iterable[Arc] = ()) -> "Orientation":
        """
        Orientation of *graph* that keeps every arc of ``self`` and orients the
        remaining edges by *arcs*.

        *graph* may have more vertices than the base; shared indices keep
        their meaning.  Edges of the base missing from *graph* are dropped.
        """
        if graph.n < self.n:
            raise GraphArgumentError("extension cannot drop vertices")
        rows = [0] * graph.n
        for u, row in enumerate(self.out):
            rows[u] = row & graph.adj[u]
        for u, v in arcs:
            if not graph.has_edge(u, v):
                raise GraphArgumentError(f"arc {u}->{v} is not an edge")
            rows[u] |= 1 << v
        return Orientation(graph, tuple(rows))

    def agrees_with(self, other: "Orientation") -> bool:
        """
        True iff every edge present in both base graphs (by vertex index) is
        oriented the same way in both orientations.
        """
        for u in range(min(self.n, other.n)):
            shared = self.base.adj[u] & other.base.adj[u]
            if (self.out[u] ^ other.out[u]) & shared:
                return False
        return True

    def relabel(self, perm: Sequence[int]) -> "Orientation":
        """Isomorphic copy where vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.out):
            for v in bits(row):
                rows[perm[u]] |= 1 << perm[v]
        return Orientation(self.base.relabel(perm), tuple(rows))

    def __repr__(self) -> str:
        arcs = ", ".join(f"{u}->{v}" for u, v in self.arcs())
        return f"Orientation(n={self.n}, arcs=[{arcs}])"


def empty_orientation(g: Graph) -> Optional[Orientation]:
    """The unique orientation of an edgeless graph, ``None`` if *g* has edges."""
    if g.edge_count():
        return None
    return Orientation(g, (0,) * g.n)
