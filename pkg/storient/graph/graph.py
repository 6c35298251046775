"""
Undirected simple graphs stored as adjacency bit rows.

A :class:`Graph` has vertices ``0 .. n-1`` (``n <= 62``) and one integer per
vertex whose set bits are its neighbours.  Values are immutable; every edit
returns a new graph, so graphs are safely shared between worker processes.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from storient.core.bitset import bits, full_mask
from storient.core.errors import GraphArgumentError, UnsupportedSizeError

MAX_VERTICES = 62


@dataclass(frozen=True, order=True)
class Edge:
    """
    Normalised undirected edge ``u < v``.

    Use :meth:`Edge.of` to build one from an unordered pair.
    """

    u: int
    v: int

    def __post_init__(self) -> None:
        if not 0 <= self.u < self.v:
            raise GraphArgumentError(
                f"edge ({self.u}, {self.v}) is not normalised (need 0 <= u < v)"
            )

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphArgumentError(f"loop at vertex {a} is not an edge")
        return cls(min(a, b), max(a, b))

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u

    def as_tuple(self) -> Tuple[int, int]:
        return self.u, self.v


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph.

    Attributes
    ----------
    n : int
        Number of vertices, ``0 <= n <= 62``.
    adj : Tuple[int, ...]
        ``adj[u]`` has bit ``v`` set iff ``uv`` is an edge.  Rows are
        symmetric, loop free and use no bit ``>= n``.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise UnsupportedSizeError(
                f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}"
            )
        if len(self.adj) != self.n:
            raise GraphArgumentError(
                f"expected {self.n} adjacency rows, got {len(self.adj)}"
            )
        outside = ~full_mask(self.n)
        for u, row in enumerate(self.adj):
            if row & outside:
                raise GraphArgumentError(f"row {u} has bits beyond n={self.n}")
            if row >> u & 1:
                raise GraphArgumentError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphArgumentError(f"asymmetric adjacency {u}-{v}")

    # ------------------------------------------------------------------ #
    # construction
    # ------------------------------------------------------------------ #
    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph on *n* vertices from an iterable of vertex pairs.

        Raises
        ------
        GraphArgumentError
            On a loop or an endpoint outside ``0 .. n-1``.
        """
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise GraphArgumentError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphArgumentError(f"edge ({a}, {b}) outside 0..{n - 1}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    # ------------------------------------------------------------------ #
    # queries
    # ------------------------------------------------------------------ #
    @property
    def full(self) -> int:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Edge]:
        """All edges in normalised lexicographic order."""
        result = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                result.append(Edge(u, v))
        return result

    def is_complete(self) -> bool:
        full = self.full
        return all(row == full & ~(1 << u) for u, row in enumerate(self.adj))

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.full

    def components(self) -> List[int]:
        """Connected components as vertex masks, ordered by smallest vertex."""
        left = self.full
        result = []
        while left:
            start = left & -left
            comp = start
            frontier = start
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~comp
                comp |= frontier
            result.append(comp)
            left &= ~comp
        return result

    # ------------------------------------------------------------------ #
    # derived graphs
    # ------------------------------------------------------------------ #
    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """
        Subgraph induced on *vertices*; vertex ``vertices[i]`` becomes ``i``.
        """
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bits(self.adj[v]):
                i = index.get(w)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """
        Isomorphic copy where old vertex ``v`` becomes ``perm[v]``.

        Raises
        ------
        GraphArgumentError
            If *perm* is not a permutation of ``0 .. n-1``.
        """
        if sorted(perm) != list(range(self.n)):
            raise GraphArgumentError("relabelling is not a permutation")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new_row = 0
            for w in bits(row):
                new_row |= 1 << perm[w]
            rows[perm[v]] = new_row
        return Graph(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.full
        return Graph(
            self.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(self.adj))
        )

    def with_edges(
        self,
        added: Iterable[Tuple[int, int]] = (),
        removed: Iterable[Tuple[int, int]] = (),
    ) -> "Graph":
        """Same vertex set with *removed* edges dropped and *added* ones set."""
        rows = list(self.adj)
        for a, b in removed:
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
        for a, b in added:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        edges = ", ".join(f"{e.u}-{e.v}" for e in self.edges())
        return f"Graph(n={self.n}, edges=[{edges}])"


def is_complete_multipartite(g: Graph) -> bool:
    """
    True iff non-adjacency is an equivalence relation on ``V(g)``, i.e. the
    complement is a disjoint union of cliques.
    """
    full = g.full
    closed_non = [full & ~row for row in g.adj]
    for u in range(g.n):
        for w in bits(closed_non[u]):
            if closed_non[w] != closed_non[u]:
                return False
    return True


def cliques_containing(g: Graph, required: int) -> List[int]:
    """
    Every clique of *g* (as a vertex mask) that contains the vertex set
    *required*.  Exponential; meant for small graphs and tests.
    """
    if not g.is_clique(required):
        return []
    common = g.full
    for v in bits(required):
        common &= g.adj[v]
    pool = list(bits(common))
    found: List[int] = []

    def grow(index: int, mask: int, allowed: int) -> None:
        found.append(mask)
        for i in range(index, len(pool)):
            w = pool[i]
            if allowed >> w & 1:
                grow(i + 1, mask | 1 << w, allowed & g.adj[w])

    grow(0, required, common)
    return found


def graph_from_index(n: int, index: int) -> Graph:
    """
    The labeled graph whose upper-triangle bits, in graph6 column order
    ``(0,1), (0,2), (1,2), (0,3), ...``, are the binary digits of *index*
    (least significant digit first).
    """
    rows = [0] * n
    bit = 0
    for v in range(1, n):
        for u in range(v):
            if index >> bit & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(rows))


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)
