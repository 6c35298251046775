"""
Canonical forms of small graphs by exhaustive relabelling.

The canonical code of a graph is the smallest upper-triangle bit string
(graph6 column order, first pair most significant) over all relabellings
that list vertices by ascending degree.  Restricting to degree-sorted
relabellings is isomorphism invariant, so equal codes mean isomorphic graphs.
Column order lets a partial labelling fix a code prefix, which is used for
branch and bound.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from storient.core.errors import UnsupportedSizeError
from storient.graph.graph import Graph

MAX_CANONICAL_VERTICES = 8


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """
    Attributes
    ----------
    n : int
        Vertex count.
    bits : int
        Upper-triangle bits of the minimal relabelling; pair ``(0,1)`` is
        the most significant of ``n(n-1)/2`` bits.
    """

    n: int
    bits: int

    def to_graph(self) -> Graph:
        """The canonical representative encoded by this code."""
        total = self.n * (self.n - 1) // 2
        rows = [0] * self.n
        index = 0
        for v in range(1, self.n):
            for u in range(v):
                if self.bits >> (total - 1 - index) & 1:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                index += 1
        return Graph(self.n, tuple(rows))

    def to_dict(self) -> dict:
        return {"n": self.n, "bits": self.bits}


def canonical_labelling(g: Graph) -> Tuple[CanonicalCode, Tuple[int, ...]]:
    """
    Compute the canonical code and one labelling that attains it.

    Returns
    -------
    Tuple[CanonicalCode, Tuple[int, ...]]
        The code and ``order`` such that vertex ``order[i]`` of *g* is vertex
        ``i`` of the canonical representative.

    Raises
    ------
    UnsupportedSizeError
        If ``g.n > 8``.
    """
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise UnsupportedSizeError(
            f"canonical form is limited to {MAX_CANONICAL_VERTICES} vertices"
        )
    degrees = g.degrees()
    slot_degree = sorted(degrees)
    total = n * (n - 1) // 2

    best_code: List[Optional[int]] = [None]
    best_order: List[Tuple[int, ...]] = [tuple(range(n))]
    chosen: List[int] = []

    def extend(used: int, prefix: int) -> None:
        j = len(chosen)
        if j == n:
            if best_code[0] is None or prefix < best_code[0]:
                best_code[0] = prefix
                best_order[0] = tuple(chosen)
            return
        width = j * (j + 1) // 2
        for w in range(n):
            if used >> w & 1 or degrees[w] != slot_degree[j]:
                continue
            column = 0
            for u in chosen:
                column = column << 1 | (g.adj[u] >> w & 1)
            candidate = prefix << j | column
            if best_code[0] is not None and candidate > best_code[0] >> (total - width):
                continue
            chosen.append(w)
            extend(used | 1 << w, candidate)
            chosen.pop()

    extend(0, 0)
    return CanonicalCode(n, best_code[0] or 0), best_order[0]


def canonical_form(g: Graph) -> CanonicalCode:
    """Canonical code of *g* (``g.n <= 8``)."""
    return canonical_labelling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative isomorphic to *g*."""
    return canonical_form(g).to_graph()
