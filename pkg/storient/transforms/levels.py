"""
Good-partition helpers shared by edge addition and path lifting.
"""

from typing import List, NamedTuple, Optional

from storient.core.bitset import bits
from storient.graph.graph import Graph


class OpenPair(NamedTuple):
    """
    Non-adjacent ``u`` (level ``i``) and ``w`` (level ``k``) joined through
    ``v`` (level ``j``), ``i < j < k``; the arcs are ``u -> v -> w``.
    """

    u: int
    v: int
    w: int
    levels: tuple

    def certificate(self) -> dict:
        return {"via": self.v, "levels": list(self.levels)}


def minimal_open_pair(g: Graph, level: List[int]) -> Optional[OpenPair]:
    """
    The qualifying pair with the smallest level distance ``k - i``; ties go
    to the smallest ``u``, then ``w``, then ``v``.

    *level* maps every vertex to its zero-based good-partition level.
    """
    best = None
    for v in range(g.n):
        lower = [u for u in bits(g.adj[v]) if level[u] < level[v]]
        upper = [w for w in bits(g.adj[v]) if level[w] > level[v]]
        for u in lower:
            for w in upper:
                if g.has_edge(u, w):
                    continue
                key = (level[w] - level[u], u, w, v)
                if best is None or key < best:
                    best = key
    if best is None:
        return None
    _, u, w, v = best
    return OpenPair(u, v, w, (level[u], level[v], level[w]))
