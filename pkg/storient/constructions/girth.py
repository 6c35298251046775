"""
Odd girth and the length-3 path blowup.
"""

from collections import deque
from typing import Optional

from storient.core.bitset import bits
from storient.graph.graph import Graph


def odd_girth(g: Graph) -> Optional[int]:
    """
    Length of a shortest odd cycle, ``None`` for bipartite graphs.

    A breadth first search from every root; an edge between two vertices
    at the same depth ``d`` closes an odd closed walk of length ``2d + 1``
    through the root, and the minimum over all roots is the odd girth.
    """
    best: Optional[int] = None
    for root in range(g.n):
        depth = [-1] * g.n
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * depth[v] + 1 >= best:
                break
            for w in bits(g.adj[v]):
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif depth[w] == depth[v]:
                    length = 2 * depth[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def odd_girth_blowup(h: Graph) -> Graph:
    """
    Add ``xy`` for every pair joined by a simple path of exactly three
    edges ``x - a - b - y`` in *h*; existing edges are kept.
    """
    added = []
    for a in range(h.n):
        for b in bits(h.adj[a]):
            for x in bits(h.adj[a] & ~(1 << b)):
                for y in bits(h.adj[b] & ~(1 << a) & ~(1 << x)):
                    if x < y and not h.has_edge(x, y):
                        added.append((x, y))
    return h.with_edges(added=added)
