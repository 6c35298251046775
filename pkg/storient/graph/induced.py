"""
Induced subgraph search by backtracking over bitset candidate sets.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from storient.core.bitset import bits
from storient.core.errors import UnsupportedSizeError
from storient.graph.graph import Graph

MAX_PATTERN_VERTICES = 8


@dataclass(frozen=True)
class Embedding:
    """
    Injective map ``pattern vertex i -> host vertex mapping[i]`` preserving
    adjacency and non-adjacency.
    """

    mapping: Tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= h < host.n for h in self.mapping):
            return False
        for i in range(pattern.n):
            for j in range(i + 1, pattern.n):
                if pattern.has_edge(i, j) != host.has_edge(
                    self.mapping[i], self.mapping[j]
                ):
                    return False
        return True


def _pattern_order(pattern: Graph) -> List[int]:
    """
    Pattern vertices in search order: repeatedly take the vertex with most
    neighbours already ordered, ties by degree then index.
    """
    order: List[int] = []
    placed = 0
    left = set(range(pattern.n))
    while left:
        best = min(
            left,
            key=lambda v: (
                -(pattern.adj[v] & placed).bit_count(),
                -pattern.degree(v),
                v,
            ),
        )
        order.append(best)
        placed |= 1 << best
        left.remove(best)
    return order


def induced_contains(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """
    Find an induced copy of *pattern* in *host*.

    Host candidates for a pattern vertex must have at least its degree and
    the right adjacency to every host vertex already matched; candidates are
    tried in ascending index order, so the result is deterministic.

    Returns
    -------
    Embedding or None
        Some induced embedding, or ``None`` when there is none (including
        ``pattern.n > host.n``).

    Raises
    ------
    UnsupportedSizeError
        If the pattern has more than 8 vertices.
    """
    if pattern.n > MAX_PATTERN_VERTICES:
        raise UnsupportedSizeError(
            f"induced search patterns are limited to {MAX_PATTERN_VERTICES} vertices"
        )
    if pattern.n > host.n:
        return None

    order = _pattern_order(pattern)
    host_degrees = host.degrees()
    by_degree = [0] * (pattern.n and max(pattern.degrees()) + 1)
    for d in range(len(by_degree)):
        mask = 0
        for h in range(host.n):
            if host_degrees[h] >= d:
                mask |= 1 << h
        by_degree[d] = mask
    full = host.full
    image = [-1] * pattern.n

    def search(depth: int, used: int) -> bool:
        if depth == len(order):
            return True
        p = order[depth]
        candidates = by_degree[pattern.degree(p)] & ~used
        for q in order[:depth]:
            h = image[q]
            if pattern.adj[p] >> q & 1:
                candidates &= host.adj[h]
            else:
                candidates &= full & ~host.adj[h]
        for h in bits(candidates):
            image[p] = h
            if search(depth + 1, used | 1 << h):
                return True
        image[p] = -1
        return False

    if search(0, 0):
        return Embedding(tuple(image))
    return None
