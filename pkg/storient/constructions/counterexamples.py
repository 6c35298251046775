"""
Search for an induced ``W5`` in a product of two orientable graphs.

Factors are connected graphs on at most ``max_order`` vertices taken up
to isomorphism.  Ordered factor pairs are scanned in canonical-code order
(first factor major); the first pair whose product contains ``W5`` as an
induced subgraph is returned.  With several workers the pairs are cut into
chunks whose results are consumed in order, so the answer does not depend
on the worker count.
"""

import logging
import multiprocessing
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from storient.constructions.products import ProductKind, product
from storient.core.errors import GraphArgumentError
from storient.graph.canonical import canonical_form
from storient.graph.generators import wheel
from storient.graph.graph import Graph, graph_from_index, labeled_graph_count
from storient.graph.graph6 import write_graph6
from storient.graph.induced import Embedding, induced_contains
from storient.solver.solver import StSolver, default_solver

MAX_FACTOR_ORDER = 5
_PAIRS_PER_CHUNK = 32


@dataclass(frozen=True)
class ProductHit:
    kind: ProductKind
    g: Graph
    h: Graph
    embedding: Embedding

    @property
    def product(self) -> Graph:
        return product(self.g, self.h, self.kind)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "g": write_graph6(self.g),
            "h": write_graph6(self.h),
            "product": write_graph6(self.product),
            "embedding": list(self.embedding.mapping),
        }


def connected_graph_classes(max_order: int) -> List[Graph]:
    """
    Canonical representatives of the connected graphs on ``1 .. max_order``
    vertices, sorted by ``(n, canonical bits)``.
    """
    codes = set()
    for n in range(1, max_order + 1):
        for index in range(labeled_graph_count(n)):
            g = graph_from_index(n, index)
            if g.is_connected():
                codes.add(canonical_form(g))
    return [code.to_graph() for code in sorted(codes)]


def _scan(
    task: Tuple[ProductKind, Sequence[Tuple[Graph, Graph]]]
) -> Optional[Tuple[Graph, Graph, Embedding]]:
    kind, pairs = task
    w5 = wheel(5)
    for g, h in pairs:
        embedding = induced_contains(product(g, h, kind), w5)
        if embedding is not None:
            return g, h, embedding
    return None


def find_w5_in_product(
    kind: ProductKind,
    max_order: int = MAX_FACTOR_ORDER,
    workers: int = 1,
    solver: Optional[StSolver] = None,
    logger: Optional[logging.Logger] = None,
) -> Optional[ProductHit]:
    """
    First ordered pair of orientable connected factors whose product
    contains an induced ``W5``.

    Pairs whose product has fewer than six vertices are skipped.

    Raises
    ------
    GraphArgumentError
        If *max_order* is outside ``1 .. 5``.
    """
    kind = ProductKind(kind)
    if not 1 <= max_order <= MAX_FACTOR_ORDER:
        raise GraphArgumentError(
            f"factor order must be between 1 and {MAX_FACTOR_ORDER}, got {max_order}"
        )
    solver = solver or default_solver()
    classes = connected_graph_classes(max_order)
    factors = [g for g in classes if solver.decide(g).orientable]
    pairs = [(g, h) for g in factors for h in factors if g.n * h.n >= 6]
    chunks = [
        (kind, pairs[i : i + _PAIRS_PER_CHUNK])
        for i in range(0, len(pairs), _PAIRS_PER_CHUNK)
    ]
    if logger:
        logger.info(
            "[w5-search] %s: %d factors, %d pairs in %d chunks",
            kind.value,
            len(factors),
            len(pairs),
            len(chunks),
        )

    found = None
    if workers <= 1:
        for task in chunks:
            found = _scan(task)
            if found is not None:
                break
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            for result in pool.imap(_scan, chunks):
                if result is not None:
                    found = result
                    break
    if found is None:
        return None
    return ProductHit(kind, *found)
