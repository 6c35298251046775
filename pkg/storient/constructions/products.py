"""
Graph products.

Vertex ``(a, b)`` of a product of ``g`` and ``h`` is numbered
``a * h.n + b`` (row-major by the first factor).  Edge conditions for
distinct ``(a1, b1)`` and ``(a2, b2)``:

=============  ==================================================
cartesian      ``a1 = a2 and b1 ~ b2``, or ``a1 ~ a2 and b1 = b2``
tensor         ``a1 ~ a2 and b1 ~ b2``
lexicographic  ``a1 ~ a2``, or ``a1 = a2 and b1 ~ b2``
strong         cartesian or tensor
=============  ==================================================
"""

from enum import Enum

from storient.core.errors import UnsupportedSizeError
from storient.graph.graph import MAX_VERTICES, Graph


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    LEXICOGRAPHIC = "lexicographic"
    STRONG = "strong"


def _adjacent(kind: ProductKind, ga: bool, hb: bool, ea: bool, eb: bool) -> bool:
    if kind == ProductKind.TENSOR:
        return ga and hb
    if kind == ProductKind.LEXICOGRAPHIC:
        return ga or (ea and hb)
    cartesian = (ea and hb) or (ga and eb)
    if kind == ProductKind.CARTESIAN:
        return cartesian
    return cartesian or (ga and hb)


def product(g: Graph, h: Graph, kind: ProductKind) -> Graph:
    """
    Raises
    ------
    UnsupportedSizeError
        If ``g.n * h.n`` exceeds 62.
    """
    kind = ProductKind(kind)
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(
            f"{kind.value} product has {n} vertices, limit {MAX_VERTICES}"
        )
    rows = [0] * n
    for x in range(n):
        a1, b1 = divmod(x, h.n)
        for y in range(x + 1, n):
            a2, b2 = divmod(y, h.n)
            ga = g.has_edge(a1, a2)
            hb = h.has_edge(b1, b2)
            if _adjacent(kind, ga, hb, a1 == a2, b1 == b2):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Graph(n, tuple(rows))
