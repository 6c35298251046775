"""
Plain text form of an oriented graph.

::

    n=4
    0->1
    0->3
    1->2

The first line gives the vertex count, then one ``u->v`` line per arc,
sorted.  Arcs define the edge set of the base graph.
"""

from storient.core.errors import GraphFormatError
from storient.graph.graph import MAX_VERTICES, Graph
from storient.orientation.orientation import Orientation


def write_digraph(o: Orientation) -> str:
    lines = [f"n={o.n}"]
    lines.extend(f"{u}->{v}" for u, v in o.arcs())
    return "\n".join(lines)


def _parse_int(token: str, offset: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise GraphFormatError(f"expected a vertex index, got {token!r}", offset)
    return int(token)


def parse_digraph(text: str) -> Orientation:
    """
    Parse the text form back into an :class:`Orientation`.

    Raises
    ------
    GraphFormatError
        On a missing header, a malformed arc line, an index out of range, a
        loop, or an edge listed twice.  The offset points at the start of
        the offending token.
    """
    lines = text.split("\n")
    header = lines[0].rstrip("\r")
    if not header.startswith("n="):
        raise GraphFormatError("digraph text must start with 'n=<k>'", 0)
    n = _parse_int(header[2:], 2)
    if n > MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} exceeds {MAX_VERTICES}", 2)

    offset = len(lines[0]) + 1
    arcs = []
    seen = set()
    for raw in lines[1:]:
        line = raw.rstrip("\r")
        start = offset
        offset += len(raw) + 1
        if not line.strip():
            continue
        head, sep, tail = line.partition("->")
        if not sep:
            raise GraphFormatError(f"expected 'u->v', got {line!r}", start)
        u = _parse_int(head.strip(), start)
        v = _parse_int(tail.strip(), start + len(head) + 2)
        if u >= n or v >= n:
            raise GraphFormatError(f"arc {u}->{v} outside 0..{n - 1}", start)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", start)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphFormatError(f"edge {pair[0]}-{pair[1]} listed twice", start)
        seen.add(pair)
        arcs.append((u, v))
    return Orientation.from_arcs(Graph.from_edges(n, arcs), arcs)
