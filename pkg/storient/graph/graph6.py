"""
graph6 short form codec (``n <= 62``).

Layout: one byte ``n + 63`` followed by the upper-triangle adjacency bits in
column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...`` packed big-endian into
6-bit groups, each stored as ``group + 63``.  Padding bits are zero.
"""

from storient.core.errors import GraphFormatError, UnsupportedSizeError
from storient.graph.graph import MAX_VERTICES, Graph

_OFFSET = 63
_MAX_BYTE = 126


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(line: str) -> Graph:
    """
    Decode one graph6 record.

    A single trailing line terminator is tolerated; anything else outside
    the record is an error.

    Parameters
    ----------
    line : str
        The graph6 record (short form, no ``>>graph6<<`` header).

    Returns
    -------
    Graph
        The encoded graph.

    Raises
    ------
    GraphFormatError
        On an empty record, a byte outside ``63 .. 126``, a truncated body,
        trailing garbage or non-zero padding bits.
    UnsupportedSizeError
        On the long form (first byte 126), which encodes ``n >= 63``.
    """
    record = line.rstrip("\r\n")
    if not record:
        raise GraphFormatError("empty graph6 record", 0)
    for offset, ch in enumerate(record):
        code = ord(ch)
        if code < _OFFSET or code > _MAX_BYTE:
            raise GraphFormatError(f"byte {code} outside 63..126", offset)
    n = ord(record[0]) - _OFFSET
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(
            f"graph6 long form (n >= 63) is not supported, limit {MAX_VERTICES}"
        )
    expected = 1 + _body_length(n)
    if len(record) < expected:
        raise GraphFormatError(
            f"truncated record: {expected} bytes needed for n={n}", len(record)
        )
    if len(record) > expected:
        raise GraphFormatError("trailing garbage after record", expected)

    rows = [0] * n
    index = 0
    for v in range(1, n):
        for u in range(v):
            group = ord(record[1 + index // 6]) - _OFFSET
            if group >> (5 - index % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            index += 1
    if index % 6:
        last = ord(record[expected - 1]) - _OFFSET
        if last & ((1 << (6 - index % 6)) - 1):
            raise GraphFormatError("non-zero padding bits", expected - 1)
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """
    Encode *g* as a graph6 short-form record (no newline).

    Raises
    ------
    UnsupportedSizeError
        If ``g.n > 62``.
    """
    if g.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short form holds at most {MAX_VERTICES}")
    out = [chr(g.n + _OFFSET)]
    group = 0
    filled = 0
    for v in range(1, g.n):
        for u in range(v):
            group = group << 1 | (g.adj[u] >> v & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + _OFFSET))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + _OFFSET))
    return "".join(out)
