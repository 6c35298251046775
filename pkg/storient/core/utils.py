"""
Input helpers for graph6 streams.

The command line reads graph6 records from file arguments or from standard
input.  The helpers below turn those sources into a flat stream of
``(source, line_number, record)`` triples; blank lines are skipped and the
optional ``>>graph6<<`` header is stripped.
"""

import sys

from pathlib import Path
from typing import Iterator, List, Optional, TextIO, Tuple

GRAPH6_HEADER = ">>graph6<<"


def strip_graph6_header(record: str) -> str:
    """
    Remove the optional ``>>graph6<<`` header and surrounding whitespace.

    Parameters
    ----------
    record : str
        A raw line read from a graph6 stream.

    Returns
    -------
    str
        The bare graph6 record.
    """
    s = record.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    return s


def _iter_stream(source: str, stream: TextIO) -> Iterator[Tuple[str, int, str]]:
    for number, raw in enumerate(stream, start=1):
        record = strip_graph6_header(raw)
        if record:
            yield source, number, record


def read_graph6_records(
    paths: Optional[List[Path]] = None, stdin: Optional[TextIO] = None
) -> Iterator[Tuple[str, int, str]]:
    """
    Stream graph6 records from *paths*, or from standard input when no path
    is given.

    Parameters
    ----------
    paths : List[pathlib.Path], optional
        Files to read in the given order.  ``None`` or an empty list means
        standard input.
    stdin : TextIO, optional
        Replacement for :data:`sys.stdin` (used by tests).

    Returns
    -------
    Iterator[Tuple[str, int, str]]
        ``(source name, 1-based line number, record)`` for every non-blank
        line, in input order.

    Raises
    ------
    FileNotFoundError
        If one of *paths* does not exist.
    """
    if not paths:
        yield from _iter_stream("<stdin>", stdin or sys.stdin)
        return
    for path in paths:
        with open(path, "r", encoding="latin-1") as fh:
            yield from _iter_stream(str(path), fh)
