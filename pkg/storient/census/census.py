"""
Exhaustive census of small graphs without a semi-transitive orientation.

Every labeled graph on ``n`` vertices is numbered by its upper-triangle
bits (see :func:`storient.graph.graph.graph_from_index`).  The index range
is cut into chunks; each chunk is decided independently, optionally in a
:class:`multiprocessing.Pool`, and only the non-orientable graphs are
canonicalised.  The merged class list is sorted, so the report does not
depend on the worker count or the chunk size.
"""

import logging
import multiprocessing
import sys
import time
from typing import Iterator, List, NamedTuple, Optional, Tuple

from tqdm import tqdm

from storient.census.report import CensusClass, CensusReport
from storient.config import SolverConfig, load_config
from storient.core.errors import UnsupportedSizeError
from storient.graph.canonical import CanonicalCode, canonical_form
from storient.graph.graph import graph_from_index, labeled_graph_count
from storient.graph.graph6 import write_graph6
from storient.solver.solver import StSolver

MAX_CENSUS_VERTICES = 7


class ChunkResult(NamedTuple):
    examined: int
    non_orientable: int
    filtered: int
    codes: List[Tuple[CanonicalCode, bool]]


def _chunks(total: int, size: int) -> Iterator[Tuple[int, int]]:
    for start in range(0, total, size):
        yield start, min(start + size, total)


def census_chunk(
    task: Tuple[int, int, int, bool, SolverConfig],
) -> ChunkResult:
    """Decide the labeled graphs ``start .. stop - 1`` on ``n`` vertices."""
    n, start, stop, connected_only, config = task
    solver = StSolver(config)
    examined = bad = filtered = 0
    codes = {}
    for index in range(start, stop):
        g = graph_from_index(n, index)
        connected = g.is_connected()
        if connected_only and not connected:
            continue
        examined += 1
        verdict = solver.decide(g)
        if verdict.orientable:
            continue
        bad += 1
        if verdict.vertex is not None:
            filtered += 1
        codes[canonical_form(g)] = connected
    return ChunkResult(examined, bad, filtered, sorted(codes.items()))


def run_census(
    n: int,
    connected_only: bool = False,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None,
    config: Optional[SolverConfig] = None,
    logger: Optional[logging.Logger] = None,
    progress: Optional[bool] = None,
) -> CensusReport:
    """
    Run the census on *n* vertices.

    Parameters
    ----------
    n : int
        Vertex count, at most 7.
    connected_only : bool
        Skip disconnected labeled graphs.
    workers, chunk_size : int, optional
        Default to the ``census`` section of the configuration.
    progress : bool, optional
        Show a ``tqdm`` bar; by default only when stderr is a terminal.

    Raises
    ------
    UnsupportedSizeError
        If ``n > 7``.
    SearchBudgetExceeded
        If a single decision exhausts the node budget.
    """
    if n > MAX_CENSUS_VERTICES:
        raise UnsupportedSizeError(
            f"census is limited to {MAX_CENSUS_VERTICES} vertices, got {n}"
        )
    if n < 0:
        raise UnsupportedSizeError(f"negative vertex count {n}")
    config = config or load_config(logger)
    workers = workers or config.census_workers
    chunk_size = chunk_size or config.census_chunk_size
    if progress is None:
        progress = sys.stderr.isatty()

    total = labeled_graph_count(n)
    tasks = [
        (n, start, stop, connected_only, config)
        for start, stop in _chunks(total, chunk_size)
    ]
    if logger:
        logger.info(
            "[census] n=%d: %d labeled graphs in %d chunks, %d worker(s)",
            n,
            total,
            len(tasks),
            workers,
        )

    began = time.perf_counter()
    bar = tqdm(total=len(tasks), desc=f"census n={n}", disable=not progress)
    results: List[ChunkResult] = []
    if workers <= 1:
        for task in tasks:
            results.append(census_chunk(task))
            bar.update()
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            for result in pool.imap_unordered(census_chunk, tasks):
                results.append(result)
                bar.update()
    bar.close()

    merged = {}
    for result in results:
        merged.update(result.codes)
    classes = sorted(
        CensusClass(code, write_graph6(code.to_graph()), connected)
        for code, connected in merged.items()
    )
    report = CensusReport(
        n=n,
        total_labeled=total,
        examined_labeled=sum(r.examined for r in results),
        non_orientable_labeled=sum(r.non_orientable for r in results),
        filtered_labeled=sum(r.filtered for r in results),
        classes=classes,
        connected_only=connected_only,
        elapsed=time.perf_counter() - began,
    )
    if logger:
        logger.info(
            "[census] n=%d: %d non-orientable labeled graphs, %d classes "
            "(%d connected) in %.1fs",
            n,
            report.non_orientable_labeled,
            len(classes),
            report.connected_class_count,
            report.elapsed,
        )
    return report
