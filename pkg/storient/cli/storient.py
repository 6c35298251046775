#!/usr/bin/env python3
"""
Command line interface of the semi-transitive orientation toolkit.

Usage examples
--------------
# Decide every graph of a graph6 file, one JSON record per line
storient check graphs.g6

# Print an orientation witness
storient orient cycles.g6

# Certified trace down to the edgeless graph
echo "Bw" | storient transform to-empty --out trace.json

# Census of the connected 7-vertex graphs on four processes
storient census --n 7 --connected-only --workers 4 --out census7.json

# Constructions
storient product --kind lexicographic A_ A_ --check
storient blowup cycle7.g6
storient word abcabc

Exit codes: 0 on success, 1 when any record failed, 2 on usage errors.
"""

import sys
import json
import logging
import argparse
from pathlib import Path
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, TextIO

from storient.census.census import run_census
from storient.constructions.girth import odd_girth_blowup
from storient.constructions.products import ProductKind, product
from storient.constructions.words import Word, alternation_graph
from storient.core.errors import StorientError
from storient.core.utils import read_graph6_records
from storient.graph.graph import Graph
from storient.graph.graph6 import parse_graph6, write_graph6
from storient.orientation.digraph_text import write_digraph
from storient.solver.solver import StSolver
from storient.solver.verdict import SolveMode, SolveStatus, SolveVerdict
from storient.transforms.pipeline import (
    add_to_complete,
    delete_to_empty,
    lift_to_matching,
)
from storient.transforms.trace import validate_trace

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOGGER_NAME = "storient"

_VERDICT_KEYS = {
    SolveMode.SEMI_TRANSITIVE: "st_orientable",
    SolveMode.TRANSITIVE: "transitive_orientable",
}

_PIPELINES = {
    "to-empty": delete_to_empty,
    "to-complete": add_to_complete,
    "to-matching": lift_to_matching,
}


def _logger() -> logging.Logger:
    return logging.getLogger(LOGGER_NAME)


class _Output:
    """Writes to ``--out`` when given, otherwise to stdout."""

    def __init__(self, path: Optional[str]) -> None:
        self._path = path
        self._fh: Optional[TextIO] = None

    def __enter__(self) -> TextIO:
        if self._path:
            self._fh = open(self._path, "w", encoding="utf-8")
            return self._fh
        return sys.stdout

    def __exit__(self, *exc) -> None:
        if self._fh is not None:
            self._fh.close()


def _records(args: argparse.Namespace) -> Iterable:
    return read_graph6_records([Path(p) for p in args.files] or None)


def _error_record(
    source: str, line: int, record: str, exc: StorientError
) -> Dict[str, Any]:
    return {
        "source": source,
        "line": line,
        "input": record,
        "error": exc.to_dict(),
    }


@dataclass(frozen=True)
class CheckRecord:
    """
    Result of one ``check`` line.  The witness is the digraph text of the
    orientation found, or the filtered vertex for prefilter rejections.
    """

    source: str
    line: int
    input: str
    verdict: SolveVerdict

    def to_dict(self) -> Dict[str, Any]:
        verdict = self.verdict
        data: Dict[str, Any] = {
            "source": self.source,
            "line": self.line,
            "input": self.input,
            _VERDICT_KEYS[verdict.mode]: verdict.orientable,
            "status": verdict.status.value,
            "stats": verdict.stats.to_dict(),
        }
        if verdict.orientation is not None:
            data["digraph"] = write_digraph(verdict.orientation)
        if verdict.status == SolveStatus.FILTERED:
            data["filtered_vertex"] = verdict.vertex
        return data


def check_record(
    solver: StSolver, source: str, line: int, record: str, mode: SolveMode
) -> CheckRecord:
    """Decide one ``check`` line; raises on malformed input."""
    verdict = solver.decide(parse_graph6(record), mode)
    return CheckRecord(source, line, record, verdict)


def cmd_check(args: argparse.Namespace) -> int:
    """Handle ``check``: one JSON line per graph6 record, in input order."""
    solver = StSolver(logger=_logger())
    mode = SolveMode(args.mode)
    failed = False
    with _Output(args.out) as out:
        for source, line, record in _records(args):
            try:
                data = check_record(solver, source, line, record, mode).to_dict()
            except StorientError as exc:
                failed = True
                data = _error_record(source, line, record, exc)
            out.write(json.dumps(data) + "\n")
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_orient(args: argparse.Namespace) -> int:
    """Handle ``orient``: digraph text per record, blank line separated."""
    solver = StSolver(logger=_logger())
    mode = SolveMode(args.mode)
    failed = False
    with _Output(args.out) as out:
        for source, line, record in _records(args):
            try:
                verdict = solver.decide(parse_graph6(record), mode)
            except StorientError as exc:
                failed = True
                sys.stderr.write(f"{source}:{line}: {exc}\n")
                continue
            if verdict.orientation is None:
                failed = True
                sys.stderr.write(
                    f"{source}:{line}: {record} has no {mode.value} orientation\n"
                )
                continue
            out.write(write_digraph(verdict.orientation) + "\n\n")
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    """Handle ``transform``: one validated trace (JSON line) per record."""
    logger = _logger()
    solver = StSolver(logger=logger)
    pipeline = _PIPELINES[args.mode]
    failed = False
    with _Output(args.out) as out:
        for source, line, record in _records(args):
            try:
                g = parse_graph6(record)
                verdict = solver.decide(g)
                if verdict.orientation is None:
                    failed = True
                    data = {
                        "source": source,
                        "line": line,
                        "input": record,
                        "error": {
                            "kind": "not_orientable",
                            "message": f"{record} has no semi-transitive orientation",
                            **verdict.to_dict(),
                        },
                    }
                else:
                    trace = pipeline(g, verdict.orientation, logger)
                    valid = validate_trace(trace)
                    failed = failed or not valid
                    data = {
                        "source": source,
                        "line": line,
                        "input": record,
                        "valid": valid,
                        "trace": trace.to_dict(),
                    }
            except StorientError as exc:
                failed = True
                data = _error_record(source, line, record, exc)
            out.write(json.dumps(data) + "\n")
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    """Handle ``census``: a single JSON report, optionally a CSV class table."""
    report = run_census(
        args.n,
        connected_only=args.connected_only,
        workers=args.workers,
        logger=_logger(),
    )
    if args.out:
        report.save(Path(args.out), timing=args.timing)
    else:
        sys.stdout.write(report.to_json(timing=args.timing) + "\n")
    if args.csv:
        report.save_csv(Path(args.csv))
    return EXIT_OK


def _emit_graph(args: argparse.Namespace, g: Graph, out: TextIO, **extra) -> None:
    if not args.check:
        out.write(write_graph6(g) + "\n")
        return
    verdict = StSolver(logger=_logger()).decide(g)
    data = {**extra, "graph6": write_graph6(g), **verdict.to_dict()}
    out.write(json.dumps(data) + "\n")


def cmd_product(args: argparse.Namespace) -> int:
    g = parse_graph6(args.first)
    h = parse_graph6(args.second)
    with _Output(args.out) as out:
        _emit_graph(args, product(g, h, ProductKind(args.kind)), out)
    return EXIT_OK


def cmd_blowup(args: argparse.Namespace) -> int:
    failed = False
    with _Output(args.out) as out:
        for source, line, record in _records(args):
            try:
                blown = odd_girth_blowup(parse_graph6(record))
            except StorientError as exc:
                failed = True
                sys.stderr.write(f"{source}:{line}: {exc}\n")
                continue
            _emit_graph(args, blown, out, input=record)
    return EXIT_FAILURE if failed else EXIT_OK


def cmd_word(args: argparse.Namespace) -> int:
    word = Word.parse(args.word)
    with _Output(args.out) as out:
        _emit_graph(args, alternation_graph(word), out, alphabet=word.alphabet)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Create the top-level argument parser."""
    parser = argparse.ArgumentParser(
        prog="storient",
        description="Semi-transitive orientations of small graphs.",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="Log progress at INFO level."
    )
    subparsers = parser.add_subparsers(
        dest="command",
        required=True,
        help="Command: [check|orient|transform|census|product|blowup|word]",
    )

    def with_inputs(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "files", nargs="*", help="graph6 files (standard input if omitted)."
        )

    def with_out(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--out", help="Write the output to this file.")

    def with_mode(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--mode",
            choices=[m.value for m in SolveMode],
            default=SolveMode.SEMI_TRANSITIVE.value,
            help="Orientation kind to look for (default: semi_transitive).",
        )

    def with_check(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--check",
            action="store_true",
            help="Also decide semi-transitive orientability of the result.",
        )

    # ---------------------------- check ---------------------------- #
    check = subparsers.add_parser("check", help="Decide orientability.")
    with_inputs(check)
    with_mode(check)
    with_out(check)
    check.set_defaults(func=cmd_check)

    # ---------------------------- orient --------------------------- #
    orient = subparsers.add_parser("orient", help="Print orientation witnesses.")
    with_inputs(orient)
    with_mode(orient)
    with_out(orient)
    orient.set_defaults(func=cmd_orient)

    # --------------------------- transform ------------------------- #
    transform = subparsers.add_parser(
        "transform", help="Certified transformation traces."
    )
    transform.add_argument(
        "--mode",
        choices=sorted(_PIPELINES),
        required=True,
        help="Pipeline to run: to-empty, to-complete or to-matching.",
    )
    with_inputs(transform)
    with_out(transform)
    transform.set_defaults(func=cmd_transform)

    # ---------------------------- census --------------------------- #
    census = subparsers.add_parser("census", help="Exhaustive small-graph census.")
    census.add_argument("--n", type=int, required=True, help="Vertex count (<= 7).")
    census.add_argument(
        "--connected-only",
        action="store_true",
        help="Skip disconnected labeled graphs.",
    )
    census.add_argument(
        "--workers", type=int, default=None, help="Worker processes."
    )
    census.add_argument("--csv", help="Write the class table as CSV.")
    census.add_argument(
        "--timing",
        action="store_true",
        help="Include the elapsed time in the report.",
    )
    with_out(census)
    census.set_defaults(func=cmd_census)

    # --------------------------- product --------------------------- #
    prod = subparsers.add_parser("product", help="Product of two graph6 graphs.")
    prod.add_argument("first")
    prod.add_argument("second")
    prod.add_argument(
        "--kind", choices=[k.value for k in ProductKind], required=True
    )
    with_check(prod)
    with_out(prod)
    prod.set_defaults(func=cmd_product)

    # ---------------------------- blowup --------------------------- #
    blowup = subparsers.add_parser(
        "blowup", help="Join the ends of every simple 3-edge path."
    )
    with_inputs(blowup)
    with_check(blowup)
    with_out(blowup)
    blowup.set_defaults(func=cmd_blowup)

    # ----------------------------- word ---------------------------- #
    word = subparsers.add_parser("word", help="Alternation graph of a word.")
    word.add_argument("word")
    with_check(word)
    with_out(word)
    word.set_defaults(func=cmd_word)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    _logger().setLevel(level)
    try:
        return args.func(args)
    except StorientError as exc:
        sys.stderr.write(f"storient: {exc}\n")
        return EXIT_FAILURE
    except OSError as exc:
        sys.stderr.write(f"storient: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
