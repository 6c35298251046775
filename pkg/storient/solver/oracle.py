"""
Brute-force orientability oracle for cross-checking the solver on small
graphs: every acyclic orientation is enumerated and tested with the subset
shortcut oracle.
"""

from typing import Optional

from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.orientation.predicates import is_transitive
from storient.orientation.shortcut import acyclic_orientations, shortcut_oracle
from storient.solver.verdict import SolveMode


def oracle_orientation(
    g: Graph, mode: SolveMode = SolveMode.SEMI_TRANSITIVE
) -> Optional[Orientation]:
    """First acyclic orientation (enumeration order) with the requested property."""
    for o in acyclic_orientations(g):
        if SolveMode(mode) == SolveMode.TRANSITIVE:
            if is_transitive(o):
                return o
        elif shortcut_oracle(o) is None:
            return o
    return None


def orientability_oracle(
    g: Graph, mode: SolveMode = SolveMode.SEMI_TRANSITIVE
) -> bool:
    return oracle_orientation(g, mode) is not None
