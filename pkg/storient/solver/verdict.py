"""
Result types of the orientation solver.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from storient.orientation.digraph_text import write_digraph
from storient.orientation.orientation import Orientation


class SolveMode(str, Enum):
    SEMI_TRANSITIVE = "semi_transitive"
    TRANSITIVE = "transitive"


class SolveStatus(str, Enum):
    ORIENTABLE = "orientable"
    NOT_ORIENTABLE = "not_orientable"
    FILTERED = "filtered"


@dataclass
class SearchStats:
    """Counters of one search: placement attempts and pruned placements."""

    nodes: int = 0
    prunings: int = 0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.prunings += other.prunings

    def to_dict(self) -> Dict[str, int]:
        return {"nodes": self.nodes, "prunings": self.prunings}


@dataclass(frozen=True)
class SolveVerdict:
    """
    Outcome of :func:`storient.solver.solver.decide`.

    ``orientation`` is set exactly for orientable verdicts, ``vertex``
    exactly for filtered ones (a vertex whose neighbourhood is not a
    comparability graph).
    """

    status: SolveStatus
    mode: SolveMode
    orientation: Optional[Orientation] = None
    vertex: Optional[int] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def orientable(self) -> bool:
        return self.status == SolveStatus.ORIENTABLE

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status.value,
            "mode": self.mode.value,
            "stats": self.stats.to_dict(),
        }
        if self.orientation is not None:
            data["digraph"] = write_digraph(self.orientation)
        if self.vertex is not None:
            data["filtered_vertex"] = self.vertex
        return data
