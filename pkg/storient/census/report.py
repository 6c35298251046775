"""
Census result document.

The JSON form is versioned with ``"schema"`` and lists the isomorphism
classes sorted by canonical code.  The elapsed time is written only on
request, so that reports of runs with different worker counts compare
byte for byte.
"""

import json
import pathlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from storient.constants import _DontChangeMe
from storient.graph.canonical import CanonicalCode


@dataclass(frozen=True, order=True)
class CensusClass:
    """One non-orientable isomorphism class with a graph6 representative."""

    code: CanonicalCode
    graph6: str = field(compare=False)
    connected: bool = field(compare=False)

    def to_dict(self) -> Dict[str, Any]:
        data = self.code.to_dict()
        data.update({"graph6": self.graph6, "connected": self.connected})
        return data


@dataclass
class CensusReport:
    """
    Attributes
    ----------
    n : int
        Vertex count of the enumerated graphs.
    total_labeled : int
        ``2 ** (n choose 2)``.
    examined_labeled : int
        Labeled graphs that went through the solver (all of them unless
        ``connected_only`` skipped the disconnected ones).
    non_orientable_labeled : int
        Examined labeled graphs without a semi-transitive orientation.
    filtered_labeled : int
        The part of ``non_orientable_labeled`` decided by the neighbourhood
        prefilter.
    classes : List[CensusClass]
        Duplicate-free, sorted by canonical code.
    connected_only : bool
    elapsed : float
        Wall-clock seconds.
    """

    n: int
    total_labeled: int
    examined_labeled: int
    non_orientable_labeled: int
    filtered_labeled: int
    classes: List[CensusClass]
    connected_only: bool
    elapsed: float = 0.0

    @property
    def connected_class_count(self) -> int:
        return sum(1 for c in self.classes if c.connected)

    @property
    def non_orientable_iso_classes(self) -> List[CanonicalCode]:
        return [c.code for c in self.classes]

    def to_dict(self, timing: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": _DontChangeMe.JSON_SCHEMA_VERSION,
            "n": self.n,
            "connected_only": self.connected_only,
            "total_labeled": self.total_labeled,
            "examined_labeled": self.examined_labeled,
            "non_orientable_labeled": self.non_orientable_labeled,
            "filtered_labeled": self.filtered_labeled,
            "class_count": len(self.classes),
            "connected_class_count": self.connected_class_count,
            "classes": [c.to_dict() for c in self.classes],
        }
        if timing:
            data["elapsed"] = round(self.elapsed, 3)
        return data

    def to_json(self, timing: bool = False, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)

    def to_dataframe(self) -> pd.DataFrame:
        """One row per class: ``n``, ``bits``, ``graph6``, ``connected``."""
        rows = [
            {
                "n": c.code.n,
                "bits": c.code.bits,
                "graph6": c.graph6,
                "connected": c.connected,
                "edges": c.code.to_graph().edge_count(),
            }
            for c in self.classes
        ]
        columns = ["n", "bits", "graph6", "connected", "edges"]
        return pd.DataFrame(rows, columns=columns)

    def save(self, path: pathlib.Path, timing: bool = False) -> None:
        path = pathlib.Path(path)
        path.write_text(self.to_json(timing) + "\n", encoding="utf-8")

    def save_csv(self, path: pathlib.Path) -> None:
        self.to_dataframe().to_csv(path, index=False)
