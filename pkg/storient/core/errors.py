"""
Exception hierarchy of the orientation engine.

Every error raised on purpose by the package derives from
:class:`StorientError`, so the command line layer can turn it into a
per-record JSON error without swallowing programming errors.
"""

from typing import Any, Dict, Optional


class StorientError(Exception):
    """Base class of all deliberate errors raised by the package."""

    kind = "error"

    def to_dict(self) -> Dict[str, Any]:
        """
        Serialise the error for JSON reporting.

        Returns
        -------
        Dict[str, Any]
            ``{"kind": <error kind>, "message": <text>}``.
        """
        return {"kind": self.kind, "message": str(self)}


class GraphFormatError(StorientError):
    """
    Malformed textual input (graph6 record or digraph text).

    Attributes
    ----------
    offset : int
        Zero-based byte offset of the first offending character.
    """

    kind = "format"

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["offset"] = self.offset
        return data


class UnsupportedSizeError(StorientError):
    """A vertex cap of some operation was exceeded."""

    kind = "unsupported_size"


class GraphArgumentError(StorientError):
    """Invalid generator parameter or graph edit."""

    kind = "argument"


class PreconditionError(StorientError):
    """An operation was called on input violating its precondition."""

    kind = "precondition"


class SearchBudgetExceeded(StorientError):
    """
    The orientation search exhausted its node budget.

    Attributes
    ----------
    stats : Any
        The partial :class:`~storient.solver.verdict.SearchStats` collected
        before the search was aborted.
    """

    kind = "budget"

    def __init__(self, message: str, stats: Optional[Any] = None) -> None:
        super().__init__(message)
        self.stats = stats

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        if self.stats is not None:
            data["stats"] = self.stats.to_dict()
        return data
