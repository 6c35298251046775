"""
Top-level definitions for orientation-preserving operations.

Every concrete operation (edge deletion, edge addition, path lifting)
inherits from :class:`OperationInterface`.  The interface standardises how
operations receive a logger (optional) and how they perform one step on an
oriented graph via :py:meth:`apply`.
"""

import abc
import logging
from typing import Optional

from storient.core.errors import PreconditionError
from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.orientation.shortcut import find_shortcut
from storient.orientation.predicates import is_acyclic
from storient.transforms.trace import TransformStep


class OperationInterface(abc.ABC):
    """
    Abstract base class for all operations.

    Sub-classes must implement :py:meth:`apply`.  The ``name`` attribute is
    the identifier the operation is registered under; it defaults to
    ``None`` when not set.
    """

    name = None

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        """
        Initialise the operation base class.

        Parameters
        ----------
        logger : logging.Logger, optional
            Logger instance for operation use.  If ``None``, the operation
            will have ``self._logger`` set to ``None`` and skips logging.
        """
        self._logger = logger

    @property
    def logger(self) -> Optional[logging.Logger]:
        return self._logger

    @abc.abstractmethod
    def apply(
        self, graph: Graph, orientation: Orientation
    ) -> Optional[TransformStep]:
        """
        Perform one step on a semi-transitively oriented graph.

        Parameters
        ----------
        graph : Graph
            Current graph.
        orientation : Orientation
            Semi-transitive orientation of *graph*.

        Returns
        -------
        TransformStep or None
            The step taken, or ``None`` when the graph has reached the
            operation's terminal form and nothing is left to do.
        """
        pass


def require_semi_transitive(g: Graph, o: Orientation) -> None:
    """
    Raises
    ------
    PreconditionError
        If *o* does not orient *g* or is not semi-transitive.
    """
    if o.base != g:
        raise PreconditionError("orientation does not belong to the given graph")
    if not is_acyclic(o):
        raise PreconditionError("orientation has a directed cycle")
    shortcut = find_shortcut(o)
    if shortcut is not None:
        raise PreconditionError(
            f"orientation is not semi-transitive, shortcut {list(shortcut.path)}"
        )
