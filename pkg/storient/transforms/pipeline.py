"""
Executable transformation pipelines.

A pipeline is built from one registered operation name.  The operation is
registered (if not already) and then applied to the current state until it
reports that nothing is left to do; every state is recorded in a
:class:`~storient.transforms.trace.TransformTrace`.
"""

import logging
from typing import Optional

from storient.graph.graph import Graph
from storient.orientation.orientation import Orientation
from storient.transforms.operation_interface import require_semi_transitive
from storient.transforms.plugin_registrator import OperationRegistry
from storient.transforms.trace import TransformTrace


class TransformPipeline:
    """
    Repeats one operation on an oriented graph.

    Calling ``run(graph, orientation)`` checks that the orientation is
    semi-transitive and then applies the operation step by step.
    """

    def __init__(
        self, operation_name: str, logger: Optional[logging.Logger] = None
    ) -> None:
        self._logger = logger
        self._name = operation_name

        OperationRegistry.register(name=operation_name, logger=logger)
        self._operation = OperationRegistry.get(operation_name)

    def run(self, graph: Graph, orientation: Orientation) -> TransformTrace:
        """
        Execute the pipeline.

        Args:
            graph: Starting graph.
            orientation: Semi-transitive orientation of *graph*.

        Returns:
            The trace from the input to the terminal state.

        Raises:
            PreconditionError: If *orientation* is not a semi-transitive
                orientation of *graph*.
        """
        require_semi_transitive(graph, orientation)
        trace = TransformTrace.start(graph, orientation)
        while True:
            step = self._operation.apply(graph, orientation)
            if step is None:
                break
            trace.append(step)
            graph, orientation = step.graph, step.orientation
        if self._logger:
            self._logger.info(
                "[transforms] %s finished after %d steps (n=%d, edges=%d)",
                self._name,
                len(trace),
                graph.n,
                graph.edge_count(),
            )
        return trace


def delete_to_empty(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> TransformTrace:
    """Delete edges one by one down to the edgeless graph."""
    return TransformPipeline("delete_edge", logger).run(g, o)


def add_to_complete(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> TransformTrace:
    """Add edges one by one up to the complete graph."""
    return TransformPipeline("add_edge", logger).run(g, o)


def lift_to_matching(
    g: Graph, o: Orientation, logger: Optional[logging.Logger] = None
) -> TransformTrace:
    """Lift paths until every vertex has degree at most one."""
    return TransformPipeline("lift_path", logger).run(g, o)
