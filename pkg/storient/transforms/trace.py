"""
Certified transformation traces.

A :class:`TransformTrace` is the list of states a pipeline went through.
``steps[0]`` is the input (operation kind ``input``); every later step
records the operation applied to the previous state together with the
resulting graph and orientation.  :func:`validate_trace` re-derives every
graph from its predecessor and re-checks every orientation with the engine
predicates, so a trace can be verified without trusting the code that
produced it.

JSON layout::

    {"schema": 1,
     "steps": [{"op": {...}, "graph6": "...", "digraph": "n=3\\n0->1"}, ...]}
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from storient.constants import _DontChangeMe
from storient.core.errors import GraphArgumentError, GraphFormatError
from storient.graph.edits import EditOp, apply_edits
from storient.graph.graph import Graph
from storient.graph.graph6 import parse_graph6, write_graph6
from storient.orientation.digraph_text import parse_digraph, write_digraph
from storient.orientation.orientation import Orientation
from storient.orientation.predicates import is_transitive
from storient.orientation.shortcut import is_semi_transitive


class StepKind(str, Enum):
    INPUT = "input"
    DELETE_EDGE = "delete_edge"
    ADD_EDGE = "add_edge"
    LIFT_PATH = "lift_path"
    SUBDIVIDE_EDGE = "subdivide_edge"


class AdditionPhase(str, Enum):
    SEMI_TO_COMPARABILITY = "semi_to_comparability"
    TO_MULTIPARTITE = "to_multipartite"
    TO_COMPLETE = "to_complete"


_TRANSITIVE_PHASES = (AdditionPhase.TO_MULTIPARTITE, AdditionPhase.TO_COMPLETE)


@dataclass(frozen=True)
class TransformOp:
    """
    Descriptor of one operation.

    Attributes
    ----------
    kind : StepKind
        Operation kind.
    vertices : Tuple[int, ...]
        ``delete_edge``: the edge ``(u, v)``, ``u < v``.  ``add_edge``: the
        new arc ``(u, v)`` as oriented.  ``lift_path``: the path
        ``(u, v, w)``.  ``subdivide_edge``: the endpoints ``(x, y)`` that
        the new path joins.
    count : int
        Number of subdivision vertices (``subdivide_edge`` only).
    phase : AdditionPhase, optional
        Addition phase (``add_edge`` only).
    certificate : dict
        The vertices and levels that justify the choice.
    fallback : bool
        True when the choice came from the exhaustive fallback rather than
        the constructive rule.
    """

    kind: StepKind
    vertices: Tuple[int, ...] = ()
    count: int = 0
    phase: Optional[AdditionPhase] = None
    certificate: Dict[str, Any] = field(default_factory=dict)
    fallback: bool = False

    def edit_ops(self) -> Tuple[EditOp, ...]:
        """
        Graph edits that turn the previous graph into this step's graph.

        A subdivision step starts from the graph without ``xy`` and joins
        ``x`` and ``y`` through ``count`` new vertices.
        """
        vs = self.vertices
        if self.kind == StepKind.INPUT:
            return ()
        if self.kind == StepKind.DELETE_EDGE:
            return (EditOp.delete_edge(*vs),)
        if self.kind == StepKind.ADD_EDGE:
            return (EditOp.add_edge(*vs),)
        if self.kind == StepKind.LIFT_PATH:
            return (EditOp.lift_path(*vs),)
        return (EditOp.add_edge(*vs), EditOp.subdivide_edge(*vs, t=self.count))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": self.kind.value,
            "vertices": list(self.vertices),
        }
        if self.count:
            data["count"] = self.count
        if self.phase is not None:
            data["phase"] = self.phase.value
        if self.certificate:
            data["certificate"] = self.certificate
        if self.fallback:
            data["fallback"] = True
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TransformOp":
        phase = data.get("phase")
        return cls(
            kind=StepKind(data["kind"]),
            vertices=tuple(data.get("vertices", ())),
            count=int(data.get("count", 0)),
            phase=AdditionPhase(phase) if phase is not None else None,
            certificate=dict(data.get("certificate", {})),
            fallback=bool(data.get("fallback", False)),
        )


@dataclass(frozen=True)
class TransformStep:
    op: TransformOp
    graph: Graph
    orientation: Orientation

    def to_dict(self) -> Dict[str, Any]:
        return {
            "op": self.op.to_dict(),
            "graph6": write_graph6(self.graph),
            "digraph": write_digraph(self.orientation),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TransformStep":
        graph = parse_graph6(data["graph6"])
        orientation = parse_digraph(data["digraph"])
        if orientation.n != graph.n:
            raise GraphFormatError("digraph and graph6 disagree on n", 0)
        return cls(
            TransformOp.from_dict(data["op"]),
            graph,
            Orientation(graph, orientation.out),
        )


@dataclass
class TransformTrace:
    """
    Ordered states of a transformation, starting at the input.

    ``len(trace)`` is the number of operations, i.e. one less than the
    number of states.
    """

    steps: List[TransformStep] = field(default_factory=list)

    @classmethod
    def start(cls, graph: Graph, orientation: Orientation) -> "TransformTrace":
        return cls([TransformStep(TransformOp(StepKind.INPUT), graph, orientation)])

    def append(self, step: TransformStep) -> None:
        self.steps.append(step)

    def __len__(self) -> int:
        return max(len(self.steps) - 1, 0)

    @property
    def final(self) -> Optional[TransformStep]:
        return self.steps[-1] if self.steps else None

    @property
    def operations(self) -> List[TransformOp]:
        return [step.op for step in self.steps[1:]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": _DontChangeMe.JSON_SCHEMA_VERSION,
            "steps": [step.to_dict() for step in self.steps],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "TransformTrace":
        """
        Raises
        ------
        GraphFormatError
            On an unsupported schema or a malformed graph6 / digraph field.
        """
        data = json.loads(text)
        if data.get("schema") != _DontChangeMe.JSON_SCHEMA_VERSION:
            raise GraphFormatError(
                f"unsupported trace schema {data.get('schema')}", 0
            )
        return cls([TransformStep.from_dict(step) for step in data["steps"]])


def _step_is_valid(prev: TransformStep, step: TransformStep) -> bool:
    op = step.op
    if op.kind == StepKind.INPUT:
        return False
    try:
        expected = apply_edits(prev.graph, op.edit_ops())
    except (GraphArgumentError, TypeError):
        return False
    if expected != step.graph:
        return False
    if not step.orientation.agrees_with(prev.orientation):
        return False
    if op.kind == StepKind.ADD_EDGE and not step.orientation.has_arc(*op.vertices):
        return False
    if op.phase in _TRANSITIVE_PHASES and not is_transitive(step.orientation):
        return False
    return True


def validate_trace(trace: TransformTrace) -> bool:
    """
    Re-check every step of *trace*.

    A trace is valid when its first step is the input, every orientation
    belongs to its step's graph and is semi-transitive, every graph is the
    declared edit of its predecessor, every orientation agrees with its
    predecessor on the shared edges, added arcs carry the declared
    direction, and the transitive addition phases keep the orientation
    transitive.  The empty trace is valid.
    """
    steps = trace.steps
    if not steps:
        return True
    if steps[0].op.kind != StepKind.INPUT:
        return False
    for step in steps:
        if step.orientation.base != step.graph:
            return False
        if not is_semi_transitive(step.orientation):
            return False
    return all(_step_is_valid(a, b) for a, b in zip(steps, steps[1:]))
