"""
Three edit sequences that end in the wheel ``W5`` (hub ``5``, rim
``0 1 2 3 4``): deleting edges from ``K6``, adding edges to the empty
graph on six vertices, and contracting one half of every subdivided edge
of the fully subdivided ``W5``.
"""

from dataclasses import dataclass
from typing import List, Tuple

from storient.graph.edits import EditOp, apply_edits
from storient.graph.generators import complete, empty, wheel
from storient.graph.graph import Graph

W5_NON_EDGES = ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


@dataclass(frozen=True)
class WheelRecipe:
    name: str
    start: Graph
    ops: Tuple[EditOp, ...]


def _deletion_recipe() -> WheelRecipe:
    ops = tuple(EditOp.delete_edge(u, v) for u, v in W5_NON_EDGES)
    return WheelRecipe("delete_from_k6", complete(6), ops)


def _addition_recipe() -> WheelRecipe:
    ops = tuple(EditOp.add_edge(e.u, e.v) for e in wheel(5).edges())
    return WheelRecipe("add_to_empty", empty(6), ops)


def _contraction_recipe() -> WheelRecipe:
    """
    Edge ``i`` of ``W5`` (sorted) is subdivided by vertex ``6 + i``; the
    contractions run from the last subdivided edge down so that deleting
    ``6 + i`` never shifts a vertex still to be contracted.
    """
    edges = wheel(5).edges()
    subdivided = apply_edits(
        wheel(5), tuple(EditOp.subdivide_edge(e.u, e.v) for e in edges)
    )
    ops = tuple(
        EditOp.contract_edge(e.u, 6 + i) for i, e in reversed(list(enumerate(edges)))
    )
    return WheelRecipe("contract_subdivided_w5", subdivided, ops)


def wheel_recipes() -> List[WheelRecipe]:
    return [_deletion_recipe(), _addition_recipe(), _contraction_recipe()]


def apply_recipe(recipe: WheelRecipe) -> Graph:
    return apply_edits(recipe.start, recipe.ops)
