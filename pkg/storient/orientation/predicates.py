"""
Digraph predicates: acyclicity, good partitions and transitivity.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from storient.core.bitset import bits, members
from storient.core.errors import PreconditionError
from storient.orientation.orientation import Orientation


@dataclass(frozen=True)
class GoodPartition:
    """
    Source-stripping levels ``V_1 .. V_m`` of an acyclic orientation.

    ``levels[0]`` is the set of sources; each later level is the set of
    sources left once the earlier levels are removed.  Levels are vertex
    masks.
    """

    levels: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.levels)

    def level_of(self) -> List[int]:
        """``level_of()[v]`` is the zero-based level index of ``v``."""
        size = sum(mask.bit_count() for mask in self.levels)
        result = [0] * size
        for i, mask in enumerate(self.levels):
            for v in bits(mask):
                result[v] = i
        return result

    def order(self) -> List[int]:
        """Levels concatenated, each in ascending vertex order."""
        return [v for mask in self.levels for v in bits(mask)]

    def as_lists(self) -> List[List[int]]:
        return [members(mask) for mask in self.levels]


def _strip_sources(o: Orientation) -> Tuple[List[int], int]:
    """Repeated source removal; returns the levels and the unremoved rest."""
    in_rows = o.in_rows()
    left = o.base.full
    levels = []
    while left:
        level = 0
        for v in bits(left):
            if not in_rows[v] & left:
                level |= 1 << v
        if not level:
            break
        levels.append(level)
        left &= ~level
    return levels, left


def is_acyclic(o: Orientation) -> bool:
    return not _strip_sources(o)[1]


def topological_order(o: Orientation) -> Optional[List[int]]:
    """A topological order (levels concatenated), ``None`` if cyclic."""
    levels, left = _strip_sources(o)
    if left:
        return None
    return [v for mask in levels for v in bits(mask)]


def topological_levels(o: Orientation) -> GoodPartition:
    """
    Raises
    ------
    PreconditionError
        If *o* has a directed cycle.
    """
    levels, left = _strip_sources(o)
    if left:
        raise PreconditionError(
            f"orientation has a directed cycle through {members(left)}"
        )
    return GoodPartition(tuple(levels))


def is_transitive(o: Orientation) -> bool:
    """Every directed 2-path ``u -> v -> w`` is closed by the arc ``u -> w``."""
    for u, row in enumerate(o.out):
        for v in bits(row):
            if o.out[v] & ~row:
                return False
    return True


def ancestors(o: Orientation, order: List[int]) -> List[int]:
    """
    ``ancestors(o, order)[v]`` is the set of vertices with a directed path to
    ``v``; *order* must be a topological order of *o*.
    """
    in_rows = o.in_rows()
    anc = [0] * o.n
    for v in order:
        mask = 0
        for p in bits(in_rows[v]):
            mask |= anc[p] | 1 << p
        anc[v] = mask
    return anc
