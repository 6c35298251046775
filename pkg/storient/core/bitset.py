"""
Bit tricks on Python integers used as vertex sets.

Vertex ``v`` is a member of a set ``mask`` when bit ``v`` is set.
"""

from typing import Iterable, Iterator, List


def bits(mask: int) -> Iterator[int]:
    """Yield the members of *mask* in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> List[int]:
    return list(bits(mask))


def lowest(mask: int) -> int:
    """Smallest member of a non-empty *mask*."""
    return (mask & -mask).bit_length() - 1


def from_members(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1
