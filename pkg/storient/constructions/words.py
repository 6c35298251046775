"""
Words and their alternation graphs.

Two letters alternate in a word when the word restricted to them has no
letter twice in a row.  The alternation graph has the distinct letters,
sorted, as vertices and joins every alternating pair.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from storient.core.errors import GraphArgumentError, UnsupportedSizeError
from storient.graph.graph import MAX_VERTICES, Graph


@dataclass(frozen=True)
class Word:
    letters: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise GraphArgumentError("a word needs at least one letter")

    @classmethod
    def parse(cls, text: str) -> "Word":
        """
        Whitespace separated tokens when *text* contains whitespace,
        otherwise one letter per character.
        """
        text = text.strip()
        tokens = text.split() if any(c.isspace() for c in text) else list(text)
        return cls(tuple(tokens))

    @property
    def alphabet(self) -> List[str]:
        return sorted(set(self.letters))

    def restrict(self, a: str, b: str) -> List[str]:
        return [x for x in self.letters if x == a or x == b]

    def alternates(self, a: str, b: str) -> bool:
        sub = self.restrict(a, b)
        return all(x != y for x, y in zip(sub, sub[1:]))

    def __str__(self) -> str:
        if all(len(x) == 1 for x in self.letters):
            return "".join(self.letters)
        return " ".join(self.letters)


def alternation_graph(w: Word) -> Graph:
    """
    Raises
    ------
    UnsupportedSizeError
        If the word has more than 62 distinct letters.
    """
    alphabet = w.alphabet
    if len(alphabet) > MAX_VERTICES:
        raise UnsupportedSizeError(
            f"alphabet of {len(alphabet)} letters exceeds {MAX_VERTICES}"
        )
    edges = [
        (i, j)
        for (i, a), (j, b) in combinations(enumerate(alphabet), 2)
        if w.alternates(a, b)
    ]
    return Graph.from_edges(len(alphabet), edges)
