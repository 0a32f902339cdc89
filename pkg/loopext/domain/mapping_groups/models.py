"""
Permutation value types.

Perm is a bijection of {0..n-1} stored as its image tuple; PermGroup is a
finite permutation group materialized as a canonically ordered element tuple
together with the labelled generators it was closed from.
"""

from dataclasses import dataclass, field
from functools import cached_property

from loopext.domain.mapping_groups.exceptions import NotAPermutationError


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {0..n-1}; ``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise NotAPermutationError(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def apply(self, point: int) -> int:
        return self.images[point]

    __call__ = apply

    def fixes(self, point: int) -> bool:
        return self.images[point] == point

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        result: list[tuple[int, ...]] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen[point] = True
                point = self.images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_notation(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


@dataclass(frozen=True)
class LabelledPerm:
    """A generator together with the word it stands for, e.g. ``T(2)``."""

    label: str
    perm: Perm


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group with canonically sorted elements."""

    degree: int
    elements: tuple[Perm, ...]
    generators: tuple[LabelledPerm, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _members(self) -> dict[Perm, int]:
        return {perm: index for index, perm in enumerate(self.elements)}

    def __contains__(self, perm: object) -> bool:
        return perm in self._members

    def index_of(self, perm: Perm) -> int:
        return self._members[perm]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)
