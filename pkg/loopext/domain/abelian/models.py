"""
Abelian kernel models.

A homocyclic group (ℤ_m)^k with m ≥ 2, or the free module ℤ^k when m = 0.
Elements are coordinate tuples; automorphisms are k×k integer matrices whose
determinant is a unit of ℤ_m (±1 for ℤ^k).
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np
import numpy.typing as npt
import sympy

from loopext.domain.abelian.exceptions import (
    AbelianError,
    InfiniteGroupError,
    InvalidVectorError,
    NotAutomorphismError,
)

IntArray = npt.NDArray[np.int64]


@dataclass(frozen=True)
class AbGroup:
    """(ℤ_m)^k; ``modulus == 0`` stands for ℤ^k."""

    modulus: int
    rank: int

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise AbelianError(f"Modulus must be 0 or at least 2, got {self.modulus}")
        if self.rank < 1:
            raise AbelianError(f"Rank must be at least 1, got {self.rank}")

    @property
    def is_finite(self) -> bool:
        return self.modulus != 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteGroupError("Counting elements")
        return self.modulus**self.rank

    @property
    def spec(self) -> str:
        return f"z{self.modulus}^{self.rank}"

    def __str__(self) -> str:
        return self.spec

    def reduce(self, values: npt.ArrayLike) -> IntArray:
        array = np.asarray(values, dtype=np.int64)
        return array % self.modulus if self.is_finite else array

    def is_unit(self, value: int) -> bool:
        if self.is_finite:
            return gcd(value % self.modulus, self.modulus) == 1
        return value in (1, -1)

    def vector(self, values: npt.ArrayLike) -> "AbVec":
        """Build an element, reducing the coordinates first."""
        return AbVec(self, tuple(int(v) for v in self.reduce(values)))

    @property
    def zero(self) -> "AbVec":
        return AbVec(self, (0,) * self.rank)

    @cached_property
    def rank_weights(self) -> IntArray:
        """Place values of the base-m digits, most significant first."""
        if not self.is_finite:
            raise InfiniteGroupError("Ranking elements")
        return self.modulus ** np.arange(self.rank - 1, -1, -1, dtype=np.int64)

    @cached_property
    def element_array(self) -> IntArray:
        """All elements as rows, in lexicographic order."""
        if not self.is_finite:
            raise InfiniteGroupError("Enumerating elements")
        ranks = np.arange(self.order, dtype=np.int64)
        return (ranks[:, None] // self.rank_weights[None, :]) % self.modulus

    def elements(self) -> list["AbVec"]:
        return [AbVec(self, tuple(int(v) for v in row)) for row in self.element_array]

    def rank_of(self, vector: "AbVec") -> int:
        return int(np.dot(np.asarray(vector.coords, dtype=np.int64), self.rank_weights))

    def vector_at(self, index: int) -> "AbVec":
        return AbVec(self, tuple(int(v) for v in self.element_array[index]))

    def identity_matrix(self) -> "AutoMatrix":
        return AutoMatrix.from_array(self, np.eye(self.rank, dtype=np.int64))


@dataclass(frozen=True)
class AbVec:
    """An element of an AbGroup."""

    group: AbGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.group.rank:
            raise InvalidVectorError(self.coords, self.group.spec)
        if self.group.is_finite and not all(
            0 <= c < self.group.modulus for c in self.coords
        ):
            raise InvalidVectorError(self.coords, self.group.spec)

    @property
    def array(self) -> IntArray:
        return np.asarray(self.coords, dtype=np.int64)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


def integer_determinant(array: npt.ArrayLike) -> int:
    return int(sympy.Matrix(np.asarray(array, dtype=np.int64).tolist()).det())


@dataclass(frozen=True)
class AutoMatrix:
    """An automorphism of an AbGroup, stored as a reduced integer matrix."""

    group: AbGroup
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = self.group.rank
        if len(self.entries) != k or any(len(row) != k for row in self.entries):
            raise AbelianError(f"Automorphisms of {self.group} are {k}×{k} matrices")
        det = integer_determinant(self.entries)
        if not self.group.is_unit(det):
            raise NotAutomorphismError(
                [list(row) for row in self.entries], det, self.group.spec
            )

    @classmethod
    def from_array(cls, group: AbGroup, array: npt.ArrayLike) -> "AutoMatrix":
        reduced = group.reduce(array)
        return cls(group, tuple(tuple(int(v) for v in row) for row in reduced))

    @property
    def array(self) -> IntArray:
        return np.asarray(self.entries, dtype=np.int64)

    @property
    def determinant(self) -> int:
        return integer_determinant(self.entries)

    @property
    def is_identity(self) -> bool:
        return np.array_equal(self.array, np.eye(self.group.rank, dtype=np.int64))

    def __str__(self) -> str:
        return " ".join(str(v) for row in self.entries for v in row)
