"""
Finite loop domain models.

Cayley tables are square numpy integer arrays. A FiniteLoop wraps a table that
is a Latin square with element 0 as its two-sided identity, and caches the two
division tables derived from it.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np
import numpy.typing as npt

from loopext.domain.finite_loop.exceptions import (
    ElementOutOfRangeError,
    InvalidLoopError,
    MissingInverseError,
    StructuralError,
)

CayleyTable = npt.NDArray[np.int32]


def as_cayley_table(data: Any) -> CayleyTable:
    """Coerce nested sequences into a read-only square table of elements."""
    try:
        array = np.asarray(data)
    except ValueError as err:
        raise StructuralError(f"Table rows have unequal lengths: {err}") from err
    if array.dtype == object:
        raise StructuralError("Table rows have unequal lengths")
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise StructuralError(
            f"Expected a non-empty n×n table, got shape {array.shape}"
        )
    if not np.issubdtype(array.dtype, np.integer):
        if not np.issubdtype(array.dtype, np.number) or not np.all(
            np.equal(np.mod(array, 1), 0)
        ):
            raise StructuralError("Table entries must be integers")
    n = array.shape[0]
    outside = np.argwhere((array < 0) | (array >= n))
    if outside.size:
        row, column = (int(v) for v in outside[0])
        raise StructuralError(
            f"Entry {int(array[row, column])} at row {row}, column {column} "
            f"is outside [0, {n})"
        )
    table = array.astype(np.int32, copy=True)
    table.flags.writeable = False
    return table


def _non_permutations(table: CayleyTable, axis: int) -> tuple[int, ...]:
    n = table.shape[0]
    ordered = np.sort(table, axis=axis)
    expected = np.arange(n)
    if axis == 1:
        bad = np.any(ordered != expected[None, :], axis=1)
    else:
        bad = np.any(ordered != expected[:, None], axis=0)
    return tuple(int(i) for i in np.flatnonzero(bad))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a table against the quasigroup and loop axioms."""

    order: int
    bad_rows: tuple[int, ...] = ()
    bad_columns: tuple[int, ...] = ()
    identity_problems: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not (self.bad_rows or self.bad_columns or self.identity_problems)

    @property
    def is_latin(self) -> bool:
        return not (self.bad_rows or self.bad_columns)

    def summary(self) -> str:
        if self.valid:
            return f"valid table of order {self.order}"
        parts = []
        if self.bad_rows:
            parts.append(f"rows {list(self.bad_rows)} are not permutations")
        if self.bad_columns:
            parts.append(f"columns {list(self.bad_columns)} are not permutations")
        parts.extend(self.identity_problems)
        return "; ".join(parts)


def inspect_table(table: CayleyTable, *, require_identity: bool) -> ValidationReport:
    """Check the Latin square property and, optionally, identity at 0."""
    n = table.shape[0]
    problems: list[str] = []
    if require_identity:
        expected = np.arange(n)
        if not np.array_equal(table[0, :], expected):
            problems.append("row 0 is not the identity row")
        if not np.array_equal(table[:, 0], expected):
            problems.append("column 0 is not the identity column")
    return ValidationReport(
        order=n,
        bad_rows=_non_permutations(table, axis=1),
        bad_columns=_non_permutations(table, axis=0),
        identity_problems=tuple(problems),
    )


@dataclass(frozen=True, eq=False)
class FiniteLoop:
    """A finite loop given by its Cayley table; element 0 is the identity."""

    table: CayleyTable

    def __post_init__(self) -> None:
        table = as_cayley_table(self.table)
        report = inspect_table(table, require_identity=True)
        if not report.valid:
            raise InvalidLoopError(report)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "FiniteLoop":
        return cls(as_cayley_table(rows))

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def ldiv_table(self) -> CayleyTable:
        """``ldiv_table[x, y]`` is the unique z with x·z = y."""
        n = self.order
        result = np.empty_like(self.table)
        rows = np.arange(n)[:, None]
        result[rows, self.table] = np.arange(n)[None, :]
        result.flags.writeable = False
        return result

    @cached_property
    def rdiv_table(self) -> CayleyTable:
        """``rdiv_table[y, x]`` is the unique z with z·x = y."""
        n = self.order
        result = np.empty_like(self.table)
        columns = np.arange(n)[None, :]
        result[self.table, columns] = np.arange(n)[:, None]
        result.flags.writeable = False
        return result

    def square(self, x: int) -> int:
        self._require(x)
        return int(self.table[x, x])

    def inverse(self, x: int) -> int:
        """Two-sided inverse of ``x``.

        Raises:
            MissingInverseError: If e/x and x\\e differ
        """
        self._require(x)
        left = int(self.rdiv_table[0, x])
        right = int(self.ldiv_table[x, 0])
        if left != right:
            raise MissingInverseError(x, left, right)
        return left

    def _require(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise ElementOutOfRangeError(x, self.order)

    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLoop):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    def __repr__(self) -> str:
        return f"FiniteLoop(order={self.order})"
