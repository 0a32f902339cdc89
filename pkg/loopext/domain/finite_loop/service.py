"""
Finite loop operations.

Table arithmetic, translations, inverses and the opposite loop. All functions
are pure; divisions are answered from the tables cached on FiniteLoop.
"""

import itertools
from typing import Any

import numpy as np

from loopext.domain.finite_loop.exceptions import (
    ElementOutOfRangeError,
    MissingInverseError,
)
from loopext.domain.finite_loop.models import (
    CayleyTable,
    FiniteLoop,
    ValidationReport,
    as_cayley_table,
    inspect_table,
)
from loopext.domain.mapping_groups.models import Perm


def validate_quasigroup(table: Any) -> ValidationReport:
    """Report every row and column that is not a permutation.

    Raises:
        StructuralError: If ``table`` is not a square array with entries in [0, n)
    """
    return inspect_table(as_cayley_table(table), require_identity=False)


def validate_loop(table: Any) -> ValidationReport:
    """Latin square check plus the requirement that 0 is a two-sided identity."""
    return inspect_table(as_cayley_table(table), require_identity=True)


def _check(L: FiniteLoop, *elements: int) -> None:
    for element in elements:
        if not 0 <= element < L.order:
            raise ElementOutOfRangeError(element, L.order)


def mul(L: FiniteLoop, x: int, y: int) -> int:
    _check(L, x, y)
    return int(L.table[x, y])


def ldiv(L: FiniteLoop, x: int, y: int) -> int:
    """x\\y, the unique z with x·z = y."""
    _check(L, x, y)
    return int(L.ldiv_table[x, y])


def rdiv(L: FiniteLoop, y: int, x: int) -> int:
    """y/x, the unique z with z·x = y."""
    _check(L, x, y)
    return int(L.rdiv_table[y, x])


def square(L: FiniteLoop, x: int) -> int:
    return L.square(x)


def left_translation(L: FiniteLoop, x: int) -> Perm:
    """λ_x : y ↦ x·y."""
    _check(L, x)
    return Perm(tuple(int(v) for v in L.table[x, :]))


def right_translation(L: FiniteLoop, x: int) -> Perm:
    """ρ_x : y ↦ y·x."""
    _check(L, x)
    return Perm(tuple(int(v) for v in L.table[:, x]))


def opposite(L: FiniteLoop) -> FiniteLoop:
    """The loop with x⋆y = y·x."""
    return FiniteLoop(L.table.T.copy())


def left_inverse_elem(L: FiniteLoop, x: int) -> int:
    """e/x."""
    return rdiv(L, 0, x)


def right_inverse_elem(L: FiniteLoop, x: int) -> int:
    """x\\e."""
    return ldiv(L, x, 0)


def inverse(L: FiniteLoop, x: int) -> int:
    """Two-sided inverse of ``x``.

    Raises:
        MissingInverseError: If e/x and x\\e differ
    """
    return L.inverse(x)


def inverse_table(L: FiniteLoop) -> np.ndarray:
    """Vector of two-sided inverses; raises on the first element lacking one."""
    left = L.rdiv_table[0, :]
    right = L.ldiv_table[:, 0]
    mismatch = np.flatnonzero(left != right)
    if mismatch.size:
        x = int(mismatch[0])
        raise MissingInverseError(x, int(left[x]), int(right[x]))
    return left.astype(np.int64)


def find_identity(table: Any) -> int | None:
    """Index of a two-sided identity of a table, or None."""
    table = as_cayley_table(table)
    n = table.shape[0]
    expected = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e, :], expected) and np.array_equal(
            table[:, e], expected
        ):
            return e
    return None


def associativity_witness(table: CayleyTable) -> tuple[int, int, int] | None:
    """Lexicographically first (x, y, z) with x·yz ≠ xy·z, if any."""
    n = table.shape[0]
    r = np.arange(n)
    x, y, z = (a.ravel() for a in np.meshgrid(r, r, r, indexing="ij"))
    bad = np.flatnonzero(table[x, table[y, z]] != table[table[x, y], z])
    if bad.size == 0:
        return None
    i = int(bad[0])
    return int(x[i]), int(y[i]), int(z[i])


def is_associative(L: FiniteLoop) -> bool:
    return associativity_witness(L.table) is None


def cyclic_group(n: int) -> FiniteLoop:
    """ℤ_n under addition."""
    r = np.arange(n)
    return FiniteLoop((r[:, None] + r[None, :]) % n)


def symmetric_group(n: int) -> FiniteLoop:
    """
    S_n on the permutations of {0..n-1} in lexicographic order, composed as
    (p·q)(i) = p(q(i)).
    """
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    rows = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FiniteLoop.from_rows(rows)
