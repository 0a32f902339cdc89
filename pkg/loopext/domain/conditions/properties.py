"""
Exhaustive checks of the nine weak properties on finite loops.

Every identity is evaluated at once over all tuples with numpy fancy
indexing. The same expressions also run on partially filled tables during
the loop search, where a lookup involving an unset cell yields UNSET and the
instance is skipped.
"""

from collections.abc import Callable

import numpy as np

from loopext.domain.conditions.models import PropertyKind, PropertyResult, Witness
from loopext.domain.finite_loop.enumeration import UNSET
from loopext.domain.finite_loop.models import CayleyTable, FiniteLoop

Mul = Callable[[np.ndarray, np.ndarray], np.ndarray]
Sides = tuple[np.ndarray, np.ndarray]


def tuple_grid(n: int, arity: int) -> list[np.ndarray]:
    """All ``arity``-tuples over range(n) in lexicographic order, one array per slot."""
    r = np.arange(n)
    return [a.ravel() for a in np.meshgrid(*([r] * arity), indexing="ij")]


def first_failure(bad: np.ndarray, grid: list[np.ndarray]) -> Witness | None:
    hits = np.flatnonzero(bad)
    if hits.size == 0:
        return None
    i = int(hits[0])
    return tuple(int(coord[i]) for coord in grid)


def _monoassociative(mul: Mul, x: np.ndarray) -> Sides:
    x2 = mul(x, x)
    return mul(x, x2), mul(x2, x)


def _left_alternative(mul: Mul, x: np.ndarray, y: np.ndarray) -> Sides:
    return mul(x, mul(x, y)), mul(mul(x, x), y)


def _right_alternative(mul: Mul, x: np.ndarray, y: np.ndarray) -> Sides:
    return mul(mul(y, x), x), mul(y, mul(x, x))


def _flexible(mul: Mul, x: np.ndarray, y: np.ndarray) -> Sides:
    return mul(x, mul(y, x)), mul(mul(x, y), x)


def _left_bol(mul: Mul, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> Sides:
    return mul(x, mul(y, mul(x, z))), mul(mul(x, mul(y, x)), z)


def _right_bol(mul: Mul, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> Sides:
    return mul(mul(mul(z, x), y), x), mul(z, mul(mul(x, y), x))


def _associative(mul: Mul, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> Sides:
    return mul(x, mul(y, z)), mul(mul(x, y), z)


IDENTITIES: dict[PropertyKind, Callable[..., Sides]] = {
    PropertyKind.MONOASSOCIATIVE: _monoassociative,
    PropertyKind.LEFT_ALTERNATIVE: _left_alternative,
    PropertyKind.RIGHT_ALTERNATIVE: _right_alternative,
    PropertyKind.FLEXIBLE: _flexible,
    PropertyKind.LEFT_BOL: _left_bol,
    PropertyKind.RIGHT_BOL: _right_bol,
}


def _table_mul(table: CayleyTable) -> Mul:
    return lambda a, b: table[a, b]


def _partial_mul(table: np.ndarray) -> Mul:
    def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        known = (a != UNSET) & (b != UNSET)
        out = np.full(a.shape, UNSET, dtype=table.dtype)
        out[known] = table[a[known], b[known]]
        return out

    return mul


def _two_sided_inverse(L: FiniteLoop) -> PropertyResult:
    left = L.rdiv_table[0, :]
    right = L.ldiv_table[:, 0]
    witness = first_failure(left != right, [np.arange(L.order)])
    detail = ""
    if witness is not None:
        x = witness[0]
        detail = f"e/x = {int(left[x])} but x\\e = {int(right[x])}"
    return PropertyResult(
        PropertyKind.TWO_SIDED_INVERSE, witness is None, witness, detail
    )


def _inverse_property(L: FiniteLoop, kind: PropertyKind) -> PropertyResult:
    two_sided = _two_sided_inverse(L)
    if not two_sided.holds:
        return PropertyResult(
            kind, False, two_sided.witness, "no two-sided inverse: " + two_sided.detail
        )
    T = L.table
    inv = L.rdiv_table[0, :]
    x, y = grid = tuple_grid(L.order, 2)
    if kind is PropertyKind.LEFT_INVERSE:
        bad = T[inv[x], T[x, y]] != y
    else:
        bad = T[T[y, x], inv[x]] != y
    return PropertyResult(kind, not bad.any(), first_failure(bad, grid))


def has_property(L: FiniteLoop, kind: PropertyKind) -> PropertyResult:
    """
    Check ``kind`` on every tuple of ``L``.

    The witness is the lexicographically first failing tuple in the order
    (x), (x, y) or (x, y, z) of the variables of the identity. The inverse
    properties first require two-sided inverses and report the element
    lacking one.
    """
    if kind is PropertyKind.TWO_SIDED_INVERSE:
        return _two_sided_inverse(L)
    if kind.needs_inverses:
        return _inverse_property(L, kind)
    grid = tuple_grid(L.order, kind.arity)
    lhs, rhs = IDENTITIES[kind](_table_mul(L.table), *grid)
    bad = lhs != rhs
    return PropertyResult(kind, not bad.any(), first_failure(bad, grid))


def property_flags(L: FiniteLoop) -> dict[PropertyKind, PropertyResult]:
    return {kind: has_property(L, kind) for kind in PropertyKind}


def associativity_result(L: FiniteLoop) -> tuple[bool, Witness | None]:
    grid = tuple_grid(L.order, 3)
    lhs, rhs = _associative(_table_mul(L.table), *grid)
    bad = lhs != rhs
    return not bad.any(), first_failure(bad, grid)


def _partial_rejector(
    identity: Callable[..., Sides], arity: int
) -> Callable[[np.ndarray], bool]:
    grids: dict[int, list[np.ndarray]] = {}

    def rejects(table: np.ndarray) -> bool:
        n = table.shape[0]
        grid = grids.setdefault(n, tuple_grid(n, arity))
        lhs, rhs = identity(_partial_mul(table), *grid)
        return bool(np.any((lhs != rhs) & (lhs != UNSET) & (rhs != UNSET)))

    return rejects


def partial_rejector(kind: PropertyKind) -> Callable[[np.ndarray], bool] | None:
    """
    A check that fails a partially filled square as soon as a fully
    determined instance of the identity fails; None for inverse properties.
    """
    identity = IDENTITIES.get(kind)
    if identity is None:
        return None
    return _partial_rejector(identity, kind.arity)


def associative_partial_rejector() -> Callable[[np.ndarray], bool]:
    return _partial_rejector(_associative, 3)
