"""
Cocycle identities deciding whether F(P, Q) inherits a property from L.

Each property has a list of matrix identities in P and Q evaluated for all
tuples (ξ), (ξ, η) or (ξ, η, ζ). Sums such as P(ξ, ξ) + Q(ξ, ξ) are plain
endomorphisms of A; they are added entrywise mod m and never inverted.
Components are numbered in the order listed, e.g. H1, H2, H3.
"""

from collections.abc import Callable

import numpy as np

from loopext.domain.abelian import batch
from loopext.domain.abelian.models import IntArray
from loopext.domain.conditions.models import (
    ConditionResult,
    ConditionStatus,
    PropertyKind,
)
from loopext.domain.conditions.properties import tuple_grid
from loopext.domain.extensions.models import Cocycle, ExtElement
from loopext.domain.extensions.service import ext_mul
from loopext.domain.finite_loop.service import inverse_table

Component = tuple[IntArray, IntArray]


class _Terms:
    """Reduced arithmetic on stacks of kernel matrices of one cocycle."""

    def __init__(self, cocycle: Cocycle) -> None:
        self.cocycle = cocycle
        self.T = cocycle.base.table.astype(np.int64)
        self.P = cocycle.P
        self.Q = cocycle.Q
        self.kernel = cocycle.kernel
        self.m = cocycle.kernel.modulus

    def mm(self, *factors: np.ndarray) -> IntArray:
        return batch.matmul(*factors, modulus=self.m)

    def add(self, *terms: np.ndarray) -> IntArray:
        return batch.reduce(sum(terms), self.m)

    def inv(self, stack: np.ndarray) -> IntArray:
        return batch.inverse(stack, self.kernel)

    def square_sum(self, xi: np.ndarray) -> IntArray:
        """P(ξ, ξ) + Q(ξ, ξ), the fiber map of (ξ, x)²."""
        return self.add(self.P[xi, xi], self.Q[xi, xi])


def _two_sided_inverse(t: _Terms, xi: np.ndarray) -> list[Component]:
    i = inverse_table(t.cocycle.base)[xi]
    return [(t.P[xi, i], t.mm(t.Q[xi, i], t.inv(t.P[i, xi]), t.Q[i, xi]))]


def _left_inverse(t: _Terms, xi: np.ndarray, eta: np.ndarray) -> list[Component]:
    i = inverse_table(t.cocycle.base)[xi]
    xe = t.T[xi, eta]
    q_inv = t.inv(t.Q[xi, eta])
    return [
        (t.Q[i, xe], q_inv),
        (t.P[i, xe], t.mm(q_inv, t.P[xi, eta], t.inv(t.Q[i, xi]), t.P[i, xi])),
    ]


def _right_inverse(t: _Terms, xi: np.ndarray, eta: np.ndarray) -> list[Component]:
    j = inverse_table(t.cocycle.base)[eta]
    xe = t.T[xi, eta]
    p_inv = t.inv(t.P[xi, eta])
    return [
        (t.P[xe, j], p_inv),
        (t.Q[xe, j], t.mm(p_inv, t.Q[xi, eta], t.inv(t.P[eta, j]), t.Q[eta, j])),
    ]


def _monoassociative(t: _Terms, xi: np.ndarray) -> list[Component]:
    s = t.T[xi, xi]
    S = t.square_sum(xi)
    return [
        (
            t.add(t.P[xi, s], t.mm(t.Q[xi, s], S)),
            t.add(t.mm(t.P[s, xi], S), t.Q[s, xi]),
        )
    ]


def _left_alternative(t: _Terms, xi: np.ndarray, eta: np.ndarray) -> list[Component]:
    s = t.T[xi, xi]
    xe = t.T[xi, eta]
    return [
        (t.mm(t.Q[xi, xe], t.Q[xi, eta]), t.Q[s, eta]),
        (
            t.add(t.P[xi, xe], t.mm(t.Q[xi, xe], t.P[xi, eta])),
            t.mm(t.P[s, eta], t.square_sum(xi)),
        ),
    ]


def _right_alternative(t: _Terms, xi: np.ndarray, eta: np.ndarray) -> list[Component]:
    s = t.T[xi, xi]
    ex = t.T[eta, xi]
    return [
        (t.mm(t.P[ex, xi], t.P[eta, xi]), t.P[eta, s]),
        (
            t.add(t.mm(t.P[ex, xi], t.Q[eta, xi]), t.Q[ex, xi]),
            t.mm(t.Q[eta, s], t.square_sum(xi)),
        ),
    ]


def _flexible(t: _Terms, xi: np.ndarray, eta: np.ndarray) -> list[Component]:
    xe = t.T[xi, eta]
    ex = t.T[eta, xi]
    return [
        (t.mm(t.Q[xi, ex], t.P[eta, xi]), t.mm(t.P[xe, xi], t.Q[xi, eta])),
        (
            t.add(t.P[xi, ex], t.mm(t.Q[xi, ex], t.Q[eta, xi])),
            t.add(t.mm(t.P[xe, xi], t.P[xi, eta]), t.Q[xe, xi]),
        ),
    ]


def _left_bol(
    t: _Terms, xi: np.ndarray, eta: np.ndarray, zeta: np.ndarray
) -> list[Component]:
    xz = t.T[xi, zeta]
    a = t.T[eta, xz]
    ex = t.T[eta, xi]
    b = t.T[xi, ex]
    return [
        (t.mm(t.Q[xi, a], t.Q[eta, xz], t.Q[xi, zeta]), t.Q[b, zeta]),
        (t.mm(t.Q[xi, a], t.P[eta, xz]), t.mm(t.P[b, zeta], t.Q[xi, ex], t.P[eta, xi])),
        (
            t.add(t.P[xi, a], t.mm(t.Q[xi, a], t.Q[eta, xz], t.P[xi, zeta])),
            t.mm(t.P[b, zeta], t.add(t.P[xi, ex], t.mm(t.Q[xi, ex], t.Q[eta, xi]))),
        ),
    ]


def _right_bol(
    t: _Terms, xi: np.ndarray, eta: np.ndarray, zeta: np.ndarray
) -> list[Component]:
    xe = t.T[xi, eta]
    c = t.T[xe, xi]
    zx = t.T[zeta, xi]
    d = t.T[zx, eta]
    return [
        (t.P[zeta, c], t.mm(t.P[d, xi], t.P[zx, eta], t.P[zeta, xi])),
        (t.mm(t.Q[zeta, c], t.P[xe, xi], t.Q[xi, eta]), t.mm(t.P[d, xi], t.Q[zx, eta])),
        (
            t.mm(t.Q[zeta, c], t.add(t.mm(t.P[xe, xi], t.P[xi, eta]), t.Q[xe, xi])),
            t.add(t.mm(t.P[d, xi], t.P[zx, eta], t.Q[zeta, xi]), t.Q[d, xi]),
        ),
    ]


CONDITIONS: dict[PropertyKind, Callable[..., list[Component]]] = {
    PropertyKind.TWO_SIDED_INVERSE: _two_sided_inverse,
    PropertyKind.LEFT_INVERSE: _left_inverse,
    PropertyKind.RIGHT_INVERSE: _right_inverse,
    PropertyKind.MONOASSOCIATIVE: _monoassociative,
    PropertyKind.LEFT_ALTERNATIVE: _left_alternative,
    PropertyKind.RIGHT_ALTERNATIVE: _right_alternative,
    PropertyKind.FLEXIBLE: _flexible,
    PropertyKind.LEFT_BOL: _left_bol,
    PropertyKind.RIGHT_BOL: _right_bol,
}


def check_cocycle_condition(cocycle: Cocycle, kind: PropertyKind) -> ConditionResult:
    """
    Evaluate the cocycle identities of ``kind`` on every tuple.

    Raises:
        MissingInverseError: For the inverse properties when the base loop
            lacks two-sided inverses
    """
    grid = tuple_grid(cocycle.base.order, kind.arity)
    components = CONDITIONS[kind](_Terms(cocycle), *grid)
    failing = np.stack(
        [np.any(lhs != rhs, axis=(-2, -1)) for lhs, rhs in components]
    )
    bad = failing.any(axis=0)
    hits = np.flatnonzero(bad)
    if hits.size == 0:
        return ConditionResult(kind, ConditionStatus.HOLDS)
    index = int(hits[0])
    witness = tuple(int(coord[index]) for coord in grid)
    names = tuple(
        f"{kind.letter}{number}"
        for number, row in enumerate(failing, start=1)
        if row[index]
    )
    return ConditionResult(
        kind,
        ConditionStatus.FAILS,
        witness=witness,
        components=names,
        detail=f"components {', '.join(names)} fail",
    )


def monoassociative_expansion(
    cocycle: Cocycle, element: ExtElement
) -> tuple[ExtElement, ExtElement]:
    """
    (ξ, x)·(ξ, x)² and (ξ, x)²·(ξ, x) from the expanded fiber formulas.

    With S = P(ξ, ξ) + Q(ξ, ξ) and s = ξ²:
    left = (ξs, P(ξ, s)x + Q(ξ, s)Sx), right = (sξ, P(s, ξ)Sx + Q(s, ξ)x).
    """
    xi, x = element.base, element.fiber.array
    T = cocycle.base.table
    s = int(T[xi, xi])
    Sx = (cocycle.P[xi, xi] + cocycle.Q[xi, xi]) @ x
    left = cocycle.P[xi, s] @ x + cocycle.Q[xi, s] @ Sx
    right = cocycle.P[s, xi] @ Sx + cocycle.Q[s, xi] @ x
    kernel = cocycle.kernel
    return (
        ExtElement(int(T[xi, s]), kernel.vector(left)),
        ExtElement(int(T[s, xi]), kernel.vector(right)),
    )


def check_monoassociative_expansion(cocycle: Cocycle) -> ConditionResult:
    """Monoassociativity of F(P, Q) checked element by element via the expansion.

    The witness is (ξ, rank of x).
    """
    kernel = cocycle.kernel
    for xi in cocycle.base.elements:
        for rank, x in enumerate(kernel.elements()):
            left, right = monoassociative_expansion(cocycle, ExtElement(xi, x))
            if left != right:
                return ConditionResult(
                    PropertyKind.MONOASSOCIATIVE,
                    ConditionStatus.FAILS,
                    witness=(xi, rank),
                    detail=f"{left} != {right}",
                )
    return ConditionResult(PropertyKind.MONOASSOCIATIVE, ConditionStatus.HOLDS)


def _fiber_matrix(
    cocycle: Cocycle, evaluate: Callable[[np.ndarray], ExtElement]
) -> IntArray:
    k = cocycle.kernel.rank
    columns = [evaluate(unit).fiber.array for unit in np.eye(k, dtype=np.int64)]
    return np.stack(columns, axis=1)


def left_bol_substitution_matrices(
    cocycle: Cocycle, xi: int, eta: int, zeta: int
) -> dict[str, Component]:
    """
    Fiber coefficients of both sides of the left Bol identity in F(P, Q).

    For a = (ξ, x), b = (η, y), c = (ζ, z) the fibers of a(b(ac)) and
    (a(ba))c are linear in x, y and z. Setting two of them to zero leaves one
    matrix per side; the keys name the substitution. Each side is evaluated
    with ext_mul on unit fibers.
    """
    kernel = cocycle.kernel
    zero = np.zeros(kernel.rank, dtype=np.int64)

    def sides(
        x: np.ndarray, y: np.ndarray, z: np.ndarray
    ) -> tuple[ExtElement, ExtElement]:
        a = ExtElement(xi, kernel.vector(x))
        b = ExtElement(eta, kernel.vector(y))
        c = ExtElement(zeta, kernel.vector(z))
        left = ext_mul(cocycle, a, ext_mul(cocycle, b, ext_mul(cocycle, a, c)))
        right = ext_mul(cocycle, ext_mul(cocycle, a, ext_mul(cocycle, b, a)), c)
        return left, right

    substitutions = {
        "x=y=0": lambda u: (zero, zero, u),
        "x=z=0": lambda u: (zero, u, zero),
        "y=z=0": lambda u: (u, zero, zero),
    }
    result: dict[str, Component] = {}
    for key, place in substitutions.items():
        result[key] = (
            _fiber_matrix(cocycle, lambda u, place=place: sides(*place(u))[0]),
            _fiber_matrix(cocycle, lambda u, place=place: sides(*place(u))[1]),
        )
    return result
