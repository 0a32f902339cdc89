"""
Extension domain models.

Cocycle tables are dense (n, n, k, k) integer arrays indexed [ξ, η]; the
AutoMatrix views are built on demand. Materialized extensions index the pair
(ξ, x) as ξ·|A| + rank(x), rank being the lexicographic position of x.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from loopext.domain.abelian.models import AbGroup, AbVec, AutoMatrix, IntArray
from loopext.domain.extensions.exceptions import CocycleShapeError, PhiDomainError
from loopext.domain.finite_loop.models import CayleyTable, FiniteLoop
from loopext.domain.mapping_groups.models import Perm, PermGroup


def _frozen(array: np.ndarray) -> IntArray:
    array = np.array(array, dtype=np.int64, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class Cocycle:
    """A pair of tables P, Q : L×L → Aut(A)."""

    base: FiniteLoop
    kernel: AbGroup
    P: IntArray
    Q: IntArray

    def __post_init__(self) -> None:
        n, k = self.base.order, self.kernel.rank
        expected = (n, n, k, k)
        for name in ("P", "Q"):
            array = np.asarray(getattr(self, name))
            if array.shape != expected:
                raise CocycleShapeError(name, array.shape, expected)
            object.__setattr__(self, name, _frozen(self.kernel.reduce(array)))

    def P_at(self, xi: int, eta: int) -> AutoMatrix:
        return AutoMatrix.from_array(self.kernel, self.P[xi, eta])

    def Q_at(self, xi: int, eta: int) -> AutoMatrix:
        return AutoMatrix.from_array(self.kernel, self.Q[xi, eta])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cocycle):
            return NotImplemented
        return (
            self.base == other.base
            and self.kernel == other.kernel
            and np.array_equal(self.P, other.P)
            and np.array_equal(self.Q, other.Q)
        )

    def __hash__(self) -> int:
        return hash((self.base, self.kernel, self.P.tobytes(), self.Q.tobytes()))


@dataclass(frozen=True)
class CocycleReport:
    """Outcome of checking normalization and invertibility of a cocycle."""

    problems: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.problems

    def summary(self) -> str:
        return "valid cocycle" if self.valid else "; ".join(self.problems)


@dataclass(frozen=True)
class ExtElement:
    """A pair (ξ, x) of the extension F(P, Q)."""

    base: int
    fiber: AbVec

    def __str__(self) -> str:
        return f"({self.base},{self.fiber})"


@dataclass(frozen=True, eq=False)
class PhiHom:
    """A verified homomorphism Inn(L) → Aut(A), stored element by element."""

    domain: PermGroup
    kernel: AbGroup
    images: Mapping[Perm, IntArray] = field(repr=False)

    def matrix(self, perm: Perm, label: str = "") -> IntArray:
        try:
            return self.images[perm]
        except KeyError:
            raise PhiDomainError(perm, label) from None

    def __call__(self, perm: Perm) -> AutoMatrix:
        return AutoMatrix.from_array(self.kernel, self.matrix(perm))

    @property
    def is_trivial(self) -> bool:
        eye = np.eye(self.kernel.rank, dtype=np.int64)
        return all(np.array_equal(m, eye) for m in self.images.values())

    def items(self) -> list[tuple[Perm, IntArray]]:
        return [(perm, self.images[perm]) for perm in self.domain.elements]


@dataclass(frozen=True)
class TQuasigroupParams:
    """x·y = φx + ψy + c over an abelian group."""

    group: AbGroup
    phi: AutoMatrix
    psi: AutoMatrix
    c: AbVec

    def __post_init__(self) -> None:
        for value in (self.phi, self.psi, self.c):
            if value.group != self.group:
                raise CocycleShapeError(
                    "T-quasigroup parameter", (value.group.rank,), (self.group.rank,)
                )


@dataclass(frozen=True, eq=False)
class TQuasigroup:
    """A T-quasigroup table with the divisions given by its closed forms."""

    params: TQuasigroupParams
    table: CayleyTable
    ldiv_table: CayleyTable
    rdiv_table: CayleyTable
