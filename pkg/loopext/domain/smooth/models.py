"""
Smooth loop models.

A SmoothLoop is a loop structure on an open subset of ℝⁿ given by closed-form
operations. The operations accept sequences of floats or DualScalars, so one
definition serves both evaluation and differentiation.
"""

import abc
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from loopext.domain.conditions.models import ConditionStatus, PropertyKind
from loopext.domain.smooth.dual import Scalar, value_of
from loopext.domain.smooth.exceptions import DomainViolationError

FloatArray = npt.NDArray[np.float64]
Point = tuple[Scalar, ...]


class SmoothLoop(abc.ABC):
    """Interface of a differentiable loop in a single chart."""

    name: str = ""

    @property
    @abc.abstractmethod
    def dim(self) -> int:
        """Dimension n of the ambient ℝⁿ."""

    @property
    @abc.abstractmethod
    def identity(self) -> FloatArray:
        """The identity element e."""

    @abc.abstractmethod
    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        """x·y."""

    @abc.abstractmethod
    def ldiv(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        """x\\y, the unique z with x·z = y."""

    @abc.abstractmethod
    def rdiv(self, y: Sequence[Scalar], x: Sequence[Scalar]) -> Point:
        """y/x, the unique z with z·x = y."""

    @abc.abstractmethod
    def sample_point(self, rng: np.random.Generator) -> FloatArray:
        """A point drawn uniformly from the sampling box."""

    def contains(self, point: Sequence[Scalar]) -> bool:
        return len(point) == self.dim and all(
            np.isfinite(value_of(v)) for v in point
        )

    def check(self, point: Sequence[Scalar]) -> None:
        if not self.contains(point):
            raise DomainViolationError(self.name, [value_of(v) for v in point])

    def adjoint_inverse(self, eta: Sequence[float]) -> FloatArray | None:
        """Ad_{η⁻¹} for Lie groups, None for loops that are not groups."""
        return None

    def __str__(self) -> str:
        return self.name


def as_array(point: Sequence[Scalar]) -> FloatArray:
    return np.asarray([value_of(v) for v in point], dtype=np.float64)


@dataclass(frozen=True)
class ProlongedElement:
    """A pair (ξ, x) of the tangent prolongation, x ∈ T_e(L)."""

    base: FloatArray
    fiber: FloatArray


@dataclass(frozen=True)
class NumericReport:
    """Maximum residual of a sampled identity, with the sample that attained it."""

    kind: PropertyKind
    residual: float
    tolerance: float
    status: ConditionStatus
    witness: tuple[float, ...] | None = None
    samples: int = 0

    @property
    def passed(self) -> bool:
        return self.status is ConditionStatus.HOLDS


@dataclass(frozen=True)
class PropertyRow:
    """One row of the property suite: L, T(L) and the differential condition."""

    kind: PropertyKind
    residual_loop: float
    residual_prolongation: float
    condition: NumericReport
    holds_loop: bool
    holds_prolongation: bool
    witness: tuple[float, ...] | None = None

    @property
    def verdict(self) -> bool:
        if self.holds_loop != self.holds_prolongation:
            return False
        return not self.holds_loop or self.condition.passed

    def porcelain(self) -> str:
        cond = (
            "n/a"
            if self.condition.status is ConditionStatus.NOT_APPLICABLE
            else f"{self.condition.residual:.3e}"
        )
        return (
            f"property={self.kind.value} resL={self.residual_loop:.3e} "
            f"resT={self.residual_prolongation:.3e} resCond={cond} "
            f"pass={str(self.verdict).lower()}"
        )


@dataclass(frozen=True)
class DerivativeCheck:
    """Maximum residual of one named sampled check against its tolerance."""

    name: str
    residual: float
    tolerance: float
    status: ConditionStatus

    @property
    def passed(self) -> bool:
        return self.status is not ConditionStatus.FAILS


@dataclass(frozen=True)
class SuiteReport:
    loop: str
    samples: int
    tolerance: float
    rows: tuple[PropertyRow, ...]
    derivative_checks: tuple[DerivativeCheck, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(r.verdict for r in self.rows) and all(
            c.passed for c in self.derivative_checks
        )
