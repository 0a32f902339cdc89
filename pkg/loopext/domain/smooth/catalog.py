"""
Built-in smooth loops, registered by name.
"""

from collections.abc import Callable, Sequence

import numpy as np

from loopext.domain.smooth.dual import Scalar, value_of
from loopext.domain.smooth.exceptions import UnknownSmoothLoopError
from loopext.domain.smooth.models import FloatArray, Point, SmoothLoop


class AdditiveGroup(SmoothLoop):
    """(ℝⁿ, +)."""

    name = "additive"

    def __init__(self, dim: int = 1) -> None:
        if dim < 1:
            raise ValueError(f"Dimension must be positive, got {dim}")
        self._dim = dim

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def identity(self) -> FloatArray:
        return np.zeros(self._dim)

    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        return tuple(a + b for a, b in zip(x, y, strict=True))

    def ldiv(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        return tuple(b - a for a, b in zip(x, y, strict=True))

    def rdiv(self, y: Sequence[Scalar], x: Sequence[Scalar]) -> Point:
        return tuple(b - a for a, b in zip(x, y, strict=True))

    def sample_point(self, rng: np.random.Generator) -> FloatArray:
        return rng.uniform(-2.0, 2.0, size=self._dim)

    def adjoint_inverse(self, eta: Sequence[float]) -> FloatArray:
        return np.eye(self._dim)


class AffineGroup(SmoothLoop):
    """Maps t ↦ at + b with a > 0, as pairs (a, b) composed left to right."""

    name = "affine"

    @property
    def dim(self) -> int:
        return 2

    @property
    def identity(self) -> FloatArray:
        return np.array([1.0, 0.0])

    def contains(self, point: Sequence[Scalar]) -> bool:
        return super().contains(point) and value_of(point[0]) > 0

    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        return (x[0] * y[0], x[0] * y[1] + x[1])

    def ldiv(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        return (y[0] / x[0], (y[1] - x[1]) / x[0])

    def rdiv(self, y: Sequence[Scalar], x: Sequence[Scalar]) -> Point:
        a = y[0] / x[0]
        return (a, y[1] - a * x[1])

    def sample_point(self, rng: np.random.Generator) -> FloatArray:
        return np.array([rng.uniform(0.5, 2.0), rng.uniform(-2.0, 2.0)])

    def adjoint_inverse(self, eta: Sequence[float]) -> FloatArray:
        a, b = float(eta[0]), float(eta[1])
        return np.array([[1.0, 0.0], [b / a, 1.0 / a]])


class ParabolicLoop(SmoothLoop):
    """ℝ² with x·y = (x₁ + y₁, x₂ + y₂ + x₁y₁²); none of the weak properties hold."""

    name = "parabolic"

    @property
    def dim(self) -> int:
        return 2

    @property
    def identity(self) -> FloatArray:
        return np.zeros(2)

    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        return (x[0] + y[0], x[1] + y[1] + x[0] * y[0] * y[0])

    def ldiv(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        d = y[0] - x[0]
        return (d, y[1] - x[1] - x[0] * d * d)

    def rdiv(self, y: Sequence[Scalar], x: Sequence[Scalar]) -> Point:
        d = y[0] - x[0]
        return (d, y[1] - x[1] - d * x[0] * x[0])

    def sample_point(self, rng: np.random.Generator) -> FloatArray:
        return rng.uniform(-1.0, 1.0, size=2)


class CommutativeLoop(SmoothLoop):
    """ℝ² with x·y = (x₁ + y₁, x₂ + y₂ + x₁²y₁²)."""

    name = "commutative"

    @property
    def dim(self) -> int:
        return 2

    @property
    def identity(self) -> FloatArray:
        return np.zeros(2)

    def mul(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        return (x[0] + y[0], x[1] + y[1] + x[0] * x[0] * y[0] * y[0])

    def ldiv(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Point:
        d = y[0] - x[0]
        return (d, y[1] - x[1] - x[0] * x[0] * d * d)

    def rdiv(self, y: Sequence[Scalar], x: Sequence[Scalar]) -> Point:
        return self.ldiv(x, y)

    def sample_point(self, rng: np.random.Generator) -> FloatArray:
        return rng.uniform(-1.0, 1.0, size=2)


CATALOG: dict[str, Callable[..., SmoothLoop]] = {
    "additive": AdditiveGroup,
    "affine": AffineGroup,
    "parabolic": ParabolicLoop,
    "commutative": CommutativeLoop,
}


def catalog_names() -> list[str]:
    return sorted(CATALOG)


def builtin_loop(name: str, **options: int) -> SmoothLoop:
    """
    Look up a catalog loop; ``additive`` accepts ``dim``.

    Raises:
        UnknownSmoothLoopError: If ``name`` is not registered
    """
    try:
        factory = CATALOG[name.strip().lower()]
    except KeyError:
        raise UnknownSmoothLoopError(name, catalog_names()) from None
    return factory(**options)
