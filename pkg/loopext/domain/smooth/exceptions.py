"""
Smooth loop domain exceptions.
"""

from collections.abc import Sequence


class SmoothLoopError(Exception):
    """Base exception for differentiable loop computations."""


class DomainViolationError(SmoothLoopError):
    """Raised when a point lies outside the open domain of a loop."""

    def __init__(self, loop: str, point: Sequence[float]) -> None:
        self.loop = loop
        self.point = tuple(float(v) for v in point)
        coords = ", ".join(f"{v:.6g}" for v in self.point)
        super().__init__(f"Point ({coords}) is outside the domain of {loop}")


class NonFiniteValueError(SmoothLoopError):
    """Raised when an evaluation produces NaN or infinity."""

    def __init__(self, what: str) -> None:
        self.what = what
        super().__init__(f"Non-finite value in {what}")


class IllConditionedError(SmoothLoopError):
    """Raised when a Jacobian is too ill-conditioned to invert."""

    def __init__(self, condition: float, limit: float) -> None:
        self.condition = condition
        self.limit = limit
        super().__init__(
            f"Jacobian condition number {condition:.3e} exceeds the limit {limit:.3e}"
        )


class ResampleLimitError(SmoothLoopError):
    """Raised when no admissible sample point is found within the retry cap."""

    def __init__(self, index: int, retries: int) -> None:
        self.index = index
        self.retries = retries
        super().__init__(
            f"Sample {index} stayed outside the domain after {retries} redraws"
        )


class UnknownSmoothLoopError(SmoothLoopError):
    """Raised when a catalog name is not registered."""

    def __init__(self, name: str, available: list[str]) -> None:
        self.name = name
        self.available = available
        super().__init__(
            f"Unknown smooth loop {name!r}; available: {', '.join(available)}"
        )
