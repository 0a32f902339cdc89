"""
Finite loop domain exceptions.

Errors raised while building, validating, querying or enumerating Cayley
tables.
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from loopext.domain.finite_loop.models import ValidationReport


class FiniteLoopError(Exception):
    """Base exception for finite quasigroup and loop errors."""


class StructuralError(FiniteLoopError):
    """Raised when a table is not a square array of elements in range."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class InvalidLoopError(FiniteLoopError):
    """Raised when a table fails loop validation."""

    def __init__(self, report: "ValidationReport") -> None:
        self.report = report
        super().__init__(f"Not a loop: {report.summary()}")


class ElementOutOfRangeError(FiniteLoopError):
    """Raised when an element index does not belong to the loop."""

    def __init__(self, element: int, order: int) -> None:
        self.element = element
        self.order = order
        super().__init__(f"Element {element} is outside [0, {order})")


class MissingInverseError(FiniteLoopError):
    """Raised when an element has different left and right inverses."""

    def __init__(self, element: int, left: int, right: int) -> None:
        self.element = element
        self.left = left
        self.right = right
        super().__init__(
            f"Element {element} has no two-sided inverse "
            f"(e/x = {left}, x\\e = {right})"
        )


class EnumerationLimitError(FiniteLoopError):
    """Raised when a loop search is requested beyond the supported order."""

    def __init__(self, order: int, max_order: int) -> None:
        self.order = order
        self.max_order = max_order
        super().__init__(f"Loop search supports orders 1..{max_order}, got {order}")


class UnknownFixtureError(FiniteLoopError):
    """Raised when a named fixture table does not exist."""

    def __init__(self, name: str, available: list[str]) -> None:
        self.name = name
        self.available = available
        super().__init__(
            f"Unknown fixture {name!r}; available: {', '.join(available) or 'none'}"
        )
