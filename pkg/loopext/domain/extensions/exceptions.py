"""
Extension domain exceptions.

Errors raised while building cocycles, Φ homomorphisms and materialized
extension tables.
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from loopext.domain.mapping_groups.models import Perm


class ExtensionError(Exception):
    """Base exception for extension construction errors."""


class CocycleShapeError(ExtensionError):
    """Raised when cocycle tables do not match the base loop and kernel."""

    def __init__(
        self, name: str, shape: tuple[int, ...], expected: tuple[int, ...]
    ) -> None:
        self.name = name
        self.shape = shape
        self.expected = expected
        super().__init__(f"Cocycle table {name} has shape {shape}, expected {expected}")


class ExtensionSizeError(ExtensionError):
    """Raised when a materialized extension would exceed the size cap."""

    def __init__(self, order: int, cap: int) -> None:
        self.order = order
        self.cap = cap
        super().__init__(
            f"Extension of order {order} exceeds the cap of {cap} elements"
        )


class UnsupportedKernelError(ExtensionError):
    """Raised when an operation needs a finite kernel."""

    def __init__(self, kernel: str, operation: str) -> None:
        self.kernel = kernel
        self.operation = operation
        super().__init__(
            f"{operation} is not available over the infinite kernel {kernel}"
        )


class PhiConflictError(ExtensionError):
    """Raised when two words reaching the same permutation get different matrices."""

    def __init__(
        self, perm: "Perm", existing: list[list[int]], proposed: list[list[int]]
    ) -> None:
        self.perm = perm
        self.existing = existing
        self.proposed = proposed
        super().__init__(
            f"Assignment is not a homomorphism: permutation [{perm}] would map to "
            f"both {existing} and {proposed}"
        )


class PhiCoverageError(ExtensionError):
    """Raised when the assigned permutations do not generate the whole domain."""

    def __init__(self, reached: int, order: int) -> None:
        self.reached = reached
        self.order = order
        super().__init__(
            f"Assigned permutations generate {reached} of {order} inner mappings"
        )


class PhiDomainError(ExtensionError):
    """Raised when Φ is evaluated outside its domain."""

    def __init__(self, perm: "Perm", label: str = "") -> None:
        self.perm = perm
        self.label = label
        where = f" ({label})" if label else ""
        super().__init__(
            f"Permutation [{perm}]{where} is not in the domain of Φ; "
            f"the inner mapping group is inconsistent"
        )


class PermutationRepresentationError(ExtensionError):
    """Raised when the kernel rank does not match the permutation degree."""

    def __init__(self, degree: int, rank: int) -> None:
        self.degree = degree
        self.rank = rank
        super().__init__(
            f"Permutation matrices of degree {degree} need kernel rank {degree}, "
            f"got {rank}"
        )
