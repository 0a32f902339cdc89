"""
Abelian kernel exceptions.

Errors raised by homocyclic groups (ℤ_m)^k, their vectors and automorphisms.
"""


class AbelianError(Exception):
    """Base exception for abelian kernel errors."""


class InvalidKernelSpecError(AbelianError):
    """Raised when a kernel description such as ``z3^2`` cannot be parsed."""

    def __init__(self, spec: str, reason: str) -> None:
        self.spec = spec
        self.reason = reason
        super().__init__(f"Invalid kernel {spec!r}: {reason}")


class GroupMismatchError(AbelianError):
    """Raised when values from different kernels are combined."""

    def __init__(self, left: str, right: str) -> None:
        self.left = left
        self.right = right
        super().__init__(f"Cannot combine elements of {left} and {right}")


class InvalidVectorError(AbelianError):
    """Raised when coordinates do not describe an element of the kernel."""

    def __init__(self, coords: tuple[int, ...], group: str) -> None:
        self.coords = coords
        self.group = group
        super().__init__(f"{list(coords)} is not a reduced element of {group}")


class NotAutomorphismError(AbelianError):
    """Raised when a matrix is not invertible over the kernel's ring."""

    def __init__(self, entries: list[list[int]], determinant: int, group: str) -> None:
        self.entries = entries
        self.determinant = determinant
        self.group = group
        super().__init__(
            f"Matrix {entries} has determinant {determinant}, "
            f"which is not a unit for {group}"
        )


class InfiniteGroupError(AbelianError):
    """Raised when an operation needs a finite kernel but got ℤ^k."""

    def __init__(self, operation: str) -> None:
        self.operation = operation
        super().__init__(f"{operation} requires a finite kernel (modulus ≥ 2)")
