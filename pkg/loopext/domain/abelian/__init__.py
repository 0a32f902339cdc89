"""
Abelian kernel package.

Homocyclic groups (ℤ_m)^k, their elements and automorphisms, plus vectorized
arithmetic on stacks of automorphism matrices.
"""

from . import batch
from .exceptions import (
    AbelianError,
    GroupMismatchError,
    InfiniteGroupError,
    InvalidKernelSpecError,
    InvalidVectorError,
    NotAutomorphismError,
)
from .models import AbGroup, AbVec, AutoMatrix, integer_determinant
from .service import (
    KernelSpecInput,
    add,
    apply,
    compose,
    identity_matrix,
    invert,
    is_automorphism,
    neg,
    parse_kernel_spec,
    random_automorphism,
    random_involution,
    random_matrix_array,
    rng_from,
    scalar_matrix,
    sub,
)

__all__ = [
    "batch",
    "AbelianError",
    "GroupMismatchError",
    "InfiniteGroupError",
    "InvalidKernelSpecError",
    "InvalidVectorError",
    "NotAutomorphismError",
    "AbGroup",
    "AbVec",
    "AutoMatrix",
    "integer_determinant",
    "KernelSpecInput",
    "add",
    "apply",
    "compose",
    "identity_matrix",
    "invert",
    "is_automorphism",
    "neg",
    "parse_kernel_spec",
    "random_automorphism",
    "random_involution",
    "random_matrix_array",
    "rng_from",
    "scalar_matrix",
    "sub",
]
