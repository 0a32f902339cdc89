"""
Abelian kernel operations.

Vector arithmetic, automorphism arithmetic and random automorphisms. Exact
determinants and adjugates come from sympy; randomness from numpy Generators
so that a seed reproduces the same matrices on every platform.
"""

from collections.abc import Sequence

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from loopext.domain.abelian import batch
from loopext.domain.abelian.exceptions import (
    AbelianError,
    GroupMismatchError,
    InvalidKernelSpecError,
)
from loopext.domain.abelian.models import AbGroup, AbVec, AutoMatrix, IntArray

SeedLike = int | Sequence[int] | np.random.Generator | None


class KernelSpecInput(BaseModel):
    """Input validation model for kernel descriptions like ``z3^2``."""

    model_config = ConfigDict(str_strip_whitespace=True)

    spec: str = Field(
        ...,
        pattern=r"^[zZ]\d+\^\d+$",
        description="Kernel (ℤ_m)^k written as z<m>^<k>; z0^k means ℤ^k",
    )

    def to_group(self) -> AbGroup:
        modulus, rank = self.spec[1:].split("^")
        return AbGroup(modulus=int(modulus), rank=int(rank))


def parse_kernel_spec(spec: str) -> AbGroup:
    """
    Parse ``z<m>^<k>``.

    Raises:
        InvalidKernelSpecError: On syntax errors, m = 1 or k = 0
    """
    try:
        return KernelSpecInput(spec=spec).to_group()
    except ValidationError as err:
        raise InvalidKernelSpecError(spec, "expected the form z<m>^<k>") from err
    except AbelianError as err:
        raise InvalidKernelSpecError(spec, str(err)) from err


def rng_from(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _same_group(*groups: AbGroup) -> AbGroup:
    first = groups[0]
    for other in groups[1:]:
        if other != first:
            raise GroupMismatchError(first.spec, other.spec)
    return first


def add(a: AbVec, b: AbVec) -> AbVec:
    group = _same_group(a.group, b.group)
    return group.vector(a.array + b.array)


def neg(a: AbVec) -> AbVec:
    return a.group.vector(-a.array)


def sub(a: AbVec, b: AbVec) -> AbVec:
    group = _same_group(a.group, b.group)
    return group.vector(a.array - b.array)


def apply(M: AutoMatrix, a: AbVec) -> AbVec:
    group = _same_group(M.group, a.group)
    return group.vector(M.array @ a.array)


def compose(M: AutoMatrix, N: AutoMatrix) -> AutoMatrix:
    """M∘N, so that apply(compose(M, N), a) == apply(M, apply(N, a))."""
    group = _same_group(M.group, N.group)
    return AutoMatrix.from_array(group, M.array @ N.array)


def invert(M: AutoMatrix) -> AutoMatrix:
    """Adjugate times the inverse of the determinant in ℤ_m (or ℤ)."""
    group = M.group
    matrix = sympy.Matrix(M.array.tolist())
    det = int(matrix.det())
    if group.is_finite:
        det_inverse = pow(det % group.modulus, -1, group.modulus)
    else:
        det_inverse = det
    adjugate = np.asarray(matrix.adjugate().tolist(), dtype=np.int64)
    return AutoMatrix.from_array(group, adjugate * det_inverse)


def is_automorphism(
    candidate: IntArray | Sequence[Sequence[int]], group: AbGroup
) -> bool:
    """True iff the square integer matrix is invertible over the kernel's ring."""
    array = np.asarray(candidate, dtype=np.int64)
    if array.shape != (group.rank, group.rank):
        return False
    return bool(batch.is_invertible(array, group))


def identity_matrix(group: AbGroup) -> AutoMatrix:
    return group.identity_matrix()


def scalar_matrix(group: AbGroup, scalar: int) -> AutoMatrix:
    return AutoMatrix.from_array(group, scalar * np.eye(group.rank, dtype=np.int64))


def random_matrix_array(group: AbGroup, rng: np.random.Generator) -> IntArray:
    """Rejection-sample one invertible matrix as a raw array."""
    k = group.rank
    while True:
        if group.is_finite:
            candidate = rng.integers(0, group.modulus, size=(k, k), dtype=np.int64)
        else:
            candidate = rng.integers(-2, 3, size=(k, k), dtype=np.int64)
        if is_automorphism(candidate, group):
            return candidate


def random_automorphism(group: AbGroup, seed: SeedLike = None) -> AutoMatrix:
    """
    Uniform over invertible matrices by rejection; deterministic under ``seed``.

    For ℤ^k the entries are drawn from [-2, 2] and kept when det = ±1.
    """
    return AutoMatrix.from_array(group, random_matrix_array(group, rng_from(seed)))


def random_involution(group: AbGroup, seed: SeedLike = None) -> AutoMatrix:
    """
    A random M with M² = I, conjugate to a diagonal ±1 matrix (or, over ℤ₂
    where -1 = 1, to a unipotent block I + E₀₁). May be the identity.
    """
    rng = rng_from(seed)
    k = group.rank
    if group.modulus == 2:
        core = np.eye(k, dtype=np.int64)
        if k >= 2 and rng.integers(0, 2):
            core[0, 1] = 1
    else:
        signs = rng.choice(np.array([1, -1], dtype=np.int64), size=k)
        core = np.diag(signs)
    S = AutoMatrix.from_array(group, random_matrix_array(group, rng))
    return compose(compose(S, AutoMatrix.from_array(group, core)), invert(S))
