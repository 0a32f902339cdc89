"""
Vectorized arithmetic on stacks of kernel matrices.

Cocycle tables are dense arrays of shape (..., k, k). Determinants of small
integer matrices are taken in floating point and rounded, which is exact while
the entries stay far below 2**52 / (k!·max|entry|^k); larger stacks fall back
to sympy.
"""

from math import factorial

import numpy as np
import sympy

from loopext.domain.abelian.exceptions import NotAutomorphismError
from loopext.domain.abelian.models import AbGroup, IntArray

_FLOAT_EXACT = 2**50


def reduce(stack: np.ndarray, modulus: int) -> IntArray:
    array = np.asarray(stack, dtype=np.int64)
    return array % modulus if modulus else array


def matmul(*factors: np.ndarray, modulus: int) -> IntArray:
    """Reduced product of broadcastable matrix stacks, left to right."""
    result = reduce(factors[0], modulus)
    for factor in factors[1:]:
        result = reduce(np.matmul(result, reduce(factor, modulus)), modulus)
    return result


def _float_safe(stack: IntArray) -> bool:
    k = stack.shape[-1]
    bound = int(np.abs(stack).max(initial=0))
    return factorial(k) * max(bound, 1) ** k < _FLOAT_EXACT


def determinants(stack: IntArray) -> IntArray:
    """Exact integer determinants over the trailing two axes."""
    stack = np.asarray(stack, dtype=np.int64)
    k = stack.shape[-1]
    if k == 1:
        return stack[..., 0, 0].copy()
    if _float_safe(stack):
        return np.rint(np.linalg.det(stack.astype(np.float64))).astype(np.int64)
    flat = stack.reshape(-1, k, k)
    values = [int(sympy.Matrix(m.tolist()).det()) for m in flat]
    return np.asarray(values, dtype=np.int64).reshape(stack.shape[:-2])


def adjugates(stack: IntArray) -> IntArray:
    """Classical adjoints (transposed cofactor matrices)."""
    stack = np.asarray(stack, dtype=np.int64)
    k = stack.shape[-1]
    if k == 1:
        return np.ones_like(stack)
    cofactors = np.empty_like(stack)
    for i in range(k):
        for j in range(k):
            minor = np.delete(np.delete(stack, i, axis=-2), j, axis=-1)
            cofactors[..., i, j] = (-1) ** (i + j) * determinants(minor)
    return np.swapaxes(cofactors, -1, -2)


def _determinant_inverses(stack: IntArray, group: AbGroup) -> IntArray:
    """Inverses of the determinants; raises naming the first singular matrix."""
    values = determinants(stack)
    result = np.empty_like(values)
    flat_in = values.reshape(-1)
    flat_out = result.reshape(-1)
    matrices = stack.reshape(-1, *stack.shape[-2:])
    cache: dict[int, int] = {}
    for index, value in enumerate(flat_in):
        value = int(value)
        if value not in cache:
            if not group.is_unit(value):
                raise NotAutomorphismError(
                    matrices[index].tolist(), value, group.spec
                )
            cache[value] = (
                pow(value % group.modulus, -1, group.modulus)
                if group.is_finite
                else value
            )
        flat_out[index] = cache[value]
    return result


def inverse(stack: IntArray, group: AbGroup) -> IntArray:
    """Inverse automorphisms via adjugate times the inverse determinant."""
    stack = reduce(stack, group.modulus)
    det_inv = _determinant_inverses(stack, group)
    return reduce(adjugates(stack) * det_inv[..., None, None], group.modulus)


def is_invertible(stack: IntArray, group: AbGroup) -> np.ndarray:
    dets = determinants(reduce(stack, group.modulus))
    if group.is_finite:
        return np.gcd(dets % group.modulus, group.modulus) == 1
    return np.abs(dets) == 1


def identity_stack(shape: tuple[int, ...], rank: int) -> IntArray:
    return np.broadcast_to(np.eye(rank, dtype=np.int64), (*shape, rank, rank)).copy()
