"""
Jacobians and the tangent prolongation T(L).

T(L) is identified with L × T_e(L); its multiplication is

    (ξ, x)·(η, y) = (ξη, P(ξ, η)x + Q(ξ, η)y)

with P(ξ, η) = d_e(λ_{ξη}⁻¹ρ_ηλ_ξ) and Q(ξ, η) = d_e(λ_{ξη}⁻¹λ_ξλ_η).
Jacobians are taken with forward-mode dual numbers, one coordinate at a time.
"""

from collections.abc import Callable, Sequence

import numpy as np

from loopext.domain.smooth.dual import DualScalar, Scalar, deriv_of, value_of
from loopext.domain.smooth.exceptions import IllConditionedError, NonFiniteValueError
from loopext.domain.smooth.models import (
    FloatArray,
    Point,
    ProlongedElement,
    SmoothLoop,
    as_array,
)

SmoothMap = Callable[[Sequence[Scalar]], Point]

DEFAULT_CONDITION_LIMIT = 1e12
DEFAULT_FD_STEP = 1e-4


def _finite(array: FloatArray, what: str) -> FloatArray:
    if not np.all(np.isfinite(array)):
        raise NonFiniteValueError(what)
    return array


def jacobian_at(f: SmoothMap, point: Sequence[float]) -> FloatArray:
    """
    d_p f by forward-mode differentiation; column j seeds coordinate j.

    Raises:
        NonFiniteValueError: If a value or derivative is not finite
    """
    p = [float(v) for v in point]
    n = len(p)
    columns = []
    for j in range(n):
        seeded = [DualScalar(v, 1.0 if i == j else 0.0) for i, v in enumerate(p)]
        columns.append([deriv_of(c) for c in f(seeded)])
    jac = np.asarray(columns, dtype=np.float64).T.reshape(-1, n)
    return _finite(jac, "Jacobian")


def directional_derivative(
    f: SmoothMap, point: Sequence[float], direction: Sequence[float]
) -> FloatArray:
    """d_p f(v) with a single dual evaluation."""
    seeded = [
        DualScalar(float(v), float(d)) for v, d in zip(point, direction, strict=True)
    ]
    return _finite(
        np.asarray([deriv_of(c) for c in f(seeded)], dtype=np.float64),
        "directional derivative",
    )


def finite_difference_jacobian(
    f: SmoothMap, point: Sequence[float], h: float = DEFAULT_FD_STEP
) -> FloatArray:
    """Central differences, used as an independent oracle for jacobian_at."""
    p = np.asarray(point, dtype=np.float64)
    columns = []
    for j in range(p.size):
        step = np.zeros_like(p)
        step[j] = h
        forward = as_array(f(tuple(p + step)))
        backward = as_array(f(tuple(p - step)))
        columns.append((forward - backward) / (2.0 * h))
    return _finite(np.stack(columns, axis=1), "finite-difference Jacobian")


def evaluate(loop: SmoothLoop, f: SmoothMap, point: Sequence[float]) -> FloatArray:
    return _finite(as_array(f(point)), f"{loop.name} evaluation")


def left_translation(loop: SmoothLoop, x: Sequence[float]) -> SmoothMap:
    return lambda y: loop.mul(x, y)


def right_translation(loop: SmoothLoop, x: Sequence[float]) -> SmoothMap:
    return lambda y: loop.mul(y, x)


def _check_points(loop: SmoothLoop, *points: Sequence[float]) -> None:
    for point in points:
        loop.check(point)


def cocycle_P(
    loop: SmoothLoop, xi: Sequence[float], eta: Sequence[float]
) -> FloatArray:
    """d_e(λ_{ξη}⁻¹ρ_ηλ_ξ)."""
    xe = loop.mul(xi, eta)
    _check_points(loop, xi, eta, xe)
    return jacobian_at(
        lambda y: loop.ldiv(xe, loop.mul(loop.mul(xi, y), eta)), loop.identity
    )


def cocycle_Q(
    loop: SmoothLoop, xi: Sequence[float], eta: Sequence[float]
) -> FloatArray:
    """d_e(λ_{ξη}⁻¹λ_ξλ_η)."""
    xe = loop.mul(xi, eta)
    _check_points(loop, xi, eta, xe)
    return jacobian_at(
        lambda y: loop.ldiv(xe, loop.mul(xi, loop.mul(eta, y))), loop.identity
    )


def cocycle_P_inverse(
    loop: SmoothLoop, xi: Sequence[float], eta: Sequence[float]
) -> FloatArray:
    """d_e(λ_ξ⁻¹ρ_η⁻¹λ_{ξη}), the inverse of cocycle_P."""
    xe = loop.mul(xi, eta)
    _check_points(loop, xi, eta, xe)
    return jacobian_at(
        lambda y: loop.ldiv(xi, loop.rdiv(loop.mul(xe, y), eta)), loop.identity
    )


def cocycle_Q_inverse(
    loop: SmoothLoop, xi: Sequence[float], eta: Sequence[float]
) -> FloatArray:
    """d_e(λ_η⁻¹λ_ξ⁻¹λ_{ξη}), the inverse of cocycle_Q."""
    xe = loop.mul(xi, eta)
    _check_points(loop, xi, eta, xe)
    return jacobian_at(
        lambda y: loop.ldiv(eta, loop.ldiv(xi, loop.mul(xe, y))), loop.identity
    )


def conditioned_solve(
    matrix: FloatArray, rhs: FloatArray, limit: float = DEFAULT_CONDITION_LIMIT
) -> FloatArray:
    """
    Solve ``matrix @ x = rhs``.

    Raises:
        IllConditionedError: If the condition number exceeds ``limit``
    """
    condition = float(np.linalg.cond(matrix))
    if not np.isfinite(condition) or condition > limit:
        raise IllConditionedError(condition, limit)
    return np.linalg.solve(matrix, rhs)


def prolonged(base: Sequence[float], fiber: Sequence[float]) -> ProlongedElement:
    return ProlongedElement(
        np.asarray(base, dtype=np.float64), np.asarray(fiber, dtype=np.float64)
    )


def prolong_identity(loop: SmoothLoop) -> ProlongedElement:
    return prolonged(loop.identity, np.zeros(loop.dim))


def prolong_mul(
    loop: SmoothLoop, a: ProlongedElement, b: ProlongedElement
) -> ProlongedElement:
    """(ξ, x)·(η, y) = (ξη, P(ξ, η)x + Q(ξ, η)y)."""
    base = evaluate(loop, lambda p: loop.mul(p, b.base), a.base)
    fiber = (
        cocycle_P(loop, a.base, b.base) @ a.fiber
        + cocycle_Q(loop, a.base, b.base) @ b.fiber
    )
    return ProlongedElement(base, fiber)


def prolong_ldiv(
    loop: SmoothLoop,
    a: ProlongedElement,
    b: ProlongedElement,
    limit: float = DEFAULT_CONDITION_LIMIT,
) -> ProlongedElement:
    """(ξ, x)\\(η, y) = (ξ\\η, Q(ξ, ξ\\η)⁻¹(y − P(ξ, ξ\\η)x))."""
    zeta = evaluate(loop, lambda p: loop.ldiv(p, b.base), a.base)
    loop.check(zeta)
    rhs = b.fiber - cocycle_P(loop, a.base, zeta) @ a.fiber
    fiber = conditioned_solve(cocycle_Q(loop, a.base, zeta), rhs, limit)
    return ProlongedElement(zeta, fiber)


def prolong_rdiv(
    loop: SmoothLoop,
    b: ProlongedElement,
    a: ProlongedElement,
    limit: float = DEFAULT_CONDITION_LIMIT,
) -> ProlongedElement:
    """(η, y)/(ξ, x) = (η/ξ, P(η/ξ, ξ)⁻¹(y − Q(η/ξ, ξ)x))."""
    zeta = evaluate(loop, lambda p: loop.rdiv(p, a.base), b.base)
    loop.check(zeta)
    rhs = b.fiber - cocycle_Q(loop, zeta, a.base) @ a.fiber
    fiber = conditioned_solve(cocycle_P(loop, zeta, a.base), rhs, limit)
    return ProlongedElement(zeta, fiber)


def semidirect_mul(
    loop: SmoothLoop, a: ProlongedElement, b: ProlongedElement
) -> ProlongedElement | None:
    """
    (ξ, x)·(η, y) = (ξη, Ad_{η⁻¹}x + y) for Lie groups, from the closed-form
    adjoint; None when the loop provides none.
    """
    adjoint = loop.adjoint_inverse(b.base)
    if adjoint is None:
        return None
    base = evaluate(loop, lambda p: loop.mul(p, b.base), a.base)
    return ProlongedElement(base, adjoint @ a.fiber + b.fiber)


def distance(a: ProlongedElement, b: ProlongedElement) -> float:
    return float(
        max(np.max(np.abs(a.base - b.base)), np.max(np.abs(a.fiber - b.fiber)))
    )


def point_value(point: Sequence[Scalar]) -> tuple[float, ...]:
    return tuple(value_of(v) for v in point)
