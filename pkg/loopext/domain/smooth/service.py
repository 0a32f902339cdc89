"""
Numerical verification on smooth loops.

All checks draw their sample points from per-sample generators seeded with
``[seed, index]`` (``[seed, index, retry]`` on redraws), so a sample can be
reproduced on its own and serial and parallel runs see identical points.
Residuals are maxima over samples; the witness is the sample attaining it.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from loopext.domain.conditions.models import ConditionStatus, PropertyKind
from loopext.domain.conditions.properties import IDENTITIES
from loopext.domain.smooth.dual import Scalar
from loopext.domain.smooth.exceptions import ResampleLimitError
from loopext.domain.smooth.models import (
    DerivativeCheck,
    FloatArray,
    NumericReport,
    Point,
    ProlongedElement,
    PropertyRow,
    SmoothLoop,
    SuiteReport,
    as_array,
)
from loopext.domain.smooth.prolongation import (
    DEFAULT_CONDITION_LIMIT,
    DEFAULT_FD_STEP,
    directional_derivative,
    distance,
    finite_difference_jacobian,
    jacobian_at,
    left_translation,
    prolong_identity,
    prolong_ldiv,
    prolong_mul,
    prolong_rdiv,
    prolonged,
    right_translation,
    semidirect_mul,
)
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)

DEFAULT_SAMPLES = 500
DEFAULT_TOLERANCE = 1e-8
DEFAULT_RETRIES = 10
POINTS_PER_SAMPLE = 3


@dataclass(frozen=True)
class Sample:
    points: tuple[FloatArray, ...]
    fibers: tuple[FloatArray, ...]

    @property
    def flat(self) -> tuple[float, ...]:
        return tuple(float(v) for p in self.points for v in p)


def draw_sample(
    loop: SmoothLoop, seed: int, index: int, retries: int = DEFAULT_RETRIES
) -> Sample:
    """
    Three base points and three tangent vectors for sample ``index``.

    Raises:
        ResampleLimitError: If every redraw leaves the domain
    """
    for attempt in range(retries + 1):
        key = [seed, index] if attempt == 0 else [seed, index, attempt]
        rng = np.random.default_rng(key)
        points = tuple(loop.sample_point(rng) for _ in range(POINTS_PER_SAMPLE))
        if all(loop.contains(p) for p in points):
            fibers = tuple(
                rng.uniform(-1.0, 1.0, size=loop.dim) for _ in range(POINTS_PER_SAMPLE)
            )
            return Sample(points, fibers)
        logger.debug("Resampling point", loop=loop.name, index=index, attempt=attempt)
    raise ResampleLimitError(index, retries)


class _LoopOps:
    def __init__(self, loop: SmoothLoop) -> None:
        self.loop = loop
        self.e = loop.identity

    def mul(self, a: FloatArray, b: FloatArray) -> FloatArray:
        return as_array(self.loop.mul(a, b))

    def ldiv(self, a: FloatArray, b: FloatArray) -> FloatArray:
        return as_array(self.loop.ldiv(a, b))

    def rdiv(self, b: FloatArray, a: FloatArray) -> FloatArray:
        return as_array(self.loop.rdiv(b, a))

    def dist(self, a: FloatArray, b: FloatArray) -> float:
        return float(np.max(np.abs(a - b)))


class _ProlongationOps:
    def __init__(self, loop: SmoothLoop, limit: float) -> None:
        self.loop = loop
        self.limit = limit
        self.e = prolong_identity(loop)

    def mul(self, a: ProlongedElement, b: ProlongedElement) -> ProlongedElement:
        return prolong_mul(self.loop, a, b)

    def ldiv(self, a: ProlongedElement, b: ProlongedElement) -> ProlongedElement:
        return prolong_ldiv(self.loop, a, b, self.limit)

    def rdiv(self, b: ProlongedElement, a: ProlongedElement) -> ProlongedElement:
        return prolong_rdiv(self.loop, b, a, self.limit)

    def dist(self, a: ProlongedElement, b: ProlongedElement) -> float:
        return distance(a, b)


def _identity_residual(ops, kind: PropertyKind, elements: Sequence) -> float:
    """Residual of the defining identity of ``kind`` at one tuple."""
    x = elements[0]
    two_sided = ops.dist(ops.ldiv(x, ops.e), ops.rdiv(ops.e, x))
    if kind is PropertyKind.TWO_SIDED_INVERSE:
        return two_sided
    if kind is PropertyKind.LEFT_INVERSE:
        y = elements[1]
        return max(two_sided, ops.dist(ops.mul(ops.rdiv(ops.e, x), ops.mul(x, y)), y))
    if kind is PropertyKind.RIGHT_INVERSE:
        y = elements[1]
        return max(two_sided, ops.dist(ops.mul(ops.mul(y, x), ops.ldiv(x, ops.e)), y))
    lhs, rhs = IDENTITIES[kind](ops.mul, *elements[: kind.arity])
    return ops.dist(lhs, rhs)


def _vsum(*points: Sequence[Scalar]) -> Point:
    return tuple(sum(coords) for coords in zip(*points, strict=True))


PointMap = Callable[[Sequence[Scalar]], Point]
ConditionMaps = tuple[FloatArray, PointMap, PointMap]


def _condition_maps(
    loop: SmoothLoop,
    kind: PropertyKind,
    xi: FloatArray,
    eta: FloatArray,
    zeta: FloatArray,
) -> ConditionMaps:
    """The base point and the two sides of the differential condition as maps of y."""
    m = loop.mul
    e = loop.identity
    if kind is PropertyKind.TWO_SIDED_INVERSE:
        inv = as_array(loop.ldiv(xi, e))
        return (
            xi,
            lambda y: m(y, inv),
            lambda y: m(xi, loop.rdiv(m(inv, y), xi)),
        )
    if kind is PropertyKind.LEFT_INVERSE:
        xe = as_array(m(xi, eta))
        return (
            as_array(loop.ldiv(xi, e)),
            lambda y: m(xi, m(y, xe)),
            lambda y: m(m(xi, m(y, xi)), eta),
        )
    if kind is PropertyKind.RIGHT_INVERSE:
        xe = as_array(m(xi, eta))
        return (
            as_array(loop.ldiv(eta, e)),
            lambda y: m(m(xe, y), eta),
            lambda y: m(xi, m(m(eta, y), eta)),
        )
    if kind is PropertyKind.MONOASSOCIATIVE:
        s = as_array(m(xi, xi))
        return (
            xi,
            lambda y: _vsum(m(y, s), m(xi, m(y, xi)), m(xi, m(xi, y))),
            lambda y: _vsum(m(m(y, xi), xi), m(m(xi, y), xi), m(s, y)),
        )
    if kind is PropertyKind.LEFT_ALTERNATIVE:
        xe = as_array(m(xi, eta))
        return (
            xi,
            lambda y: _vsum(m(y, xe), m(xi, m(y, eta))),
            lambda y: _vsum(m(m(y, xi), eta), m(m(xi, y), eta)),
        )
    if kind is PropertyKind.RIGHT_ALTERNATIVE:
        ex = as_array(m(eta, xi))
        return (
            xi,
            lambda y: _vsum(m(m(eta, y), xi), m(ex, y)),
            lambda y: _vsum(m(eta, m(y, xi)), m(eta, m(xi, y))),
        )
    if kind is PropertyKind.FLEXIBLE:
        ex = as_array(m(eta, xi))
        xe = as_array(m(xi, eta))
        return (
            xi,
            lambda y: _vsum(m(y, ex), m(xi, m(eta, y))),
            lambda y: _vsum(m(m(y, eta), xi), m(xe, y)),
        )
    if kind is PropertyKind.LEFT_BOL:
        inner = as_array(m(eta, m(xi, zeta)))
        ex = as_array(m(eta, xi))
        return (
            xi,
            lambda y: _vsum(m(y, inner), m(xi, m(eta, m(y, zeta)))),
            lambda y: _vsum(m(m(y, ex), zeta), m(m(xi, m(eta, y)), zeta)),
        )
    xe = as_array(m(xi, eta))
    zx_e = as_array(m(m(zeta, xi), eta))
    return (
        xi,
        lambda y: _vsum(m(zeta, m(m(y, eta), xi)), m(zeta, m(xe, y))),
        lambda y: _vsum(m(m(m(zeta, y), eta), xi), m(zx_e, y)),
    )


def _inverse_mismatch(loop: SmoothLoop, point: FloatArray) -> float:
    e = loop.identity
    left, right = as_array(loop.ldiv(point, e)), as_array(loop.rdiv(e, point))
    return float(np.max(np.abs(left - right)))


def check_differential_condition(
    loop: SmoothLoop,
    kind: PropertyKind,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
) -> NumericReport:
    """
    Maximum operator-norm residual between the two sides of the differential
    condition.

    The inverse-flavoured conditions are NOT_APPLICABLE as soon as some
    sample has ξ\\e and e/ξ further apart than ``tol``.
    """
    worst, witness = 0.0, None
    for index in range(samples):
        sample = draw_sample(loop, seed, index, retries)
        xi, eta, zeta = sample.points
        if kind.needs_inverses:
            inverted = eta if kind is PropertyKind.RIGHT_INVERSE else xi
            if _inverse_mismatch(loop, inverted) > tol:
                return NumericReport(
                    kind,
                    float("nan"),
                    tol,
                    ConditionStatus.NOT_APPLICABLE,
                    witness=sample.flat,
                    samples=index + 1,
                )
        point, lhs, rhs = _condition_maps(loop, kind, xi, eta, zeta)
        gap = jacobian_at(lhs, point) - jacobian_at(rhs, point)
        residual = float(np.linalg.norm(gap, ord=2))
        if residual > worst or witness is None:
            worst, witness = residual, sample.flat
    status = ConditionStatus.HOLDS if worst <= tol else ConditionStatus.FAILS
    return NumericReport(kind, worst, tol, status, witness=witness, samples=samples)


def _max_residual(
    ops, kind: PropertyKind, draws: Sequence[tuple[Sequence, tuple[float, ...]]]
):
    worst, witness = 0.0, None
    for elements, flat in draws:
        residual = _identity_residual(ops, kind, elements)
        if residual > worst or witness is None:
            worst, witness = residual, flat
    return worst, witness


def _record(residuals: dict[str, float], name: str, gap: FloatArray) -> None:
    residuals[name] = max(residuals[name], float(np.max(np.abs(gap))))


def _inverse_derivative_checks(
    loop: SmoothLoop,
    draws: Sequence[Sample],
    tol: float,
    applicable: dict[str, bool],
) -> tuple[DerivativeCheck, ...]:
    e = loop.identity
    m = loop.mul
    residuals = {name: 0.0 for name in applicable}
    for sample in draws:
        xi, eta, _ = sample.points
        v = sample.fibers[0]
        inv = as_array(loop.ldiv(xi, e))
        dinv = directional_derivative(lambda p: loop.ldiv(p, e), xi, v)
        if applicable["inverse-via-rdiv"]:
            closed = -jacobian_at(lambda y: loop.rdiv(m(inv, y), xi), xi) @ v
            _record(residuals, "inverse-via-rdiv", dinv - closed)
        if applicable["inverse-via-ldiv"]:
            closed = -jacobian_at(lambda y: loop.ldiv(xi, m(y, inv)), xi) @ v
            _record(residuals, "inverse-via-ldiv", dinv - closed)
        if applicable["left-inverse-derivative"]:
            xe = as_array(m(xi, eta))
            total = jacobian_at(lambda y: m(y, xe), inv) @ dinv
            total = total + jacobian_at(lambda y: loop.ldiv(xi, m(y, eta)), xi) @ v
            _record(residuals, "left-inverse-derivative", total)
        if applicable["right-inverse-derivative"]:
            ex = as_array(m(eta, xi))
            total = jacobian_at(lambda y: loop.rdiv(m(eta, y), xi), xi) @ v
            total = total + jacobian_at(lambda y: m(ex, y), inv) @ dinv
            _record(residuals, "right-inverse-derivative", total)
    checks = []
    for name, ok in applicable.items():
        if not ok:
            checks.append(
                DerivativeCheck(name, float("nan"), tol, ConditionStatus.NOT_APPLICABLE)
            )
            continue
        held = residuals[name] <= tol
        status = ConditionStatus.HOLDS if held else ConditionStatus.FAILS
        checks.append(DerivativeCheck(name, residuals[name], tol, status))
    return tuple(checks)


def inverse_derivative_checks(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    applicable: dict[str, bool] | None = None,
) -> tuple[DerivativeCheck, ...]:
    """
    Compare the dual derivative of t ↦ (ξ + tv)⁻¹ with the closed forms
    −d_ξ(ρ_ξ⁻¹λ_{ξ⁻¹})v and −d_ξ(λ_ξ⁻¹ρ_{ξ⁻¹})v, and check the derivative
    identities of the left and right inverse properties. Without
    ``applicable`` the hypotheses are decided from sampled residuals.
    """
    draws = [draw_sample(loop, seed, i, retries) for i in range(samples)]
    if applicable is None:
        ops = _LoopOps(loop)
        base_draws = [(s.points, s.flat) for s in draws]
        holds = {
            kind: _max_residual(ops, kind, base_draws)[0] <= tol
            for kind in (
                PropertyKind.TWO_SIDED_INVERSE,
                PropertyKind.LEFT_INVERSE,
                PropertyKind.RIGHT_INVERSE,
            )
        }
        applicable = {
            "inverse-via-rdiv": holds[PropertyKind.TWO_SIDED_INVERSE],
            "inverse-via-ldiv": holds[PropertyKind.TWO_SIDED_INVERSE],
            "left-inverse-derivative": holds[PropertyKind.LEFT_INVERSE],
            "right-inverse-derivative": holds[PropertyKind.RIGHT_INVERSE],
        }
    return _inverse_derivative_checks(loop, draws, tol, applicable)


def property_suite(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    condition_limit: float = DEFAULT_CONDITION_LIMIT,
) -> SuiteReport:
    """
    For every property: sampled residual on L, on T(L) (random fibers over the
    same base points) and the differential condition. A row passes when L and
    T(L) agree and, where L has the property, the differential condition holds.
    """
    draws = [draw_sample(loop, seed, i, retries) for i in range(samples)]
    loop_ops = _LoopOps(loop)
    tangent_ops = _ProlongationOps(loop, condition_limit)
    base_draws = [(s.points, s.flat) for s in draws]
    tangent_draws = [
        (tuple(map(prolonged, s.points, s.fibers)), s.flat)
        for s in draws
    ]
    rows = []
    for kind in PropertyKind:
        residual_loop, witness = _max_residual(loop_ops, kind, base_draws)
        residual_tangent, _ = _max_residual(tangent_ops, kind, tangent_draws)
        condition = check_differential_condition(
            loop, kind, samples, tol, seed, retries
        )
        rows.append(
            PropertyRow(
                kind=kind,
                residual_loop=residual_loop,
                residual_prolongation=residual_tangent,
                condition=condition,
                holds_loop=residual_loop <= tol,
                holds_prolongation=residual_tangent <= tol,
                witness=witness if residual_loop > tol else None,
            )
        )
    holds = {row.kind: row.holds_loop for row in rows}
    checks = _inverse_derivative_checks(
        loop,
        draws,
        tol,
        {
            "inverse-via-rdiv": holds[PropertyKind.TWO_SIDED_INVERSE],
            "inverse-via-ldiv": holds[PropertyKind.TWO_SIDED_INVERSE],
            "left-inverse-derivative": holds[PropertyKind.LEFT_INVERSE],
            "right-inverse-derivative": holds[PropertyKind.RIGHT_INVERSE],
        },
    )
    report = SuiteReport(loop.name, samples, tol, tuple(rows), checks)
    logger.info(
        "Smooth suite finished", loop=loop.name, samples=samples, passed=report.passed
    )
    return report


def jacobian_cross_check(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    h: float = DEFAULT_FD_STEP,
    retries: int = DEFAULT_RETRIES,
) -> float:
    """Largest gap between dual and central-difference Jacobians of λ_x and ρ_x."""
    worst = 0.0
    for index in range(samples):
        x, y, _ = draw_sample(loop, seed, index, retries).points
        for f in (left_translation(loop, x), right_translation(loop, x)):
            dual = jacobian_at(f, y)
            gap = np.max(np.abs(dual - finite_difference_jacobian(f, y, h)))
            worst = max(worst, float(gap))
    return worst


def semidirect_residual(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
) -> float | None:
    """Largest gap between prolong_mul and (ξη, Ad_{η⁻¹}x + y); None for non-groups."""
    worst = 0.0
    for index in range(samples):
        sample = draw_sample(loop, seed, index, retries)
        a = prolonged(sample.points[0], sample.fibers[0])
        b = prolonged(sample.points[1], sample.fibers[1])
        expected = semidirect_mul(loop, a, b)
        if expected is None:
            return None
        worst = max(worst, distance(prolong_mul(loop, a, b), expected))
    return worst


def roundtrip_residual(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    condition_limit: float = DEFAULT_CONDITION_LIMIT,
) -> float:
    """Largest residual of a·(a\\b) = b and (b/a)·a = b on T(L)."""
    ops = _ProlongationOps(loop, condition_limit)
    worst = 0.0
    for index in range(samples):
        sample = draw_sample(loop, seed, index, retries)
        a = prolonged(sample.points[0], sample.fibers[0])
        b = prolonged(sample.points[1], sample.fibers[1])
        worst = max(
            worst,
            distance(ops.mul(a, ops.ldiv(a, b)), b),
            distance(ops.mul(ops.rdiv(b, a), a), b),
        )
    return worst


def axiom_residual(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
) -> float:
    """Largest residual of the identity and quasigroup laws on L."""
    ops = _LoopOps(loop)
    e = loop.identity
    worst = 0.0
    for index in range(samples):
        x, y, _ = draw_sample(loop, seed, index, retries).points
        worst = max(
            worst,
            ops.dist(ops.mul(e, y), y),
            ops.dist(ops.mul(x, e), x),
            ops.dist(ops.mul(x, ops.ldiv(x, y)), y),
            ops.dist(ops.mul(ops.rdiv(y, x), x), y),
        )
    return worst


def _residual_check(name: str, residual: float | None, tol: float) -> DerivativeCheck:
    if residual is None:
        return DerivativeCheck(name, float("nan"), tol, ConditionStatus.NOT_APPLICABLE)
    status = ConditionStatus.HOLDS if residual <= tol else ConditionStatus.FAILS
    return DerivativeCheck(name, residual, tol, status)


def consistency_checks(
    loop: SmoothLoop,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    retries: int = DEFAULT_RETRIES,
    condition_limit: float = DEFAULT_CONDITION_LIMIT,
    derivative_tol: float = 1e-5,
    h: float = DEFAULT_FD_STEP,
) -> tuple[DerivativeCheck, ...]:
    """
    Self-checks of the prolongation machinery on ``loop``.

    ``semidirect-product`` compares T(L) with the closed-form semidirect
    product and is not applicable off groups; ``division-roundtrip`` checks
    the divisions of T(L); ``jacobian-dual-vs-fd`` compares dual-number and
    central-difference Jacobians against ``derivative_tol``.
    """
    checks = (
        _residual_check(
            "semidirect-product",
            semidirect_residual(loop, samples, seed, retries),
            tol,
        ),
        _residual_check(
            "division-roundtrip",
            roundtrip_residual(loop, samples, seed, retries, condition_limit),
            tol,
        ),
        _residual_check(
            "jacobian-dual-vs-fd",
            jacobian_cross_check(loop, samples, seed, h, retries),
            derivative_tol,
        ),
    )
    logger.debug(
        "Consistency checks finished",
        loop=loop.name,
        residuals={c.name: c.residual for c in checks},
    )
    return checks


class SmoothVerificationService:
    """Runs the smooth-loop checks with one set of tolerances and sample sizes."""

    def __init__(
        self,
        *,
        samples: int = DEFAULT_SAMPLES,
        seed: int = 0,
        tolerance: float = DEFAULT_TOLERANCE,
        derivative_tolerance: float = 1e-5,
        fd_step: float = DEFAULT_FD_STEP,
        condition_limit: float = DEFAULT_CONDITION_LIMIT,
        retries: int = DEFAULT_RETRIES,
    ) -> None:
        self.samples = samples
        self.seed = seed
        self.tolerance = tolerance
        self.derivative_tolerance = derivative_tolerance
        self.fd_step = fd_step
        self.condition_limit = condition_limit
        self.retries = retries

    def suite(self, loop: SmoothLoop) -> SuiteReport:
        return property_suite(
            loop,
            self.samples,
            self.tolerance,
            self.seed,
            self.retries,
            self.condition_limit,
        )

    def consistency(self, loop: SmoothLoop) -> tuple[DerivativeCheck, ...]:
        return consistency_checks(
            loop,
            self.samples,
            self.tolerance,
            self.seed,
            self.retries,
            self.condition_limit,
            self.derivative_tolerance,
            self.fd_step,
        )

    def condition(self, loop: SmoothLoop, kind: PropertyKind) -> NumericReport:
        return check_differential_condition(
            loop, kind, self.samples, self.tolerance, self.seed, self.retries
        )

    def derivatives_agree(self, loop: SmoothLoop) -> bool:
        gap = jacobian_cross_check(
            loop, self.samples, self.seed, self.fd_step, self.retries
        )
        logger.debug("Jacobian cross-check", loop=loop.name, gap=gap)
        return gap <= self.derivative_tolerance
