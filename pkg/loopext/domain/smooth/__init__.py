"""
Smooth loops domain package.

Closed-form loops on ℝⁿ, forward-mode Jacobians, the tangent prolongation
T(L) and the sampled checks relating the weak properties of L, of T(L) and
the differential condition.
"""

from .catalog import (
    CATALOG,
    AdditiveGroup,
    AffineGroup,
    CommutativeLoop,
    ParabolicLoop,
    builtin_loop,
    catalog_names,
)
from .dual import DualScalar, Scalar, deriv_of, value_of
from .exceptions import (
    DomainViolationError,
    IllConditionedError,
    NonFiniteValueError,
    ResampleLimitError,
    SmoothLoopError,
    UnknownSmoothLoopError,
)
from .models import (
    DerivativeCheck,
    NumericReport,
    ProlongedElement,
    PropertyRow,
    SmoothLoop,
    SuiteReport,
    as_array,
)
from .prolongation import (
    cocycle_P,
    cocycle_P_inverse,
    cocycle_Q,
    cocycle_Q_inverse,
    conditioned_solve,
    directional_derivative,
    finite_difference_jacobian,
    jacobian_at,
    prolong_identity,
    prolong_ldiv,
    prolong_mul,
    prolong_rdiv,
    prolonged,
    semidirect_mul,
)
from .service import (
    SmoothVerificationService,
    axiom_residual,
    check_differential_condition,
    consistency_checks,
    draw_sample,
    inverse_derivative_checks,
    jacobian_cross_check,
    property_suite,
    roundtrip_residual,
    semidirect_residual,
)

__all__ = [
    "DomainViolationError",
    "IllConditionedError",
    "NonFiniteValueError",
    "ResampleLimitError",
    "SmoothLoopError",
    "UnknownSmoothLoopError",
    "DualScalar",
    "Scalar",
    "deriv_of",
    "value_of",
    "DerivativeCheck",
    "NumericReport",
    "ProlongedElement",
    "PropertyRow",
    "SmoothLoop",
    "SuiteReport",
    "as_array",
    "CATALOG",
    "AdditiveGroup",
    "AffineGroup",
    "CommutativeLoop",
    "ParabolicLoop",
    "builtin_loop",
    "catalog_names",
    "cocycle_P",
    "cocycle_P_inverse",
    "cocycle_Q",
    "cocycle_Q_inverse",
    "conditioned_solve",
    "directional_derivative",
    "finite_difference_jacobian",
    "jacobian_at",
    "prolong_identity",
    "prolong_ldiv",
    "prolong_mul",
    "prolong_rdiv",
    "prolonged",
    "semidirect_mul",
    "SmoothVerificationService",
    "axiom_residual",
    "check_differential_condition",
    "consistency_checks",
    "draw_sample",
    "inverse_derivative_checks",
    "jacobian_cross_check",
    "roundtrip_residual",
    "semidirect_residual",
    "property_suite",
]
