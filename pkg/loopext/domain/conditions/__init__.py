"""
Conditions domain package.

The nine weak properties on finite loops, the cocycle identities deciding
whether F(P, Q) inherits them, the Φ-identities of tangent-like extensions
and the brute-force audits tying the three together.
"""

from .cocycle_conditions import (
    check_cocycle_condition,
    check_monoassociative_expansion,
    left_bol_substitution_matrices,
    monoassociative_expansion,
)
from .exceptions import ConditionError, UnknownPropertyError, WordNotInnerError
from .filters import filter_names, parse_filters, property_filter
from .models import (
    AuditReport,
    ConditionResult,
    ConditionStatus,
    PropertyKind,
    PropertyResult,
    format_witness,
)
from .properties import has_property, property_flags
from .service import (
    AuditService,
    AuditSummary,
    audit_cocycle,
    equivalence_audit,
    evaluate_condition,
)
from .tangent_like import check_tangent_like_condition

__all__ = [
    "ConditionError",
    "UnknownPropertyError",
    "WordNotInnerError",
    "AuditReport",
    "ConditionResult",
    "ConditionStatus",
    "PropertyKind",
    "PropertyResult",
    "format_witness",
    "has_property",
    "property_flags",
    "filter_names",
    "parse_filters",
    "property_filter",
    "check_cocycle_condition",
    "check_monoassociative_expansion",
    "left_bol_substitution_matrices",
    "monoassociative_expansion",
    "check_tangent_like_condition",
    "AuditService",
    "AuditSummary",
    "audit_cocycle",
    "equivalence_audit",
    "evaluate_condition",
]
