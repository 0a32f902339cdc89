"""
Audits of the extension criterion against brute force.

For each property the audit computes whether L has it, whether the cocycle
condition holds, and whether the materialized F(P, Q) has it, and reports
any disagreement with "extension has it ⇔ base has it and condition holds".
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from loopext.domain.abelian.models import AbGroup
from loopext.domain.conditions.cocycle_conditions import check_cocycle_condition
from loopext.domain.conditions.models import (
    AuditReport,
    ConditionResult,
    ConditionStatus,
    PropertyKind,
)
from loopext.domain.conditions.properties import has_property
from loopext.domain.extensions.models import Cocycle
from loopext.domain.extensions.service import (
    DEFAULT_EXTENSION_CAP,
    build_extension,
    random_cocycle,
)
from loopext.domain.finite_loop.exceptions import MissingInverseError
from loopext.domain.finite_loop.models import FiniteLoop
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)


def evaluate_condition(cocycle: Cocycle, kind: PropertyKind) -> ConditionResult:
    """check_cocycle_condition with missing inverses reported as NOT_APPLICABLE."""
    try:
        return check_cocycle_condition(cocycle, kind)
    except MissingInverseError as err:
        return ConditionResult(
            kind,
            ConditionStatus.NOT_APPLICABLE,
            witness=(err.element,),
            detail=str(err),
        )


def audit_cocycle(
    cocycle: Cocycle,
    kinds: Iterable[PropertyKind] = tuple(PropertyKind),
    cap: int = DEFAULT_EXTENSION_CAP,
    trial: int | None = None,
) -> list[AuditReport]:
    """One AuditReport per property, sharing a single materialized extension.

    Raises:
        ExtensionSizeError: If the extension exceeds ``cap``
    """
    extension = build_extension(cocycle, cap)
    reports = []
    for kind in kinds:
        base = has_property(cocycle.base, kind)
        condition = evaluate_condition(cocycle, kind)
        ext = has_property(extension, kind)
        report = AuditReport(
            kind=kind,
            base_has=base.holds,
            condition=condition.status,
            extension_has=ext.holds,
            base_witness=base.witness,
            condition_witness=condition.witness,
            extension_witness=ext.witness,
            trial=trial,
        )
        if not report.consistent:
            logger.warning(
                "Extension criterion violated",
                property=kind.value,
                trial=trial,
                base_has=base.holds,
                condition=condition.status.value,
                extension_has=ext.holds,
            )
        reports.append(report)
    return reports


def equivalence_audit(
    cocycle: Cocycle, kind: PropertyKind, cap: int = DEFAULT_EXTENSION_CAP
) -> AuditReport:
    return audit_cocycle(cocycle, (kind,), cap)[0]


@dataclass(frozen=True)
class AuditSummary:
    reports: tuple[AuditReport, ...]

    @property
    def violations(self) -> tuple[AuditReport, ...]:
        return tuple(r for r in self.reports if not r.consistent)

    @property
    def ok(self) -> bool:
        return not self.violations


class AuditService:
    """Seeded multi-trial audits over random normalized cocycles.

    Trial ``t`` draws its cocycle from the seed sequence ``[seed, t]``, so any
    single trial can be replayed on its own.
    """

    def __init__(
        self,
        kernel: AbGroup,
        *,
        seed: int = 0,
        cap: int = DEFAULT_EXTENSION_CAP,
        kinds: Sequence[PropertyKind] = tuple(PropertyKind),
    ) -> None:
        self._kernel = kernel
        self._seed = seed
        self._cap = cap
        self._kinds = tuple(kinds)

    def cocycle_for_trial(self, L: FiniteLoop, trial: int) -> Cocycle:
        return random_cocycle(L, self._kernel, seed=[self._seed, trial])

    def iter_reports(self, L: FiniteLoop, trials: int) -> Iterator[AuditReport]:
        for trial in range(trials):
            cocycle = self.cocycle_for_trial(L, trial)
            yield from audit_cocycle(cocycle, self._kinds, self._cap, trial)

    def run(self, L: FiniteLoop, trials: int) -> AuditSummary:
        summary = AuditSummary(tuple(self.iter_reports(L, trials)))
        logger.info(
            "Audit finished",
            order=L.order,
            kernel=self._kernel.spec,
            trials=trials,
            reports=len(summary.reports),
            violations=len(summary.violations),
        )
        return summary
