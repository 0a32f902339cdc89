"""
Report rendering for command output.

Everything here returns plain strings; handlers write them to stdout so that
identical invocations produce byte-identical reports.
"""

from collections.abc import Iterable, Sequence
from typing import TextIO

from loopext.domain.conditions import (
    ConditionResult,
    ConditionStatus,
    PropertyResult,
    format_witness,
)
from loopext.domain.mapping_groups import PermGroup
from loopext.domain.smooth import DerivativeCheck, SuiteReport


def yes_no(value: bool) -> str:
    return "yes" if value else "no"


def emit(out: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        out.write(f"{line}\n")


def property_line(result: PropertyResult) -> str:
    return (
        f"property={result.kind.value} holds={yes_no(result.holds)} "
        f"witness={format_witness(result.witness)}"
    )


def condition_line(result: ConditionResult, check: str) -> str:
    components = ",".join(result.components) if result.components else "-"
    return (
        f"property={result.kind.value} check={check} status={result.status.value} "
        f"components={components} witness={format_witness(result.witness)}"
    )


def group_lines(name: str, group: PermGroup) -> list[str]:
    """Order and labelled generators in one-line image notation."""
    lines = [f"|{name}| = {len(group)}"]
    for generator in group.generators:
        lines.append(f"{generator.label} = {generator.perm}")
    return lines


def aligned_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row, strict=True)]

    def render(cells: Sequence[str]) -> str:
        padded = (c.ljust(w) for c, w in zip(cells, widths, strict=True))
        return "  ".join(padded).rstrip()

    return [render(headers), render(["-" * w for w in widths]), *map(render, rows)]


def _residual(value: float, status: ConditionStatus | None = None) -> str:
    if status is ConditionStatus.NOT_APPLICABLE:
        return "n/a"
    return f"{value:.3e}"


def check_lines(
    checks: Iterable[DerivativeCheck], *, porcelain: bool = False
) -> list[str]:
    if porcelain:
        return [
            f"check={c.name} residual={_residual(c.residual, c.status)} "
            f"pass={str(c.passed).lower()}"
            for c in checks
        ]
    return [
        f"{c.name}: residual={_residual(c.residual, c.status)} status={c.status.value}"
        for c in checks
    ]


def suite_lines(report: SuiteReport, *, porcelain: bool = False) -> list[str]:
    """The property table of a smooth suite, then the inverse-derivative checks."""
    if porcelain:
        lines = [row.porcelain() for row in report.rows]
        return lines + check_lines(report.derivative_checks, porcelain=True)

    rows = []
    for row in report.rows:
        condition = _residual(row.condition.residual, row.condition.status)
        rows.append(
            [
                row.kind.value,
                _residual(row.residual_loop),
                _residual(row.residual_prolongation),
                condition,
                yes_no(row.holds_loop),
                "pass" if row.verdict else "FAIL",
                ",".join(f"{v:.6g}" for v in row.witness) if row.witness else "-",
            ]
        )
    lines = [
        f"loop={report.loop} samples={report.samples} tol={report.tolerance:g}",
        *aligned_table(
            ["property", "resL", "resT", "resCond", "holds", "verdict", "witness"], rows
        ),
    ]
    return lines + check_lines(report.derivative_checks)
