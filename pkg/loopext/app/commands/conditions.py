"""
Condition commands: check, audit.
"""

import argparse
from typing import TextIO

from loopext.app.commands.extensions import load_or_draw_phi
from loopext.app.helpers.inputs import load_loop
from loopext.app.helpers.output import condition_line
from loopext.app.helpers.status import ExitCode, UsageError
from loopext.domain.conditions import (
    AuditService,
    ConditionResult,
    ConditionStatus,
    PropertyKind,
    check_tangent_like_condition,
    evaluate_condition,
)
from loopext.domain.extensions import (
    read_cocycle,
    tangent_like_cocycle,
    validate_cocycle,
)
from loopext.infrastructure.config import Config
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)


def check(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """
    Evaluate the cocycle condition of ``--property``; with ``--phi`` also the
    Φ-identity, and the cocycle defaults to the tangent-like one.
    """
    if args.cocycle is None and args.phi is None:
        raise UsageError("check needs --cocycle, --phi or both")
    if args.phi is not None and args.kernel is None:
        raise UsageError("--phi requires --kernel")
    loop = load_loop(args.table, config.fixtures_dir)
    kind: PropertyKind = args.property
    results: list[tuple[str, ConditionResult]] = []
    cocycle = None
    if args.phi is not None:
        phi = load_or_draw_phi(args, config, loop)
        results.append(("tangent-like", check_tangent_like_condition(loop, phi, kind)))
        cocycle = tangent_like_cocycle(loop, phi)
    if args.cocycle is not None:
        cocycle = read_cocycle(args.cocycle, loop)
        report = validate_cocycle(cocycle)
        if not report.valid:
            raise UsageError(f"invalid cocycle: {report.summary()}")
    results.insert(0, ("cocycle", evaluate_condition(cocycle, kind)))
    for name, result in results:
        out.write(condition_line(result, name) + "\n")
    failed = any(r.status is ConditionStatus.FAILS for _, r in results)
    return ExitCode.from_verdict(not failed)


def audit(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """One line per (trial, property); exits 1 if any line violates the criterion."""
    loop = load_loop(args.table, config.fixtures_dir)
    kinds = tuple(args.property) if args.property else tuple(PropertyKind)
    service = AuditService(
        args.kernel, seed=args.seed, cap=config.extension_cap, kinds=kinds
    )
    violations = 0
    for report in service.iter_reports(loop, args.trials):
        out.write(report.line() + "\n")
        violations += not report.consistent
    logger.info(
        "Audit complete",
        trials=args.trials,
        lines=args.trials * len(kinds),
        violations=violations,
    )
    return ExitCode.from_verdict(violations == 0)
