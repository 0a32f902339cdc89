"""
Smooth-loop commands: smooth demo, smooth list.
"""

import argparse
from typing import TextIO

from loopext.app.helpers.output import check_lines, emit, suite_lines
from loopext.app.helpers.status import ExitCode
from loopext.domain.smooth import SmoothVerificationService, builtin_loop, catalog_names
from loopext.infrastructure.config import Config


def demo(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """
    Run the property suite and the prolongation self-checks on a catalog loop.

    Exits 1 when any suite row or self-check fails.
    """
    loop = builtin_loop(args.name)
    service = SmoothVerificationService(
        samples=args.samples,
        seed=args.seed,
        tolerance=args.tol,
        derivative_tolerance=config.derivative_tolerance,
        fd_step=config.finite_difference_step,
        condition_limit=config.condition_number_limit,
        retries=config.resample_retries,
    )
    report = service.suite(loop)
    checks = service.consistency(loop)
    emit(out, suite_lines(report, porcelain=args.porcelain))
    emit(out, check_lines(checks, porcelain=args.porcelain))
    return ExitCode.from_verdict(report.passed and all(c.passed for c in checks))


def catalog(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    emit(out, catalog_names())
    return ExitCode.OK
