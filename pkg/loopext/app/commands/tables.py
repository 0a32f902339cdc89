"""
Commands on finite loops given by Cayley tables: verify, props, inn, search.
"""

import argparse
from typing import TextIO

from loopext.app.helpers.inputs import load_loop
from loopext.app.helpers.output import emit, group_lines, property_line
from loopext.app.helpers.status import ExitCode, UsageError
from loopext.app.helpers.validation import validate_filter_specs
from loopext.domain.conditions import parse_filters, property_flags
from loopext.domain.finite_loop import (
    FiniteLoop,
    enumerate_loops,
    find_identity,
    format_table,
    read_table,
    validate_loop,
    validate_quasigroup,
)
from loopext.domain.mapping_groups import (
    inner_mapping_group,
    multiplication_group,
    orbits,
)
from loopext.infrastructure.config import Config
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)


def verify(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """
    Report whether a table is a loop with identity 0.

    A Latin square that is not normalized is reported as a quasigroup, with
    its identity element when it has one.
    """
    table = read_table(args.table)
    report = validate_loop(table)
    if report.valid:
        emit(out, [f"loop of order {report.order}"])
        return ExitCode.OK
    if validate_quasigroup(table).valid:
        identity = find_identity(table)
        detail = "no identity" if identity is None else f"identity {identity}"
        header = f"quasigroup of order {report.order} ({detail})"
        emit(out, [f"{header}; {report.summary()}"])
    else:
        emit(out, [f"not a quasigroup: {report.summary()}"])
    return ExitCode.VERIFIED_FALSE


def props(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """All nine properties with witnesses; exits 1 unless every one holds."""
    loop = load_loop(args.table, config.fixtures_dir)
    results = property_flags(loop).values()
    emit(out, (property_line(r) for r in results))
    return ExitCode.from_verdict(all(r.holds for r in results))


def inn(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    loop = load_loop(args.table, config.fixtures_dir)
    mlt = multiplication_group(loop, config.closure_cap)
    inner = inner_mapping_group(loop, config.closure_cap, mlt=mlt)
    lines = [f"|Mlt(L)| = {len(mlt)}", *group_lines("Inn(L)", inner)]
    lines.extend(
        "orbit " + " ".join(map(str, orbit))
        for orbit in orbits(inner)
        if len(orbit) > 1
    )
    emit(out, lines)
    return ExitCode.OK


def search(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """
    Print the first ``--limit`` loops of ``--order`` satisfying every filter,
    separated by blank lines.
    """
    validation = validate_filter_specs(args.property)
    if not validation.is_valid:
        raise UsageError(validation.error_message)
    predicate = parse_filters(args.property)
    hits: list[FiniteLoop] = enumerate_loops(
        args.order, predicate, args.limit, max_order=config.enumeration_max_order
    )
    out.write("\n".join(format_table(loop) for loop in hits))
    if not hits:
        logger.warning("No loop matched", order=args.order, predicate=predicate.name)
        return ExitCode.VERIFIED_FALSE
    return ExitCode.OK
