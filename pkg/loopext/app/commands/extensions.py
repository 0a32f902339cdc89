"""
Extension commands: extend, tangentlike.
"""

import argparse
from typing import TextIO

from loopext.app.helpers.inputs import load_loop
from loopext.app.helpers.status import ExitCode, UsageError
from loopext.domain.extensions import (
    Cocycle,
    PhiHom,
    build_extension,
    format_cocycle,
    format_phi,
    random_cocycle,
    random_phi,
    read_cocycle,
    read_phi,
    tangent_like_cocycle,
    validate_cocycle,
)
from loopext.domain.finite_loop import FiniteLoop, format_table
from loopext.domain.mapping_groups import inner_mapping_group
from loopext.infrastructure.config import Config
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)


def load_or_draw_cocycle(args: argparse.Namespace, loop: FiniteLoop) -> Cocycle:
    """The ``--cocycle`` file when given, else a random cocycle from ``--seed``."""
    if args.cocycle is not None:
        return read_cocycle(args.cocycle, loop)
    if args.kernel is None:
        raise UsageError("--kernel is required without --cocycle")
    logger.info("Drawing random cocycle", kernel=args.kernel.spec, seed=args.seed)
    return random_cocycle(loop, args.kernel, seed=args.seed)


def load_or_draw_phi(
    args: argparse.Namespace, config: Config, loop: FiniteLoop
) -> PhiHom:
    """The ``--phi`` file when given, else a random orbit-sign Φ from ``--seed``."""
    inn = inner_mapping_group(loop, config.closure_cap)
    if args.phi is not None:
        return read_phi(args.phi, inn, args.kernel, config.phi_exhaustive_limit)
    logger.info("Drawing random homomorphism", kernel=args.kernel.spec, seed=args.seed)
    return random_phi(inn, args.kernel, args.seed, config.phi_exhaustive_limit)


def extend(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """Print the Cayley table of F(P, Q)."""
    loop = load_loop(args.table, config.fixtures_dir)
    cocycle = load_or_draw_cocycle(args, loop)
    report = validate_cocycle(cocycle)
    if not report.valid:
        raise UsageError(f"invalid cocycle: {report.summary()}")
    extension = build_extension(cocycle, config.extension_cap)
    out.write(format_table(extension))
    return ExitCode.OK


def tangentlike(args: argparse.Namespace, config: Config, out: TextIO) -> ExitCode:
    """Print the cocycle of the tangent-like extension Φ(L, A)."""
    loop = load_loop(args.table, config.fixtures_dir)
    phi = load_or_draw_phi(args, config, loop)
    if args.emit_phi:
        out.write(format_phi(phi))
        return ExitCode.OK
    out.write(format_cocycle(tangent_like_cocycle(loop, phi)))
    return ExitCode.OK
