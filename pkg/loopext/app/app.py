import argparse
import sys
from collections.abc import Sequence
from typing import TextIO

from pydantic import ValidationError

from loopext.app.helpers.status import ExitCode, UsageError
from loopext.app.parser import build_parser
from loopext.domain.abelian import AbelianError
from loopext.domain.conditions import ConditionError
from loopext.domain.extensions import ExtensionError, ExtensionSizeError
from loopext.domain.finite_loop import EnumerationLimitError, FiniteLoopError
from loopext.domain.mapping_groups import ClosureLimitError, MappingGroupError
from loopext.domain.smooth import SmoothLoopError, UnknownSmoothLoopError
from loopext.infrastructure.config import Config, get_config
from loopext.infrastructure.formats import FormatError
from loopext.infrastructure.logging import (
    capture_warnings,
    get_logger,
    parse_log_level,
    run_context,
    setup_logging,
)

# Checked in order: resource limits and numeric trouble before the broader bases.
EXIT_CODES: tuple[tuple[tuple[type[BaseException], ...], ExitCode], ...] = (
    ((UnknownSmoothLoopError,), ExitCode.USAGE),
    (
        (ExtensionSizeError, ClosureLimitError, EnumerationLimitError, SmoothLoopError),
        ExitCode.RESOURCE,
    ),
    (
        (
            UsageError,
            FormatError,
            ValidationError,
            OSError,
            FiniteLoopError,
            MappingGroupError,
            AbelianError,
            ExtensionError,
            ConditionError,
        ),
        ExitCode.USAGE,
    ),
)


def exit_code_for(error: BaseException) -> ExitCode | None:
    for types, code in EXIT_CODES:
        if isinstance(error, types):
            return code
    return None


def run_command(
    args: argparse.Namespace, config: Config, out: TextIO, err: TextIO
) -> ExitCode:
    """Dispatch to the handler and translate domain errors into exit codes."""
    logger = get_logger(__name__)
    try:
        return args.handler(args, config, out)
    except Exception as error:
        code = exit_code_for(error)
        if code is None:
            logger.exception("Unexpected error", error_type=type(error).__name__)
            code = ExitCode.RESOURCE
        else:
            logger.debug(
                "Command failed", error_type=type(error).__name__, code=int(code)
            )
        err.write(f"error: {error}\n")
        return code


def main(
    argv: Sequence[str] | None = None,
    *,
    config: Config | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """
    Entry point of the ``loopext`` command.

    Args:
        argv: Arguments without the program name; ``sys.argv[1:]`` if None.
        config: Optional configuration object. If None, loads from environment.
        out: Report stream, stdout by default.
        err: Error stream, stderr by default.

    Returns:
        The process exit code.
    """
    config = config if config is not None else get_config()
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr

    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = (
        config.log_level
        if args.log_level is None
        else parse_log_level(args.log_level)
    )
    setup_logging(level=level, force_json=config.log_force_json)
    capture_warnings()
    with run_context(command=args.command, seed=getattr(args, "seed", None)):
        return int(run_command(args, config, out, err))
