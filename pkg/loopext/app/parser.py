"""
Argument parser of the ``loopext`` command.

Every subcommand stores its handler under ``handler``; defaults for seeds,
sample sizes, trial counts and tolerances come from the configuration and are
printed by ``--help``.
"""

import argparse
from pathlib import Path

from loopext.app.commands import conditions, extensions, smooth, tables
from loopext.app.helpers.validation import (
    kernel_arg,
    positive_int_arg,
    property_arg,
    seed_arg,
    tolerance_arg,
)
from loopext.domain.conditions import filter_names
from loopext.domain.smooth import catalog_names
from loopext.infrastructure.config import Config

TABLE_HELP = "Cayley table file, or the name of a shipped fixture"


def _formatter(prog: str) -> argparse.HelpFormatter:
    return argparse.ArgumentDefaultsHelpFormatter(prog, max_help_position=32)


def _add_table(parser: argparse.ArgumentParser, *, positional: bool = False) -> None:
    if positional:
        parser.add_argument("table", help=TABLE_HELP)
    else:
        parser.add_argument("--table", required=True, help=TABLE_HELP)


def _add_seed(parser: argparse.ArgumentParser, config: Config) -> None:
    parser.add_argument(
        "--seed", type=seed_arg, default=config.seed, help="Random seed"
    )


def _add_table_commands(sub: argparse._SubParsersAction, config: Config) -> None:
    verify = sub.add_parser(
        "verify", help="Check that a table is a loop", formatter_class=_formatter
    )
    verify.add_argument("table", type=Path, help="Cayley table file")
    verify.set_defaults(handler=tables.verify)

    props = sub.add_parser(
        "props", help="Report the nine weak properties", formatter_class=_formatter
    )
    _add_table(props, positional=True)
    props.set_defaults(handler=tables.props)

    inn = sub.add_parser(
        "inn",
        help="Multiplication and inner mapping groups",
        formatter_class=_formatter,
    )
    _add_table(inn, positional=True)
    inn.set_defaults(handler=tables.inn)

    search = sub.add_parser(
        "search",
        help="Enumerate normalized loops satisfying filters",
        formatter_class=_formatter,
        epilog="filters: " + ", ".join(filter_names()),
    )
    search.add_argument("--order", type=positive_int_arg, required=True)
    search.add_argument(
        "--property",
        action="append",
        required=True,
        help="Filter name, comma-separated names, repeatable (conjunction)",
    )
    search.add_argument("--limit", type=positive_int_arg, default=1)
    search.set_defaults(handler=tables.search)


def _add_extension_commands(sub: argparse._SubParsersAction, config: Config) -> None:
    extend = sub.add_parser(
        "extend", help="Print the table of F(P, Q)", formatter_class=_formatter
    )
    _add_table(extend)
    extend.add_argument("--kernel", type=kernel_arg, help="Kernel z<m>^<k>")
    extend.add_argument("--cocycle", type=Path, help="Cocycle file")
    _add_seed(extend, config)
    extend.set_defaults(handler=extensions.extend)

    tangentlike = sub.add_parser(
        "tangentlike",
        help="Print the cocycle of a tangent-like extension",
        formatter_class=_formatter,
    )
    _add_table(tangentlike)
    tangentlike.add_argument("--kernel", type=kernel_arg, required=True)
    tangentlike.add_argument("--phi", type=Path, help="Φ file")
    tangentlike.add_argument(
        "--emit-phi", action="store_true", help="Print Φ instead of the cocycle"
    )
    _add_seed(tangentlike, config)
    tangentlike.set_defaults(handler=extensions.tangentlike)


def _add_condition_commands(sub: argparse._SubParsersAction, config: Config) -> None:
    check = sub.add_parser(
        "check", help="Evaluate a cocycle condition", formatter_class=_formatter
    )
    _add_table(check)
    check.add_argument("--property", type=property_arg, required=True)
    check.add_argument("--cocycle", type=Path, help="Cocycle file")
    check.add_argument("--phi", type=Path, help="Φ file")
    check.add_argument("--kernel", type=kernel_arg, help="Kernel z<m>^<k>, with --phi")
    _add_seed(check, config)
    check.set_defaults(handler=conditions.check)

    audit = sub.add_parser(
        "audit",
        help="Compare extension properties with the cocycle conditions",
        formatter_class=_formatter,
    )
    _add_table(audit)
    audit.add_argument("--kernel", type=kernel_arg, required=True)
    audit.add_argument("--trials", type=positive_int_arg, default=config.trials)
    audit.add_argument(
        "--property",
        type=property_arg,
        action="append",
        help="Restrict to a property, repeatable (default: all nine)",
    )
    _add_seed(audit, config)
    audit.set_defaults(handler=conditions.audit)


def _add_smooth_commands(sub: argparse._SubParsersAction, config: Config) -> None:
    smooth_parser = sub.add_parser(
        "smooth", help="Numerical checks on smooth loops", formatter_class=_formatter
    )
    smooth_sub = smooth_parser.add_subparsers(dest="smooth_command", required=True)

    demo = smooth_sub.add_parser(
        "demo", help="Run the property suite", formatter_class=_formatter
    )
    demo.add_argument("name", choices=catalog_names())
    demo.add_argument("--samples", type=positive_int_arg, default=config.samples)
    demo.add_argument(
        "--tol", type=tolerance_arg, default=config.algebraic_tolerance
    )
    demo.add_argument(
        "--porcelain", action="store_true", help="One key=value line per property"
    )
    _add_seed(demo, config)
    demo.set_defaults(handler=smooth.demo)

    listing = smooth_sub.add_parser("list", help="List catalog loops")
    listing.set_defaults(handler=smooth.catalog)


def build_parser(config: Config) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopext",
        description="Finite and smooth loops: extensions, conditions and audits.",
        formatter_class=_formatter,
    )
    parser.add_argument(
        "--log-level", default=None, help="Override LOG_LEVEL (e.g. INFO, DEBUG)"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    _add_table_commands(sub, config)
    _add_extension_commands(sub, config)
    _add_condition_commands(sub, config)
    _add_smooth_commands(sub, config)
    return parser
