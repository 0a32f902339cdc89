#!/usr/bin/env python3
"""
Rebuild the frozen Cayley tables under fixtures/.

z4 and s3 are constructed directly; n5, l6 and b8 are the first hits of the
loop search for their filters. With --check nothing is written and the exit
status reports whether every fixture still matches.
"""

import argparse
import sys
from collections.abc import Callable
from pathlib import Path

from loopext.domain.conditions import parse_filters
from loopext.domain.finite_loop import (
    FiniteLoop,
    cyclic_group,
    enumerate_loops,
    format_table,
    symmetric_group,
)

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def _first(order: int, *filters: str) -> Callable[[], FiniteLoop]:
    def build() -> FiniteLoop:
        (loop,) = enumerate_loops(order, parse_filters(filters), limit=1)
        return loop

    return build


BUILDERS: dict[str, Callable[[], FiniteLoop]] = {
    "z4": lambda: cyclic_group(4),
    "s3": lambda: symmetric_group(3),
    "n5": _first(5, "nonassociative"),
    "l6": _first(6, "nonassociative"),
    "b8": _first(8, "left-bol", "nonassociative"),
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", default=sorted(BUILDERS))
    parser.add_argument("--check", action="store_true")
    parser.add_argument("--directory", type=Path, default=FIXTURES_DIR)
    args = parser.parse_args()

    exit_code = 0
    for name in args.names:
        text = format_table(BUILDERS[name]())
        path = args.directory / f"{name}.tbl"
        if args.check:
            current = path.read_text(encoding="utf-8") if path.is_file() else None
            if current != text:
                print(f"[ERROR] {path} differs from the regenerated table")
                exit_code = 1
            continue
        path.write_text(text, encoding="utf-8")
        print(f"wrote {path}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
