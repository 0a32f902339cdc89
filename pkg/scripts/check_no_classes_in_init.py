#!/usr/bin/env python3
"""
Check that package __init__.py files only re-export names.

Allowed top-level statements are the module docstring, imports and the
``__all__`` assignment. Without arguments every __init__.py under loopext/ is
checked; otherwise only the given paths (as passed by a pre-commit hook).
"""

import ast
import sys
from collections.abc import Iterable
from pathlib import Path

PACKAGE_DIR = Path(__file__).resolve().parent.parent / "loopext"


def _is_docstring(node: ast.stmt) -> bool:
    match node:
        case ast.Expr(value=ast.Constant(value=str())):
            return True
        case _:
            return False


def _is_all_assignment(node: ast.stmt) -> bool:
    match node:
        case ast.Assign(
            targets=[ast.Name(id="__all__")], value=ast.List() | ast.Tuple()
        ):
            return True
        case _:
            return False


def violations(code: str) -> list[str]:
    """Describe every disallowed top-level statement, with its line."""
    try:
        tree = ast.parse(code)
    except SyntaxError as e:
        return [f"syntax error: {e.msg} (line {e.lineno})"]

    found = []
    for node in tree.body:
        if isinstance(node, ast.Import | ast.ImportFrom):
            continue
        if _is_docstring(node) or _is_all_assignment(node):
            continue
        found.append(f"line {node.lineno}: {type(node).__name__}")
    return found


def init_files(arguments: Iterable[str]) -> list[Path]:
    paths = [Path(a) for a in arguments]
    if not paths:
        return sorted(PACKAGE_DIR.rglob("__init__.py"))
    return [p for p in paths if p.name == "__init__.py"]


def main(arguments: list[str] | None = None) -> int:
    exit_code = 0
    for path in init_files(sys.argv[1:] if arguments is None else arguments):
        try:
            code = path.read_text(encoding="utf-8")
        except OSError as e:
            print(f"[ERROR] Could not read {path}: {e}")
            exit_code = 1
            continue
        for problem in violations(code):
            print(f"[ERROR] {path}: disallowed {problem}")
            exit_code = 1
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
