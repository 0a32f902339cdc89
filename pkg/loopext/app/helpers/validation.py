"""
Validation helpers for command-line arguments.

The ``*_arg`` functions are argparse ``type=`` callables: they convert a raw
string or raise ``argparse.ArgumentTypeError``, which argparse reports as a
usage error (exit code 2).
"""

import argparse
from typing import NamedTuple

from loopext.domain.abelian import AbGroup, InvalidKernelSpecError, parse_kernel_spec
from loopext.domain.conditions import (
    PropertyKind,
    UnknownPropertyError,
    property_filter,
)


class ValidationResult(NamedTuple):
    """Result of a validation operation."""

    is_valid: bool
    error_message: str | None = None


def validate_filter_specs(specs: list[str]) -> ValidationResult:
    """
    Check every comma-separated filter name without building the filters.

    Examples:
        >>> validate_filter_specs(["left-bol,nonassociative"])
        ValidationResult(is_valid=True, error_message=None)

        >>> validate_filter_specs(["moufang"]).is_valid
        False
    """
    if not specs:
        return ValidationResult(False, "At least one --property is required")
    for spec in specs:
        for part in spec.split(","):
            if not part.strip():
                continue
            try:
                property_filter(part)
            except UnknownPropertyError as err:
                return ValidationResult(False, str(err))
    return ValidationResult(True)


def positive_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def seed_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer seed, got {text!r}"
        ) from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"seeds must be non-negative, got {value}")
    return value


def tolerance_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerances must be positive, got {value}")
    return value


def kernel_arg(text: str) -> AbGroup:
    try:
        return parse_kernel_spec(text)
    except InvalidKernelSpecError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def property_arg(text: str) -> PropertyKind:
    try:
        return PropertyKind.parse(text)
    except UnknownPropertyError as err:
        raise argparse.ArgumentTypeError(str(err)) from None
