"""
Conditions domain exceptions.
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from loopext.domain.mapping_groups.models import Perm


class ConditionError(Exception):
    """Base exception for property and condition checks."""


class UnknownPropertyError(ConditionError):
    """Raised when a property or filter name is not recognized."""

    def __init__(self, name: str, available: list[str]) -> None:
        self.name = name
        self.available = available
        super().__init__(
            f"Unknown property {name!r}; expected one of: {', '.join(available)}"
        )


class WordNotInnerError(ConditionError):
    """Raised when a translation word expected to fix the identity does not.

    Signals an inconsistent loop or inner mapping group, never bad user input.
    """

    def __init__(self, label: str, perm: "Perm") -> None:
        self.label = label
        self.perm = perm
        super().__init__(
            f"Word {label} maps the identity to {perm(0)}; it is not an inner mapping"
        )
