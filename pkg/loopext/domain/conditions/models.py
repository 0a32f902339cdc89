"""
Property kinds and check results.

Each of the nine weak properties carries the letter of its cocycle identity:
A two-sided inverse, B left inverse, C right inverse, D monoassociative,
E left alternative, F right alternative, G flexible, H left Bol, J right Bol.
"""

from dataclasses import dataclass
from enum import Enum

from loopext.domain.conditions.exceptions import UnknownPropertyError

Witness = tuple[int, ...]


class PropertyKind(str, Enum):
    TWO_SIDED_INVERSE = "two-sided-inverse"
    LEFT_INVERSE = "left-inverse"
    RIGHT_INVERSE = "right-inverse"
    MONOASSOCIATIVE = "monoassociative"
    LEFT_ALTERNATIVE = "left-alternative"
    RIGHT_ALTERNATIVE = "right-alternative"
    FLEXIBLE = "flexible"
    LEFT_BOL = "left-bol"
    RIGHT_BOL = "right-bol"

    @property
    def letter(self) -> str:
        return _LETTERS[self]

    @property
    def arity(self) -> int:
        """Number of variables quantified over in the identity."""
        return _ARITIES[self]

    @property
    def needs_inverses(self) -> bool:
        return self in (
            PropertyKind.TWO_SIDED_INVERSE,
            PropertyKind.LEFT_INVERSE,
            PropertyKind.RIGHT_INVERSE,
        )

    @property
    def opposite(self) -> "PropertyKind":
        """The property the opposite loop has when this loop has ``self``."""
        return _OPPOSITES.get(self, self)

    @classmethod
    def parse(cls, text: str) -> "PropertyKind":
        """Accept the hyphenated name, the enum name or the identity letter."""
        key = text.strip()
        for kind in cls:
            names = (kind.value, kind.name.lower())
            if key.lower() in names or key.upper() == kind.letter:
                return kind
        raise UnknownPropertyError(text, [kind.value for kind in cls])

    def __str__(self) -> str:
        return self.value


_LETTERS = dict(zip(PropertyKind, "ABCDEFGHJ", strict=True))
_ARITIES = dict(zip(PropertyKind, (1, 2, 2, 1, 2, 2, 2, 3, 3), strict=True))
_OPPOSITES = {
    PropertyKind.LEFT_INVERSE: PropertyKind.RIGHT_INVERSE,
    PropertyKind.RIGHT_INVERSE: PropertyKind.LEFT_INVERSE,
    PropertyKind.LEFT_ALTERNATIVE: PropertyKind.RIGHT_ALTERNATIVE,
    PropertyKind.RIGHT_ALTERNATIVE: PropertyKind.LEFT_ALTERNATIVE,
    PropertyKind.LEFT_BOL: PropertyKind.RIGHT_BOL,
    PropertyKind.RIGHT_BOL: PropertyKind.LEFT_BOL,
}


class ConditionStatus(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "n/a"

    def __str__(self) -> str:
        return self.value


def format_witness(witness: Witness | None) -> str:
    if witness is None:
        return "-"
    return ",".join(str(v) for v in witness)


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of checking one property exhaustively on a finite loop."""

    kind: PropertyKind
    holds: bool
    witness: Witness | None = None
    detail: str = ""


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of evaluating a cocycle or tangent-like identity."""

    kind: PropertyKind
    status: ConditionStatus
    witness: Witness | None = None
    components: tuple[str, ...] = ()
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status is ConditionStatus.HOLDS


@dataclass(frozen=True)
class AuditReport:
    """Base property, condition and extension property side by side.

    For a valid loop and cocycle the extension has the property exactly when
    the base has it and the condition holds.
    """

    kind: PropertyKind
    base_has: bool
    condition: ConditionStatus
    extension_has: bool
    base_witness: Witness | None = None
    condition_witness: Witness | None = None
    extension_witness: Witness | None = None
    trial: int | None = None

    @property
    def consistent(self) -> bool:
        expected = self.base_has and self.condition is ConditionStatus.HOLDS
        return self.extension_has == expected

    @property
    def witness(self) -> Witness | None:
        """The most specific counterexample available for the report line."""
        for candidate in (
            self.extension_witness,
            self.condition_witness,
            self.base_witness,
        ):
            if candidate is not None:
                return candidate
        return None

    def line(self) -> str:
        yes_no = {True: "yes", False: "no"}
        fields = [
            f"property={self.kind.value}",
            f"base={yes_no[self.base_has]}",
            f"condition={self.condition.value}",
            f"extension={yes_no[self.extension_has]}",
            f"iff={'ok' if self.consistent else 'VIOLATED'}",
            f"witness={format_witness(self.witness)}",
        ]
        if self.trial is not None:
            fields.insert(0, f"trial={self.trial}")
        return " ".join(fields)
