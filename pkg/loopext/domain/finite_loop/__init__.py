"""
Finite loop domain package.

Cayley tables of finite quasigroups and loops, their arithmetic, the opposite
loop, the table file format and the backtracking loop search.
"""

from .enumeration import LoopEnumerator, PropertyFilter, enumerate_loops
from .exceptions import (
    ElementOutOfRangeError,
    EnumerationLimitError,
    FiniteLoopError,
    InvalidLoopError,
    MissingInverseError,
    StructuralError,
    UnknownFixtureError,
)
from .models import CayleyTable, FiniteLoop, ValidationReport, as_cayley_table
from .repository import (
    LoopFixtureRepository,
    format_table,
    parse_table,
    read_table,
    read_table_text,
    write_table,
)
from .service import (
    associativity_witness,
    cyclic_group,
    find_identity,
    inverse,
    inverse_table,
    is_associative,
    ldiv,
    left_inverse_elem,
    left_translation,
    mul,
    opposite,
    rdiv,
    right_inverse_elem,
    right_translation,
    square,
    symmetric_group,
    validate_loop,
    validate_quasigroup,
)

__all__ = [
    "ElementOutOfRangeError",
    "EnumerationLimitError",
    "FiniteLoopError",
    "InvalidLoopError",
    "MissingInverseError",
    "StructuralError",
    "UnknownFixtureError",
    "CayleyTable",
    "FiniteLoop",
    "ValidationReport",
    "as_cayley_table",
    "associativity_witness",
    "cyclic_group",
    "find_identity",
    "inverse",
    "inverse_table",
    "is_associative",
    "ldiv",
    "left_inverse_elem",
    "left_translation",
    "mul",
    "opposite",
    "rdiv",
    "right_inverse_elem",
    "right_translation",
    "square",
    "symmetric_group",
    "validate_loop",
    "validate_quasigroup",
    "LoopEnumerator",
    "PropertyFilter",
    "enumerate_loops",
    "LoopFixtureRepository",
    "format_table",
    "parse_table",
    "read_table",
    "read_table_text",
    "write_table",
]
