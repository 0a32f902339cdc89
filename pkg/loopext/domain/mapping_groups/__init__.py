"""
Mapping groups package.

Permutations, group closure, the multiplication group Mlt(L), the inner mapping
group Inn(L) and the inner mappings behind the tangent-like cocycle.
"""

from .exceptions import (
    ClosureLimitError,
    DegreeMismatchError,
    InnerMapError,
    MappingGroupError,
    NotAPermutationError,
)
from .models import LabelledPerm, Perm, PermGroup
from .service import (
    TranslationWords,
    closure,
    compose,
    inner_generators,
    inner_map_P,
    inner_map_Q,
    inner_mapping_group,
    invert,
    multiplication_group,
    orbits,
    translation_words,
    translations,
)

__all__ = [
    "ClosureLimitError",
    "DegreeMismatchError",
    "InnerMapError",
    "MappingGroupError",
    "NotAPermutationError",
    "LabelledPerm",
    "Perm",
    "PermGroup",
    "closure",
    "compose",
    "inner_generators",
    "inner_map_P",
    "inner_map_Q",
    "inner_mapping_group",
    "invert",
    "multiplication_group",
    "TranslationWords",
    "orbits",
    "translation_words",
    "translations",
]
