"""
Named loop filters for the search.

``associative``, ``nonassociative``, every property name (or letter) and
``not-<name>`` are available; comma-separated lists and repeated filters
combine by conjunction.
"""

from collections.abc import Iterable

from loopext.domain.conditions.exceptions import UnknownPropertyError
from loopext.domain.conditions.models import PropertyKind
from loopext.domain.conditions.properties import (
    associative_partial_rejector,
    associativity_result,
    has_property,
    partial_rejector,
)
from loopext.domain.finite_loop.enumeration import PropertyFilter
from loopext.domain.finite_loop.models import FiniteLoop


def filter_names() -> list[str]:
    names = ["associative", "nonassociative"]
    for kind in PropertyKind:
        names.extend([kind.value, f"not-{kind.value}"])
    return names


def _kind_filter(kind: PropertyKind, *, negated: bool) -> PropertyFilter:
    if negated:
        return PropertyFilter(
            name=f"not-{kind.value}",
            accepts=lambda loop: not has_property(loop, kind).holds,
        )
    return PropertyFilter(
        name=kind.value,
        accepts=lambda loop: has_property(loop, kind).holds,
        rejects_partial=partial_rejector(kind),
    )


def _is_associative(loop: FiniteLoop) -> bool:
    return associativity_result(loop)[0]


def property_filter(name: str) -> PropertyFilter:
    """
    Build a single named filter.

    Raises:
        UnknownPropertyError: If ``name`` is not a known filter
    """
    key = name.strip().lower()
    if key == "associative":
        return PropertyFilter(
            name="associative",
            accepts=_is_associative,
            rejects_partial=associative_partial_rejector(),
        )
    if key == "nonassociative":
        return PropertyFilter(
            name="nonassociative", accepts=lambda loop: not _is_associative(loop)
        )
    negated = key.startswith("not-")
    try:
        kind = PropertyKind.parse(key[4:] if negated else key)
    except UnknownPropertyError:
        raise UnknownPropertyError(name, filter_names()) from None
    return _kind_filter(kind, negated=negated)


def parse_filters(specs: Iterable[str]) -> PropertyFilter:
    """Conjunction of every filter named in ``specs`` (each may be comma-separated)."""
    filters = [
        property_filter(part)
        for spec in specs
        for part in spec.split(",")
        if part.strip()
    ]
    return PropertyFilter.conjunction(filters)
