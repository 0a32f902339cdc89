import pytest

from loopext.domain.conditions import PropertyKind, has_property, property_filter
from loopext.domain.finite_loop import (
    EnumerationLimitError,
    LoopEnumerator,
    PropertyFilter,
    enumerate_loops,
    is_associative,
)


def test_order_four_loops_are_the_four_group_labellings():
    loops = enumerate_loops(4, PropertyFilter.everything(), limit=100)

    assert len(loops) == 4
    assert all(is_associative(L) for L in loops)


def test_order_five_has_six_group_tables():
    groups = enumerate_loops(5, property_filter("associative"), limit=100)

    assert len(groups) == 6


def test_first_nonassociative_loop_of_order_five_is_n5(n5):
    (first,) = enumerate_loops(5, property_filter("nonassociative"), limit=1)

    assert first == n5


def test_enumeration_is_deterministic():
    first = enumerate_loops(5, PropertyFilter.everything(), limit=10)
    second = enumerate_loops(5, PropertyFilter.everything(), limit=10)

    assert first == second


@pytest.mark.parametrize(
    "kind",
    [
        PropertyKind.FLEXIBLE,
        PropertyKind.LEFT_ALTERNATIVE,
        PropertyKind.MONOASSOCIATIVE,
    ],
)
def test_partial_pruning_matches_leaf_filtering(kind):
    pruned = enumerate_loops(5, property_filter(kind.value), limit=100)
    everything = enumerate_loops(5, PropertyFilter.everything(), limit=100)

    assert pruned == [L for L in everything if has_property(L, kind).holds]


def test_conjunction_of_single_filter_is_that_filter():
    only = property_filter("flexible")

    assert PropertyFilter.conjunction([only]) is only
    assert PropertyFilter.conjunction([]).name == "any"


@pytest.mark.parametrize("order", [0, 9])
def test_order_outside_supported_range(order):
    with pytest.raises(EnumerationLimitError) as exc_info:
        LoopEnumerator().enumerate(order, PropertyFilter.everything(), limit=1)

    assert exc_info.value.max_order == 8


def test_non_positive_limit_returns_nothing():
    assert enumerate_loops(3, PropertyFilter.everything(), limit=0) == []


def test_max_order_is_configurable():
    with pytest.raises(EnumerationLimitError):
        enumerate_loops(6, PropertyFilter.everything(), limit=1, max_order=5)
