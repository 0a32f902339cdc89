import pytest

from loopext.domain.conditions import (
    AuditReport,
    ConditionResult,
    ConditionStatus,
    PropertyKind,
    UnknownPropertyError,
    format_witness,
)


@pytest.mark.parametrize(
    ("text", "kind"),
    [
        ("left-bol", PropertyKind.LEFT_BOL),
        ("LEFT_BOL", PropertyKind.LEFT_BOL),
        ("H", PropertyKind.LEFT_BOL),
        ("j", PropertyKind.RIGHT_BOL),
        (" flexible ", PropertyKind.FLEXIBLE),
        ("a", PropertyKind.TWO_SIDED_INVERSE),
    ],
)
def test_parse(text, kind):
    assert PropertyKind.parse(text) is kind


def test_parse_unknown():
    with pytest.raises(UnknownPropertyError) as exc_info:
        PropertyKind.parse("moufang")

    assert exc_info.value.name == "moufang"
    assert "left-bol" in exc_info.value.available


def test_letters_and_arities():
    assert "".join(kind.letter for kind in PropertyKind) == "ABCDEFGHJ"
    assert [kind.arity for kind in PropertyKind] == [1, 2, 2, 1, 2, 2, 2, 3, 3]


@pytest.mark.parametrize(
    ("kind", "opposite"),
    [
        (PropertyKind.LEFT_INVERSE, PropertyKind.RIGHT_INVERSE),
        (PropertyKind.LEFT_ALTERNATIVE, PropertyKind.RIGHT_ALTERNATIVE),
        (PropertyKind.RIGHT_BOL, PropertyKind.LEFT_BOL),
        (PropertyKind.FLEXIBLE, PropertyKind.FLEXIBLE),
        (PropertyKind.MONOASSOCIATIVE, PropertyKind.MONOASSOCIATIVE),
    ],
)
def test_opposite(kind, opposite):
    assert kind.opposite is opposite
    assert opposite.opposite is kind


def test_format_witness():
    assert format_witness(None) == "-"
    assert format_witness((1, 0, 2)) == "1,0,2"


def test_condition_result_holds():
    assert ConditionResult(PropertyKind.FLEXIBLE, ConditionStatus.HOLDS).holds
    skipped = ConditionResult(PropertyKind.FLEXIBLE, ConditionStatus.NOT_APPLICABLE)
    assert not skipped.holds


def test_audit_report_line():
    report = AuditReport(
        kind=PropertyKind.FLEXIBLE,
        base_has=True,
        condition=ConditionStatus.HOLDS,
        extension_has=True,
        trial=3,
    )

    assert report.consistent
    assert report.line() == (
        "trial=3 property=flexible base=yes condition=holds extension=yes "
        "iff=ok witness=-"
    )


def test_audit_report_prefers_extension_witness():
    report = AuditReport(
        kind=PropertyKind.LEFT_BOL,
        base_has=True,
        condition=ConditionStatus.HOLDS,
        extension_has=False,
        condition_witness=(1, 1, 1),
        extension_witness=(4, 2, 9),
    )

    assert not report.consistent
    assert report.witness == (4, 2, 9)
    assert report.line().endswith("iff=VIOLATED witness=4,2,9")


def test_missing_property_is_consistent_without_extension():
    report = AuditReport(
        kind=PropertyKind.LEFT_INVERSE,
        base_has=False,
        condition=ConditionStatus.NOT_APPLICABLE,
        extension_has=False,
        base_witness=(2,),
    )

    assert report.consistent
    assert report.line() == (
        "property=left-inverse base=no condition=n/a extension=no iff=ok witness=2"
    )
