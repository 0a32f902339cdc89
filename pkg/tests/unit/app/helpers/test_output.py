from io import StringIO

from loopext.app.helpers.output import (
    aligned_table,
    check_lines,
    condition_line,
    emit,
    group_lines,
    property_line,
    suite_lines,
    yes_no,
)
from loopext.domain.conditions import (
    ConditionResult,
    ConditionStatus,
    PropertyKind,
    has_property,
)
from loopext.domain.mapping_groups import inner_mapping_group
from loopext.domain.smooth import (
    DerivativeCheck,
    NumericReport,
    PropertyRow,
    SuiteReport,
)


def _suite_report() -> SuiteReport:
    row = PropertyRow(
        kind=PropertyKind.FLEXIBLE,
        residual_loop=0.25,
        residual_prolongation=0.5,
        condition=NumericReport(
            PropertyKind.FLEXIBLE, float("nan"), 1e-8, ConditionStatus.NOT_APPLICABLE
        ),
        holds_loop=False,
        holds_prolongation=False,
        witness=(0.5, -1.0),
    )
    checks = (
        DerivativeCheck("inverse-via-rdiv", 2e-15, 1e-8, ConditionStatus.HOLDS),
        DerivativeCheck(
            "left-inverse-derivative",
            float("nan"),
            1e-8,
            ConditionStatus.NOT_APPLICABLE,
        ),
    )
    return SuiteReport("parabolic", 20, 1e-8, (row,), checks)


def test_yes_no():
    assert (yes_no(True), yes_no(False)) == ("yes", "no")


def test_emit_terminates_every_line():
    out = StringIO()

    emit(out, ["a", "b"])

    assert out.getvalue() == "a\nb\n"


def test_property_line(n5):
    line = property_line(has_property(n5, PropertyKind.FLEXIBLE))

    assert line == "property=flexible holds=no witness=2,1"


def test_condition_line_without_components():
    result = ConditionResult(PropertyKind.MONOASSOCIATIVE, ConditionStatus.HOLDS)

    assert condition_line(result, "cocycle") == (
        "property=monoassociative check=cocycle status=holds components=- witness=-"
    )


def test_condition_line_lists_components():
    result = ConditionResult(
        PropertyKind.LEFT_BOL,
        ConditionStatus.FAILS,
        witness=(2, 0, 1),
        components=("H1", "H3"),
    )

    assert condition_line(result, "tangent-like").endswith(
        "status=fails components=H1,H3 witness=2,0,1"
    )


def test_group_lines_for_trivial_group(z4):
    assert group_lines("Inn(L)", inner_mapping_group(z4)) == ["|Inn(L)| = 1"]


def test_aligned_table_pads_columns():
    lines = aligned_table(["a", "bbb"], [["xx", "y"]])

    assert lines == ["a   bbb", "--  ---", "xx  y"]


def test_suite_lines_table():
    lines = suite_lines(_suite_report())

    assert lines[0] == "loop=parabolic samples=20 tol=1e-08"
    assert lines[1].split() == [
        "property",
        "resL",
        "resT",
        "resCond",
        "holds",
        "verdict",
        "witness",
    ]
    assert lines[3].split() == [
        "flexible",
        "2.500e-01",
        "5.000e-01",
        "n/a",
        "no",
        "pass",
        "0.5,-1",
    ]
    assert lines[-2] == "inverse-via-rdiv: residual=2.000e-15 status=holds"
    assert lines[-1] == "left-inverse-derivative: residual=n/a status=n/a"


def test_suite_lines_porcelain():
    lines = suite_lines(_suite_report(), porcelain=True)

    assert lines == [
        "property=flexible resL=2.500e-01 resT=5.000e-01 resCond=n/a pass=true",
        "check=inverse-via-rdiv residual=2.000e-15 pass=true",
        "check=left-inverse-derivative residual=n/a pass=true",
    ]


def test_check_lines_report_failures():
    checks = [
        DerivativeCheck("division-roundtrip", 3e-7, 1e-8, ConditionStatus.FAILS),
        DerivativeCheck(
            "semidirect-product", float("nan"), 1e-8, ConditionStatus.NOT_APPLICABLE
        ),
    ]

    assert check_lines(checks) == [
        "division-roundtrip: residual=3.000e-07 status=fails",
        "semidirect-product: residual=n/a status=n/a",
    ]
    assert check_lines(checks, porcelain=True) == [
        "check=division-roundtrip residual=3.000e-07 pass=false",
        "check=semidirect-product residual=n/a pass=true",
    ]
