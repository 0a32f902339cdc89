import pytest

from loopext.domain.finite_loop import (
    LoopFixtureRepository,
    UnknownFixtureError,
    format_table,
    read_table,
    read_table_text,
    write_table,
)
from loopext.infrastructure.formats import FormatError


def test_fixture_names(repository):
    assert repository.names() == ["b8", "l6", "n5", "s3", "z4"]


@pytest.mark.parametrize("name", ["z4", "s3", "n5", "l6", "b8"])
def test_fixture_text_round_trips_byte_exact(fixtures_dir, name):
    path = fixtures_dir / f"{name}.tbl"

    assert format_table(read_table(path)) == path.read_text(encoding="utf-8")


def test_unknown_fixture_lists_available(repository):
    with pytest.raises(UnknownFixtureError) as exc_info:
        repository.load("q7")

    assert exc_info.value.available == ["b8", "l6", "n5", "s3", "z4"]


def test_empty_directory_has_no_fixtures(tmp_path):
    repository = LoopFixtureRepository(tmp_path)

    with pytest.raises(UnknownFixtureError, match="none"):
        repository.load("z4")


def test_comments_and_blank_lines_are_ignored():
    table = read_table_text("# a comment\n2\n\n0 1\n# between rows\n1 0\n")

    assert table.tolist() == [[0, 1], [1, 0]]


@pytest.mark.parametrize(
    "text,line,column,match",
    [
        ("2 2\n0 1\n1 0\n", 1, 3, "single integer order"),
        ("0\n", 1, 1, "order must be positive"),
        ("2\n0 1\n1\n", 3, 1, "expected 2 entries, found 1"),
        ("2\n0 1\n1 0 1\n", 3, 5, "expected 2 entries, found 3"),
        ("2\n0 5\n1 0\n", 2, 3, r"entry 5 is outside \[0, 2\)"),
        ("2\n0 x\n1 0\n", 2, 3, "expected an integer"),
        ("2\n0 1\n1 0\n7\n", 4, 1, "trailing"),
        ("2\n0 1\n", 3, 1, "unexpected end of input"),
    ],
)
def test_format_errors_name_line_and_column(text, line, column, match):
    with pytest.raises(FormatError, match=match) as exc_info:
        read_table_text(text, source="bad.tbl")

    assert (exc_info.value.line, exc_info.value.column) == (line, column)
    assert exc_info.value.source == "bad.tbl"


def test_write_table(tmp_path, n5):
    path = tmp_path / "copy.tbl"

    write_table(path, n5)

    assert read_table(path).tolist() == n5.rows()
