import pytest

from loopext.infrastructure.formats import (
    FormatError,
    TextFormatReader,
    format_rows,
    tokenize_line,
)


def test_tokenize_line_records_one_based_columns():
    tokens = tokenize_line("  12 x\t7", 3)

    assert [(t.text, t.line, t.column) for t in tokens] == [
        ("12", 3, 3),
        ("x", 3, 6),
        ("7", 3, 8),
    ]


def test_reader_skips_comments_and_blank_lines():
    reader = TextFormatReader("# header\n\n2\n  # indented comment\n0 1\n")

    assert reader.next_ints() == [2]
    assert reader.next_ints(2) == [0, 1]
    assert reader.at_end


def test_token_as_int_reports_position():
    reader = TextFormatReader("1 a\n", source="t.tbl")

    with pytest.raises(FormatError) as exc_info:
        reader.next_ints()

    assert exc_info.value.line == 1
    assert exc_info.value.column == 3
    assert str(exc_info.value).startswith("t.tbl:1:3:")


def test_next_ints_rejects_wrong_count():
    reader = TextFormatReader("0 1 2\n")

    with pytest.raises(FormatError, match="expected 2 integers, found 3") as exc_info:
        reader.next_ints(2)

    assert exc_info.value.column == 5


def test_next_line_past_end_points_after_last_line():
    reader = TextFormatReader("1\n2\n")
    reader.next_line()
    reader.next_line()

    with pytest.raises(FormatError, match="unexpected end of input") as exc_info:
        reader.next_line()

    assert exc_info.value.line == 3


def test_expect_end_flags_trailing_content():
    reader = TextFormatReader("1\n9 9\n")
    reader.next_line()

    with pytest.raises(FormatError, match="trailing") as exc_info:
        reader.expect_end()

    assert (exc_info.value.line, exc_info.value.column) == (2, 1)


def test_format_rows_ends_every_line_with_newline():
    assert format_rows([[0, 1], [1, 0]]) == "0 1\n1 0\n"
