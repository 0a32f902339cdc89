"""
Line-oriented text format primitives.

Every on-disk format of the toolkit (Cayley tables, cocycles, Φ maps) is a
sequence of whitespace separated tokens grouped in lines, with blank lines and
lines starting with '#' ignored. This module tokenizes such text while keeping
1-based line and column positions so that diagnostics can point at the
offending token.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path


class FormatError(Exception):
    """Raised when a text file does not follow its format."""

    def __init__(
        self, message: str, *, line: int, column: int, source: str = "<input>"
    ) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


@dataclass(frozen=True)
class Token:
    """A single whitespace-delimited token with its position."""

    text: str
    line: int
    column: int

    def as_int(self, source: str = "<input>") -> int:
        try:
            return int(self.text)
        except ValueError:
            raise FormatError(
                f"expected an integer, found {self.text!r}",
                line=self.line,
                column=self.column,
                source=source,
            ) from None


def tokenize_line(text: str, line_number: int) -> list[Token]:
    """Split one line into tokens, recording 1-based columns."""
    tokens: list[Token] = []
    column = 0
    length = len(text)
    while column < length:
        while column < length and text[column].isspace():
            column += 1
        start = column
        while column < length and not text[column].isspace():
            column += 1
        if column > start:
            tokens.append(Token(text[start:column], line_number, start + 1))
    return tokens


class TextFormatReader:
    """Sequential reader over the meaningful lines of a text document."""

    def __init__(self, text: str, source: str = "<input>") -> None:
        self.source = source
        self._lines: list[list[Token]] = []
        self._last_line = 0
        for number, raw in enumerate(text.splitlines(), start=1):
            self._last_line = number
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            self._lines.append(tokenize_line(raw, number))
        self._position = 0

    @classmethod
    def from_path(cls, path: Path | str) -> "TextFormatReader":
        path = Path(path)
        return cls(path.read_text(encoding="utf-8"), source=str(path))

    @property
    def at_end(self) -> bool:
        return self._position >= len(self._lines)

    def next_line(self) -> list[Token]:
        """Return the tokens of the next meaningful line."""
        if self.at_end:
            raise FormatError(
                "unexpected end of input",
                line=self._last_line + 1,
                column=1,
                source=self.source,
            )
        tokens = self._lines[self._position]
        self._position += 1
        return tokens

    def next_ints(self, count: int | None = None) -> list[int]:
        """Read the next line as integers, optionally of an exact length."""
        tokens = self.next_line()
        if count is not None and len(tokens) != count:
            anchor = tokens[min(len(tokens), count) - 1] if tokens else None
            column = anchor.column + len(anchor.text) if anchor else 1
            if len(tokens) > count:
                column = tokens[count].column
            raise FormatError(
                f"expected {count} integers, found {len(tokens)}",
                line=tokens[0].line,
                column=column,
                source=self.source,
            )
        return [token.as_int(self.source) for token in tokens]

    def expect_end(self) -> None:
        if not self.at_end:
            token = self._lines[self._position][0]
            raise self.error("unexpected trailing content", token)

    def error(self, message: str, token: Token) -> FormatError:
        return FormatError(
            message, line=token.line, column=token.column, source=self.source
        )


def format_rows(rows: Iterable[Sequence[int]]) -> str:
    """Render integer rows as space separated lines."""
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in rows)
