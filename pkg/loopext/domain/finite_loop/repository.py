"""
Cayley table files and the frozen fixture corpus.

Format: the first meaningful line holds the order n, followed by n lines of n
space separated 0-based elements. Blank lines and lines starting with '#' are
ignored when reading; the writer emits no comments, so a written table reads
back byte-identically.
"""

from pathlib import Path

import numpy as np

from loopext.domain.finite_loop.exceptions import UnknownFixtureError
from loopext.domain.finite_loop.models import CayleyTable, FiniteLoop, as_cayley_table
from loopext.infrastructure.formats import TextFormatReader, format_rows
from loopext.infrastructure.logging import get_logger

logger = get_logger(__name__)

TABLE_SUFFIX = ".tbl"


def parse_table(reader: TextFormatReader) -> CayleyTable:
    """Read one table from ``reader``.

    Raises:
        FormatError: On a malformed header, row length or out-of-range entry
    """
    header = reader.next_line()
    if len(header) != 1:
        raise reader.error(
            "expected a single integer order on the first line", header[-1]
        )
    n = header[0].as_int(reader.source)
    if n < 1:
        raise reader.error(f"order must be positive, found {n}", header[0])
    rows: list[list[int]] = []
    for _ in range(n):
        tokens = reader.next_line()
        if len(tokens) != n:
            anchor = tokens[n] if len(tokens) > n else tokens[-1]
            raise reader.error(f"expected {n} entries, found {len(tokens)}", anchor)
        row = []
        for token in tokens:
            value = token.as_int(reader.source)
            if not 0 <= value < n:
                raise reader.error(f"entry {value} is outside [0, {n})", token)
            row.append(value)
        rows.append(row)
    return as_cayley_table(rows)


def read_table(path: Path | str) -> CayleyTable:
    reader = TextFormatReader.from_path(path)
    table = parse_table(reader)
    reader.expect_end()
    return table


def read_table_text(text: str, source: str = "<input>") -> CayleyTable:
    reader = TextFormatReader(text, source=source)
    table = parse_table(reader)
    reader.expect_end()
    return table


def format_table(table: CayleyTable | FiniteLoop) -> str:
    if isinstance(table, FiniteLoop):
        table = table.table
    array = np.asarray(table)
    return f"{array.shape[0]}\n" + format_rows(array.tolist())


def write_table(path: Path | str, table: CayleyTable | FiniteLoop) -> None:
    Path(path).write_text(format_table(table), encoding="utf-8")


class LoopFixtureRepository:
    """Named access to the frozen tables shipped in the fixtures directory."""

    def __init__(self, directory: Path | str) -> None:
        self._directory = Path(directory)

    def names(self) -> list[str]:
        return sorted(p.stem for p in self._directory.glob(f"*{TABLE_SUFFIX}"))

    def path(self, name: str) -> Path:
        return self._directory / f"{name}{TABLE_SUFFIX}"

    def load(self, name: str) -> FiniteLoop:
        """
        Load a fixture loop by name (``z4``, ``s3``, ``n5``, ``l6``, ``b8``).

        Raises:
            UnknownFixtureError: If no such table exists
        """
        path = self.path(name)
        if not path.is_file():
            raise UnknownFixtureError(name, self.names())
        loop = FiniteLoop(read_table(path))
        logger.debug("Loaded fixture", name=name, order=loop.order)
        return loop
