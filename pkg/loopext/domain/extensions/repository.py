"""
Cocycle and Φ files.

Cocycle file::

    cocycle n=<n> A=z<m>^<k>
    P 0 0
    <k lines of k integers>
    Q 0 0
    <k lines of k integers>
    P 0 1
    ...

with one P block and one Q block per pair (ξ, η) in row-major order.

Φ file: one line per assigned permutation,
``perm <images> -> matrix <k·k entries, row-major>``. The listed permutations
only need to generate Inn(L).
"""

from pathlib import Path

import numpy as np

from loopext.domain.abelian.exceptions import InvalidKernelSpecError
from loopext.domain.abelian.models import AbGroup
from loopext.domain.abelian.service import parse_kernel_spec
from loopext.domain.extensions.models import Cocycle, PhiHom
from loopext.domain.extensions.phi import DEFAULT_EXHAUSTIVE_LIMIT, phi_from_generators
from loopext.domain.finite_loop.models import FiniteLoop
from loopext.domain.mapping_groups.exceptions import NotAPermutationError
from loopext.domain.mapping_groups.models import Perm, PermGroup
from loopext.infrastructure.formats import TextFormatReader, Token, format_rows


def _header_value(reader: TextFormatReader, token: Token, key: str) -> str:
    prefix = f"{key}="
    if not token.text.startswith(prefix):
        raise reader.error(f"expected {prefix}<value>, found {token.text!r}", token)
    return token.text[len(prefix) :]


def parse_cocycle(reader: TextFormatReader, base: FiniteLoop) -> Cocycle:
    """
    Read a cocycle over ``base``.

    Raises:
        FormatError: On a malformed header, order mismatch, block label or row
    """
    header = reader.next_line()
    if len(header) != 3 or header[0].text != "cocycle":
        raise reader.error("expected header 'cocycle n=<n> A=z<m>^<k>'", header[0])
    n_text = _header_value(reader, header[1], "n")
    n = Token(n_text, header[1].line, header[1].column + 2).as_int(reader.source)
    if n != base.order:
        raise reader.error(
            f"cocycle is over a loop of order {n}, table has {base.order}", header[1]
        )
    try:
        kernel = parse_kernel_spec(_header_value(reader, header[2], "A"))
    except InvalidKernelSpecError as err:
        raise reader.error(str(err), header[2]) from err

    k = kernel.rank
    tables = {name: np.empty((n, n, k, k), dtype=np.int64) for name in ("P", "Q")}
    for xi in range(n):
        for eta in range(n):
            for name in ("P", "Q"):
                label = reader.next_line()
                expected = [name, str(xi), str(eta)]
                if [t.text for t in label] != expected:
                    wanted = " ".join(expected)
                    raise reader.error(f"expected block label '{wanted}'", label[0])
                for row in range(k):
                    tables[name][xi, eta, row] = reader.next_ints(k)
    return Cocycle(base=base, kernel=kernel, P=tables["P"], Q=tables["Q"])


def read_cocycle(path: Path | str, base: FiniteLoop) -> Cocycle:
    reader = TextFormatReader.from_path(path)
    cocycle = parse_cocycle(reader, base)
    reader.expect_end()
    return cocycle


def read_cocycle_text(text: str, base: FiniteLoop, source: str = "<input>") -> Cocycle:
    reader = TextFormatReader(text, source=source)
    cocycle = parse_cocycle(reader, base)
    reader.expect_end()
    return cocycle


def format_cocycle(cocycle: Cocycle) -> str:
    n = cocycle.base.order
    parts = [f"cocycle n={n} A={cocycle.kernel.spec}\n"]
    for xi in range(n):
        for eta in range(n):
            for name, table in (("P", cocycle.P), ("Q", cocycle.Q)):
                parts.append(f"{name} {xi} {eta}\n")
                parts.append(format_rows(table[xi, eta].tolist()))
    return "".join(parts)


def write_cocycle(path: Path | str, cocycle: Cocycle) -> None:
    Path(path).write_text(format_cocycle(cocycle), encoding="utf-8")


def parse_phi(
    reader: TextFormatReader,
    inn: PermGroup,
    kernel: AbGroup,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> PhiHom:
    """
    Read Φ assignments and extend them to all of ``inn``.

    Raises:
        FormatError: On malformed lines
        PhiConflictError, PhiCoverageError, PhiDomainError: From the extension
    """
    degree, k = inn.degree, kernel.rank
    assignments = []
    while not reader.at_end:
        tokens = reader.next_line()
        texts = [t.text for t in tokens]
        if texts[0] != "perm" or "->" not in texts:
            raise reader.error(
                "expected 'perm <images> -> matrix <entries>'", tokens[0]
            )
        arrow = texts.index("->")
        images = tokens[1:arrow]
        if len(images) != degree:
            raise reader.error(
                f"expected {degree} images, found {len(images)}", tokens[arrow]
            )
        if arrow + 1 >= len(tokens) or texts[arrow + 1] != "matrix":
            anchor = tokens[min(arrow + 1, len(tokens) - 1)]
            raise reader.error("expected 'matrix' after '->'", anchor)
        entries = tokens[arrow + 2 :]
        if len(entries) != k * k:
            anchor = entries[0] if entries else tokens[arrow + 1]
            raise reader.error(
                f"expected {k * k} matrix entries, found {len(entries)}", anchor
            )
        try:
            perm = Perm(tuple(t.as_int(reader.source) for t in images))
        except NotAPermutationError as err:
            raise reader.error(str(err), images[0]) from err
        matrix = np.asarray([t.as_int(reader.source) for t in entries], dtype=np.int64)
        assignments.append((perm, matrix.reshape(k, k)))
    return phi_from_generators(inn, kernel, assignments, exhaustive_limit)


def read_phi(
    path: Path | str,
    inn: PermGroup,
    kernel: AbGroup,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> PhiHom:
    return parse_phi(TextFormatReader.from_path(path), inn, kernel, exhaustive_limit)


def read_phi_text(
    text: str,
    inn: PermGroup,
    kernel: AbGroup,
    source: str = "<input>",
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> PhiHom:
    reader = TextFormatReader(text, source=source)
    return parse_phi(reader, inn, kernel, exhaustive_limit)


def format_phi(phi: PhiHom) -> str:
    """Every element of the domain with its image, in canonical order."""
    lines = []
    for perm, matrix in phi.items():
        entries = " ".join(str(int(v)) for v in matrix.ravel())
        lines.append(f"perm {perm} -> matrix {entries}\n")
    return "".join(lines)


def write_phi(path: Path | str, phi: PhiHom) -> None:
    Path(path).write_text(format_phi(phi), encoding="utf-8")
