"""Text encodings for sign matrices: sgn-v1, CSV and plain PBM (P1).

sgn-v1 is one matrix row per line written with ``+`` and ``-`` characters,
optionally separated by spaces. A blank line (or end of input) terminates
a matrix.
"""

from __future__ import annotations

from typing import Iterator

from .core import SequencyError, SignMatrix


class SgnFormatError(SequencyError):
    """Malformed sgn-v1 input; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{where}: {message}")


def _parse_row(text: str, lineno: int) -> list[int]:
    row = []
    for col, ch in enumerate(text, start=1):
        if ch == "+":
            row.append(1)
        elif ch == "-":
            row.append(-1)
        elif ch in " \t":
            continue
        else:
            raise SgnFormatError(f"unexpected character {ch!r}", lineno, col)
    return row


def iter_sgn(text: str) -> Iterator[SignMatrix]:
    """Yield every blank-line separated matrix in ``text``."""
    block: list[list[int]] = []
    start = 0
    width = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            if block:
                yield _finish(block, start)
                block = []
            continue
        row = _parse_row(line, lineno)
        if not block:
            start, width = lineno, len(row)
        elif len(row) != width:
            raise SgnFormatError(f"ragged row: {len(row)} entries, expected {width}", lineno)
        block.append(row)
    if block:
        yield _finish(block, start)


def _finish(block: list[list[int]], start: int) -> SignMatrix:
    if len(block) != len(block[0]):
        raise SgnFormatError(
            f"matrix is {len(block)}x{len(block[0])}, expected square", start
        )
    return SignMatrix.from_rows(block)


def loads_sgn(text: str) -> SignMatrix:
    """Parse exactly one sgn-v1 matrix."""
    mats = list(iter_sgn(text))
    if not mats:
        raise SgnFormatError("no matrix found", 1)
    if len(mats) > 1:
        raise SgnFormatError(f"expected one matrix, found {len(mats)}", 1)
    return mats[0]


def load_sgn(path) -> SignMatrix:
    with open(path, encoding="utf-8") as fh:
        return loads_sgn(fh.read())


def dumps_sgn(a: SignMatrix, spaced: bool = False) -> str:
    sep = " " if spaced else ""
    lines = [sep.join("+" if x == 1 else "-" for x in row) for row in a.rows()]
    return "\n".join(lines) + "\n"


def dumps_csv(a: SignMatrix) -> str:
    return "".join(",".join(str(x) for x in row) + "\n" for row in a.rows())


def dumps_pbm(a: SignMatrix) -> str:
    """Plain PBM, row-major; -1 is drawn black (1), +1 white (0)."""
    lines = ["P1", f"{a.n} {a.n}"]
    lines += [" ".join("1" if x == -1 else "0" for x in row) for row in a.rows()]
    return "\n".join(lines) + "\n"
