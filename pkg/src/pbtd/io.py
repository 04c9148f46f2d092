"""Reading and writing design arrays, plus the embedded side-nine instance.

Text grid format, one row per line::

    # comments and blank lines are ignored
    2,16 3,17 4,6 ... 0,1 | 2,5 3,4 ...

Cells are ``a,b`` (spaces after the comma are tolerated) and a lone ``|``
is a cosmetic marker between the two windows. The side ``n`` is inferred
from the number of rows and every row must hold ``2n-1`` cells.

Structured format, a JSON document::

    {"n":1,"rows":[[[0,1]]]}
"""

from __future__ import annotations

import json
import re

from pbtd.core import DesignArray
from pbtd.errors import (
    RangeError,
    SchemaError,
    SelfPairError,
    ShapeError,
    TokenError,
)

_CELL = re.compile(r"^(-?\d+),(-?\d+)$")
_COMMA = re.compile(r"\s*,\s*")

_TABLE1 = (
    ((2, 16), (3, 17), (4, 6), (5, 7), (8, 10), (9, 11), (12, 14), (13, 15), (0, 1), (2, 5), (3, 4), (6, 15), (7, 14), (8, 11), (9, 10), (12, 16), (13, 17)),
    ((0, 4), (1, 5), (7, 9), (6, 8), (11, 13), (10, 12), (15, 17), (14, 16), (2, 3), (0, 16), (1, 17), (4, 8), (5, 9), (6, 13), (7, 12), (10, 15), (11, 14)),
    ((1, 3), (0, 2), (10, 13), (11, 12), (14, 17), (15, 16), (6, 9), (7, 8), (4, 5), (6, 10), (7, 11), (1, 16), (0, 17), (9, 12), (8, 13), (2, 14), (3, 15)),
    ((10, 14), (11, 15), (0, 8), (1, 9), (2, 4), (3, 5), (13, 16), (12, 17), (6, 7), (3, 13), (2, 12), (9, 17), (8, 16), (4, 14), (5, 15), (0, 11), (1, 10)),
    ((5, 6), (4, 7), (2, 17), (3, 16), (12, 15), (13, 14), (0, 10), (1, 11), (8, 9), (4, 11), (5, 10), (2, 13), (3, 12), (0, 15), (1, 14), (7, 17), (6, 16)),
    ((8, 12), (9, 13), (1, 15), (0, 14), (5, 16), (4, 17), (3, 7), (2, 6), (10, 11), (1, 12), (0, 13), (5, 14), (4, 15), (7, 16), (6, 17), (3, 8), (2, 9)),
    ((9, 15), (8, 14), (11, 16), (10, 17), (3, 6), (2, 7), (1, 4), (0, 5), (12, 13), (9, 14), (8, 15), (3, 11), (2, 10), (5, 17), (4, 16), (1, 6), (0, 7)),
    ((11, 17), (10, 16), (5, 12), (4, 13), (1, 7), (0, 6), (2, 8), (3, 9), (14, 15), (8, 17), (9, 16), (7, 10), (6, 11), (1, 2), (0, 3), (5, 13), (4, 12)),
    ((7, 13), (6, 12), (3, 14), (2, 15), (0, 9), (1, 8), (5, 11), (4, 10), (16, 17), (7, 15), (6, 14), (0, 12), (1, 13), (3, 10), (2, 11), (4, 9), (5, 8)),
)


def table1() -> DesignArray:
    """The published partitioned balanced tournament design of side nine."""
    return DesignArray(9, _TABLE1)


def _read(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    return source


def _build(rows, n, lines) -> DesignArray:
    """Range- and pair-check integer rows; ``lines`` names each row in errors."""
    for row, line in zip(rows, lines):
        for j, (a, b) in enumerate(row, start=1):
            for x in (a, b):
                if not 0 <= x < 2 * n:
                    raise RangeError(f"element {x} outside [0, {2 * n})", line=line, cell=j)
            if a == b:
                raise SelfPairError(f"cell pairs {a} with itself", line=line, cell=j)
    return DesignArray(n, rows)


def parse_text(source) -> DesignArray:
    """Parse the line-oriented grid format from a string or text stream."""
    rows = []
    line_numbers = []
    for lineno, raw in enumerate(_read(source).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t for t in _COMMA.sub(",", line).split() if t != "|"]
        cells = []
        for j, tok in enumerate(tokens, start=1):
            m = _CELL.match(tok)
            if m is None:
                raise TokenError(f"expected a cell 'a,b', got {tok!r}", line=lineno, cell=j)
            cells.append((int(m.group(1)), int(m.group(2))))
        rows.append(cells)
        line_numbers.append(lineno)

    if not rows:
        raise ShapeError("no rows found")
    n = len(rows)
    expected = 2 * n - 1
    for cells, lineno in zip(rows, line_numbers):
        if len(cells) != expected:
            raise ShapeError(
                f"{len(cells)} cells, but {n} rows need {expected} cells per row",
                line=lineno,
            )
    return _build(rows, n, line_numbers)


def emit_text(design: DesignArray) -> str:
    """Canonical text form; ``parse_text(emit_text(d)) == d``."""
    n = design.n
    lines = []
    for row in design.grid:
        cells = [f"{a},{b}" for a, b in row]
        front = " ".join(cells[:n])
        back = " ".join(cells[n:])
        lines.append(f"{front} | {back}" if back else front)
    return "\n".join(lines) + "\n"


def parse_structured(source) -> DesignArray:
    """Parse a JSON document (string, stream, or already-decoded mapping)."""
    if isinstance(source, dict):
        doc = source
    else:
        try:
            doc = json.loads(_read(source))
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be an object with fields 'n' and 'rows'")
    for key in ("n", "rows"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    n = doc["n"]
    rows = doc["rows"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError(f"field 'n' must be a positive integer, got {n!r}")
    if not isinstance(rows, list):
        raise SchemaError("field 'rows' must be a list")
    if len(rows) != n:
        raise ShapeError(f"n = {n} needs {n} rows, got {len(rows)}")

    parsed = []
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise SchemaError("each row must be a list", line=i)
        if len(row) != 2 * n - 1:
            raise ShapeError(f"{len(row)} cells, expected {2 * n - 1}", line=i)
        cells = []
        for j, cell in enumerate(row, start=1):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in cell)
            ):
                raise TokenError(f"cell must be a list of two integers, got {cell!r}", line=i, cell=j)
            cells.append((cell[0], cell[1]))
        parsed.append(cells)
    return _build(parsed, n, range(1, n + 1))


def design_record(design: DesignArray) -> dict:
    return {"n": design.n, "rows": [[list(p) for p in row] for row in design.grid]}


def emit_structured(design: DesignArray) -> str:
    """Canonical JSON: fixed field order, no whitespace, trailing newline."""
    return json.dumps(design_record(design), separators=(",", ":")) + "\n"
