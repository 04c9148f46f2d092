"""Decide whether a design array is a partitioned balanced tournament design.

Five independent checks run over the grid:

* every column is a perfect matching (each element exactly once),
* every unordered pair appears in exactly one cell,
* no element sits in more than two cells of a row,
* the first ``n`` cells of every row form a perfect matching,
* the last ``n`` cells of every row form a perfect matching.

Each check reports every violation it finds, with 1-based row and column
indices, and never assumes the other checks passed.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from pbtd.core import DesignArray, Pair, all_pairs


class ViolationKind(str, enum.Enum):
    COLUMN_NOT_FACTOR = "ColumnNotFactor"
    PAIR_MISSING = "PairMissing"
    PAIR_REPEATED = "PairRepeated"
    ROW_MULTIPLICITY_EXCEEDED = "RowMultiplicityExceeded"
    FRONT_WINDOW_NOT_FACTOR = "FrontWindowNotFactor"
    BACK_WINDOW_NOT_FACTOR = "BackWindowNotFactor"

    def __str__(self):
        return self.value


_KIND_ORDER = {kind: i for i, kind in enumerate(ViolationKind)}


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    count: int
    row: int | None = None
    column: int | None = None
    element: int | None = None
    pair: Pair | None = None
    cells: tuple[tuple[int, int], ...] = ()

    def sort_key(self):
        return (
            _KIND_ORDER[self.kind],
            -1 if self.row is None else self.row,
            -1 if self.column is None else self.column,
            -1 if self.element is None else self.element,
            self.pair or (),
        )

    def as_record(self) -> dict:
        """Flat dictionary with a fixed key order, for machine-readable output."""
        return {
            "kind": self.kind.value,
            "row": self.row,
            "column": self.column,
            "element": self.element,
            "pair": list(self.pair) if self.pair else None,
            "count": self.count,
            "cells": [list(c) for c in self.cells],
        }

    def describe(self) -> str:
        parts = []
        if self.row is not None:
            parts.append(f"row {self.row}")
        if self.column is not None:
            parts.append(f"column {self.column}")
        if self.element is not None:
            parts.append(f"element {self.element}")
        if self.pair is not None:
            parts.append(f"pair {self.pair[0]},{self.pair[1]}")
        parts.append(f"count {self.count}")
        if self.cells:
            parts.append("cells " + " ".join(f"({r},{c})" for r, c in self.cells))
        return f"{self.kind.value}: " + ", ".join(parts)


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = ()
    summary: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.violations

    def as_record(self) -> dict:
        return {
            "valid": self.valid,
            "violation_count": len(self.violations),
            "summary": {k: self.summary.get(k, 0) for k in (v.value for v in ViolationKind)},
            "violations": [v.as_record() for v in self.violations],
        }

    def format_text(self) -> str:
        lines = [
            f"valid: {str(self.valid).lower()}, violations: {len(self.violations)}"
        ]
        for kind in ViolationKind:
            if self.summary.get(kind.value):
                lines.append(f"  {kind.value}: {self.summary[kind.value]}")
        lines.extend(v.describe() for v in self.violations)
        return "\n".join(lines) + "\n"


def _matching_violations(cells, n, kind, row=None, column=None):
    counts = Counter()
    for a, b in cells:
        counts[a] += 1
        counts[b] += 1
    out = []
    for e in range(2 * n):
        c = counts.get(e, 0)
        if c != 1:
            out.append(Violation(kind, c, row=row, column=column, element=e))
    return out


def check_column_factors(design: DesignArray) -> list[Violation]:
    n = design.n
    out = []
    for j in range(2 * n - 1):
        out += _matching_violations(
            design.column(j), n, ViolationKind.COLUMN_NOT_FACTOR, column=j + 1
        )
    return out


def check_pair_coverage(design: DesignArray) -> list[Violation]:
    where = defaultdict(list)
    for i, j, p in design.cells():
        where[p].append((i + 1, j + 1))
    out = []
    for p in all_pairs(design.n):
        seen = where.get(p, [])
        if not seen:
            out.append(Violation(ViolationKind.PAIR_MISSING, 0, pair=p))
        elif len(seen) > 1:
            out.append(
                Violation(ViolationKind.PAIR_REPEATED, len(seen), pair=p, cells=tuple(seen))
            )
    return sorted(out, key=Violation.sort_key)


def check_row_multiplicity(design: DesignArray) -> list[Violation]:
    out = []
    for i, row in enumerate(design.grid):
        counts = Counter()
        for a, b in row:
            counts[a] += 1
            counts[b] += 1
        for e in sorted(counts):
            if counts[e] > 2:
                out.append(
                    Violation(
                        ViolationKind.ROW_MULTIPLICITY_EXCEEDED, counts[e], row=i + 1, element=e
                    )
                )
    return out


def check_front_factors(design: DesignArray) -> list[Violation]:
    n = design.n
    out = []
    for i, row in enumerate(design.grid):
        out += _matching_violations(row[:n], n, ViolationKind.FRONT_WINDOW_NOT_FACTOR, row=i + 1)
    return out


def check_back_factors(design: DesignArray) -> list[Violation]:
    n = design.n
    out = []
    for i, row in enumerate(design.grid):
        out += _matching_violations(
            row[n - 1 :], n, ViolationKind.BACK_WINDOW_NOT_FACTOR, row=i + 1
        )
    return out


CHECKS = (
    check_column_factors,
    check_pair_coverage,
    check_row_multiplicity,
    check_front_factors,
    check_back_factors,
)


def verify(design: DesignArray) -> VerificationReport:
    violations = []
    for check in CHECKS:
        violations += check(design)
    violations.sort(key=Violation.sort_key)
    summary = dict(Counter(v.kind.value for v in violations))
    return VerificationReport(tuple(violations), summary)


def is_pbtd(design: DesignArray) -> bool:
    return verify(design).valid


def row_singletons(design: DesignArray, row: int) -> list[int]:
    """Elements occurring in exactly one cell of ``row`` (0-based)."""
    counts = Counter()
    for a, b in design.grid[row]:
        counts[a] += 1
        counts[b] += 1
    return sorted(e for e, c in counts.items() if c == 1)
