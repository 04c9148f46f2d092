"""Design arrays and the symmetry actions that preserve PBTD validity.

A design of side ``n`` is an ``n x (2n-1)`` grid of unordered pairs drawn
from the labels ``0 .. 2n-1``. Pairs are stored as canonical ``(low, high)``
tuples so that set equality is plain tuple equality.

Indices are 0-based throughout the Python API. Reports and the command line
translate to 1-based rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from pbtd.errors import (
    BadPermutation,
    EqualElements,
    MiddleColumnMoved,
    OutOfRange,
    OutOfWindow,
    ShapeError,
)

Pair = tuple[int, int]


class Dims(NamedTuple):
    rows: int
    columns: int
    elements: int
    pair_count: int


def dims(n: int) -> Dims:
    if n < 1:
        raise ValueError(f"side must be positive, got {n}")
    return Dims(rows=n, columns=2 * n - 1, elements=2 * n, pair_count=n * (2 * n - 1))


def make_pair(a: int, b: int, n: int | None = None) -> Pair:
    """Return the canonical ``(min, max)`` pair of two distinct labels.

    When ``n`` is given, both labels must lie in ``[0, 2n)``.
    """
    if a == b:
        raise EqualElements(f"a pair needs two distinct elements, got ({a}, {b})")
    if n is not None:
        for x in (a, b):
            if not 0 <= x < 2 * n:
                raise OutOfRange(f"element {x} outside [0, {2 * n}) for side {n}")
    return (a, b) if a < b else (b, a)


def all_pairs(n: int) -> list[Pair]:
    """Every unordered pair of ``range(2n)`` in lexicographic order."""
    m = 2 * n
    return [(a, b) for a in range(m) for b in range(a + 1, m)]


def _cell(cell, n: int) -> Pair:
    if len(cell) != 2:
        raise ShapeError(f"a cell holds exactly two elements, got {tuple(cell)}")
    return make_pair(int(cell[0]), int(cell[1]), n)


@dataclass(frozen=True)
class DesignArray:
    """Shape-checked ``n x (2n-1)`` grid of canonical pairs.

    Only shape and label range are enforced here. Whether the grid is a PBTD
    is decided by :func:`pbtd.verify.verify`.
    """

    n: int
    grid: tuple[tuple[Pair, ...], ...]

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ShapeError(f"side must be positive, got {n}")
        rows = tuple(tuple(_cell(cell, n) for cell in row) for row in self.grid)
        if len(rows) != n:
            raise ShapeError(f"expected {n} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != 2 * n - 1:
                raise ShapeError(
                    f"row {i + 1} has {len(row)} cells, expected {2 * n - 1}"
                )
        object.__setattr__(self, "grid", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Sequence[int]]]) -> DesignArray:
        """Build a design, inferring ``n`` from the number of rows."""
        return cls(len(rows), rows)

    @property
    def dims(self) -> Dims:
        return dims(self.n)

    def cell(self, row: int, col: int) -> Pair:
        return self.grid[row][col]

    def column(self, col: int) -> tuple[Pair, ...]:
        return tuple(row[col] for row in self.grid)

    def replace_cell(self, row: int, col: int, pair: Sequence[int]) -> DesignArray:
        grid = [list(r) for r in self.grid]
        grid[row][col] = tuple(pair)
        return DesignArray(self.n, grid)

    def swap_in_column(self, col: int, r1: int, r2: int) -> DesignArray:
        grid = [list(r) for r in self.grid]
        grid[r1][col], grid[r2][col] = grid[r2][col], grid[r1][col]
        return DesignArray(self.n, grid)

    def cells(self):
        """Yield ``(row, col, pair)`` in row-major order."""
        for i, row in enumerate(self.grid):
            for j, p in enumerate(row):
                yield i, j, p


def _check_bijection(perm: Sequence[int], size: int, what: str) -> tuple[int, ...]:
    perm = tuple(int(x) for x in perm)
    if len(perm) != size or sorted(perm) != list(range(size)):
        raise BadPermutation(f"{what} permutation must be a bijection on {size} points")
    return perm


def relabel(design: DesignArray, perm: Sequence[int]) -> DesignArray:
    """Apply the element bijection ``x -> perm[x]`` to every cell."""
    perm = _check_bijection(perm, 2 * design.n, "element")
    grid = [[make_pair(perm[a], perm[b]) for a, b in row] for row in design.grid]
    return DesignArray(design.n, grid)


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def permute_rows(design: DesignArray, perm: Sequence[int]) -> DesignArray:
    """Reorder rows: row ``i`` of the result is row ``perm[i]`` of ``design``."""
    perm = _check_bijection(perm, design.n, "row")
    return DesignArray(design.n, [design.grid[p] for p in perm])


def reflect_horizontal(design: DesignArray) -> DesignArray:
    """Mirror the columns; the middle column stays in place and the windows swap."""
    return DesignArray(design.n, [row[::-1] for row in design.grid])


def permute_window_columns(
    design: DesignArray, window: str, perm: Sequence[int]
) -> DesignArray:
    """Reorder columns inside one window.

    ``perm`` covers all ``2n-1`` columns: column ``j`` of the result is column
    ``perm[j]`` of ``design``. Only the non-middle columns of the chosen
    window (``"front"`` or ``"back"``) may move.
    """
    n = design.n
    ncols = 2 * n - 1
    perm = _check_bijection(perm, ncols, "column")
    if window == "front":
        allowed = range(0, n - 1)
    elif window == "back":
        allowed = range(n, ncols)
    else:
        raise ValueError(f"window must be 'front' or 'back', got {window!r}")
    middle = n - 1
    for j, p in enumerate(perm):
        if j == p:
            continue
        if j == middle or p == middle:
            raise MiddleColumnMoved(
                f"column {middle + 1} is shared by both windows and cannot move"
            )
        if j not in allowed or p not in allowed:
            raise OutOfWindow(
                f"column {j + 1} <- {p + 1} leaves the {window} window"
            )
    return DesignArray(n, [[row[p] for p in perm] for row in design.grid])
