"""Column-structured search states and the window-defect cost.

A column-structured state keeps every column a perfect matching and the
columns together a one-factorization, so column exactness and pair coverage
hold by construction. Only the row windows can be wrong, and the cost counts
how wrong they are: for each row and each window, the number of elements
missing from that window's cells.
"""

from __future__ import annotations

import random

from pbtd.core import DesignArray, Pair
from pbtd.search.factorization import alternating_cycle, is_one_factorization, round_robin_factorization


def _window_flags(n: int, col: int) -> tuple[bool, bool]:
    return col <= n - 1, col >= n - 1


class ColumnStructuredState:
    """Grid held column-major with incremental window bookkeeping.

    ``cols[c][r]`` is the pair in row ``r`` of column ``c``. A cell may be
    ``None`` only transiently, inside a move.
    """

    def __init__(self, n: int, columns):
        self.n = n
        self.cols: list[list[Pair | None]] = [list(col) for col in columns]
        if len(self.cols) != 2 * n - 1 or any(len(c) != n for c in self.cols):
            raise ValueError(f"need {2 * n - 1} columns of {n} pairs")
        self._recount()

    def _recount(self):
        n = self.n
        self.front_count = [[0] * (2 * n) for _ in range(n)]
        self.back_count = [[0] * (2 * n) for _ in range(n)]
        for c, col in enumerate(self.cols):
            front, back = _window_flags(n, c)
            for r, p in enumerate(col):
                if p is None:
                    continue
                for e in p:
                    if front:
                        self.front_count[r][e] += 1
                    if back:
                        self.back_count[r][e] += 1
        self.front_defect = [row.count(0) for row in self.front_count]
        self.back_defect = [row.count(0) for row in self.back_count]
        self.cost = sum(self.front_defect) + sum(self.back_defect)

    @classmethod
    def from_design(cls, design: DesignArray) -> ColumnStructuredState:
        return cls(design.n, [list(design.column(c)) for c in range(2 * design.n - 1)])

    @classmethod
    def random(cls, n: int, rng: random.Random) -> ColumnStructuredState:
        """Circle-method columns at a random rotation, rows shuffled per column."""
        cols = round_robin_factorization(n, rng.randrange(2 * n - 1))
        for col in cols:
            rng.shuffle(col)
        return cls(n, cols)

    def copy(self) -> ColumnStructuredState:
        return ColumnStructuredState(self.n, self.cols)

    def realize(self) -> DesignArray:
        n = self.n
        return DesignArray(n, [[self.cols[c][r] for c in range(2 * n - 1)] for r in range(n)])

    def factorization(self) -> list[list[Pair]]:
        return [sorted(col) for col in self.cols]

    def set_cell(self, c: int, r: int, pair: Pair | None):
        front, back = _window_flags(self.n, c)
        old = self.cols[c][r]
        if old is not None:
            for e in old:
                if front:
                    fc = self.front_count[r]
                    fc[e] -= 1
                    if fc[e] == 0:
                        self.front_defect[r] += 1
                        self.cost += 1
                if back:
                    bc = self.back_count[r]
                    bc[e] -= 1
                    if bc[e] == 0:
                        self.back_defect[r] += 1
                        self.cost += 1
        if pair is not None:
            for e in pair:
                if front:
                    fc = self.front_count[r]
                    if fc[e] == 0:
                        self.front_defect[r] -= 1
                        self.cost -= 1
                    fc[e] += 1
                if back:
                    bc = self.back_count[r]
                    if bc[e] == 0:
                        self.back_defect[r] -= 1
                        self.cost -= 1
                    bc[e] += 1
        self.cols[c][r] = pair

    def placement_gain(self, c: int, r: int, pair: Pair) -> int:
        """Cost change from putting ``pair`` into the empty cell ``(r, c)``."""
        front, back = _window_flags(self.n, c)
        delta = 0
        a, b = pair
        if front:
            fc = self.front_count[r]
            delta -= (fc[a] == 0) + (fc[b] == 0)
        if back:
            bc = self.back_count[r]
            delta -= (bc[a] == 0) + (bc[b] == 0)
        return delta

    def swap_rows(self, c: int, r1: int, r2: int) -> tuple[int, list]:
        """Exchange two cells of column ``c``; returns ``(delta, undo)``."""
        before = self.cost
        col = self.cols[c]
        p1, p2 = col[r1], col[r2]
        undo = [(c, r1, p1), (c, r2, p2)]
        self.set_cell(c, r1, p2)
        self.set_cell(c, r2, p1)
        return self.cost - before, undo

    def cycle_switch(
        self, c1: int, c2: int, start: int, reassign: str = "greedy", rng: random.Random | None = None
    ) -> tuple[int, list]:
        """Re-alternate the cycle through ``start`` in the union of two columns.

        The cycle's edges from column ``c1`` move to ``c2`` and vice versa,
        which keeps both columns perfect matchings and the union of all
        columns unchanged. Moved pairs go into the rows the departing pairs
        vacated: greedily by largest cost drop (lowest row on ties), or in
        random order when ``reassign == "random"``.
        """
        before = self.cost
        m1, rows1 = self._partner_map(c1)
        m2, rows2 = self._partner_map(c2)
        cycle = alternating_cycle(m1, m2, start)
        k = len(cycle)
        out1 = [cycle[i : i + 2] for i in range(0, k, 2)]
        out2 = [[cycle[i], cycle[(i + 1) % k]] for i in range(1, k, 2)]
        out1 = [tuple(sorted(p)) for p in out1]
        out2 = [tuple(sorted(p)) for p in out2]
        free1 = sorted(rows1[p] for p in out1)
        free2 = sorted(rows2[p] for p in out2)
        undo = [(c1, r, self.cols[c1][r]) for r in free1] + [(c2, r, self.cols[c2][r]) for r in free2]
        for c, r, _ in undo:
            self.set_cell(c, r, None)
        self._place(c1, sorted(out2), free1, reassign, rng)
        self._place(c2, sorted(out1), free2, reassign, rng)
        return self.cost - before, undo

    def _partner_map(self, c):
        partner = {}
        rows = {}
        for r, p in enumerate(self.cols[c]):
            a, b = p
            partner[a] = b
            partner[b] = a
            rows[p] = r
        return partner, rows

    def _place(self, c, pairs, free_rows, reassign, rng):
        free = list(free_rows)
        if reassign == "random":
            rng.shuffle(free)
            for p, r in zip(pairs, free):
                self.set_cell(c, r, p)
            return
        for p in pairs:
            best_row = min(free, key=lambda r: (self.placement_gain(c, r, p), r))
            free.remove(best_row)
            self.set_cell(c, best_row, p)

    def undo(self, record):
        for c, r, p in record:
            self.set_cell(c, r, p)


def cost(state: ColumnStructuredState) -> int:
    """Total window defect, recomputed from the grid alone."""
    n = state.n
    total = 0
    for r in range(n):
        front = set()
        back = set()
        for c in range(2 * n - 1):
            p = state.cols[c][r]
            if p is None:
                continue
            if c <= n - 1:
                front.update(p)
            if c >= n - 1:
                back.update(p)
        total += (2 * n - len(front)) + (2 * n - len(back))
    return total


def audit_column_state(state: ColumnStructuredState) -> bool:
    """Bookkeeping matches a fresh recount and the columns form a one-factorization."""
    fresh = ColumnStructuredState.__new__(ColumnStructuredState)
    fresh.n = state.n
    fresh.cols = state.cols
    fresh._recount()
    if (
        fresh.front_count != state.front_count
        or fresh.back_count != state.back_count
        or fresh.front_defect != state.front_defect
        or fresh.back_defect != state.back_defect
        or fresh.cost != state.cost
        or cost(state) != state.cost
    ):
        return False
    if any(p is None for col in state.cols for p in col):
        return False
    return is_one_factorization(state.cols, state.n)
