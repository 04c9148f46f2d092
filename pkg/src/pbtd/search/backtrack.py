"""Complete depth-first search over partial design arrays.

Cells are filled column by column, top to bottom. A pair is a candidate for
cell ``(r, c)`` when it is unused, avoids the elements already in column
``c``, and avoids the elements already in row ``r``'s front window (when
``c`` is in it) and back window (when ``c`` is in it). Each rule is implied
by the definition, so an exhausted tree proves that no design exists.
"""

from __future__ import annotations

import logging
import time

from pbtd.core import DesignArray, Pair, all_pairs, relabel
from pbtd.errors import ConfigError
from pbtd.search.config import SearchConfig, SearchOutcome, SearchStats, Status
from pbtd.verify import verify

log = logging.getLogger(__name__)

_CLOCK_EVERY = 1024


class PartialDesign:
    """Grid of optional pairs with bitmask usage sets per column and window."""

    def __init__(self, n: int):
        self.n = n
        self.grid: list[list[Pair | None]] = [[None] * (2 * n - 1) for _ in range(n)]
        self.used_pairs: set[Pair] = set()
        self.col_used = [0] * (2 * n - 1)
        self.front_used = [0] * n
        self.back_used = [0] * n

    def forbidden(self, r: int, c: int) -> int:
        mask = self.col_used[c]
        if c <= self.n - 1:
            mask |= self.front_used[r]
        if c >= self.n - 1:
            mask |= self.back_used[r]
        return mask

    def fits(self, r: int, c: int, pair: Pair) -> bool:
        a, b = pair
        bits = (1 << a) | (1 << b)
        return (
            self.grid[r][c] is None
            and pair not in self.used_pairs
            and not bits & self.forbidden(r, c)
        )

    def place(self, r: int, c: int, pair: Pair):
        a, b = pair
        bits = (1 << a) | (1 << b)
        self.grid[r][c] = pair
        self.used_pairs.add(pair)
        self.col_used[c] |= bits
        if c <= self.n - 1:
            self.front_used[r] |= bits
        if c >= self.n - 1:
            self.back_used[r] |= bits

    def remove(self, r: int, c: int):
        pair = self.grid[r][c]
        a, b = pair
        bits = ~((1 << a) | (1 << b))
        self.grid[r][c] = None
        self.used_pairs.discard(pair)
        self.col_used[c] &= bits
        if c <= self.n - 1:
            self.front_used[r] &= bits
        if c >= self.n - 1:
            self.back_used[r] &= bits

    def to_design(self) -> DesignArray:
        return DesignArray(self.n, self.grid)


def audit_partial(state: PartialDesign) -> bool:
    """True when every usage set equals a from-scratch recount of the grid."""
    fresh = PartialDesign(state.n)
    for r, row in enumerate(state.grid):
        for c, p in enumerate(row):
            if p is not None:
                if p in fresh.used_pairs:
                    return False
                fresh.place(r, c, p)
    return (
        fresh.used_pairs == state.used_pairs
        and fresh.col_used == state.col_used
        and fresh.front_used == state.front_used
        and fresh.back_used == state.back_used
    )


def middle_column_cells(n: int) -> dict[tuple[int, int], Pair]:
    """The normalized middle column: row ``i`` holds ``(2i, 2i+1)``."""
    return {(i, n - 1): (2 * i, 2 * i + 1) for i in range(n)}


def normalize_middle_column(design: DesignArray) -> DesignArray:
    """Relabel so the middle column matches :func:`middle_column_cells`.

    Needs only that the middle column is a perfect matching, which every
    valid design satisfies, so symmetry breaking never loses existence.
    """
    n = design.n
    perm = [None] * (2 * n)
    for i, (a, b) in enumerate(design.column(n - 1)):
        if perm[a] is not None or perm[b] is not None:
            raise ValueError("middle column is not a perfect matching")
        perm[a], perm[b] = 2 * i, 2 * i + 1
    return relabel(design, perm)


class _Timeout(Exception):
    pass


class _Searcher:
    def __init__(self, n, config, fixed, limit):
        self.n = n
        self.config = config
        self.limit = limit
        self.state = PartialDesign(n)
        self.pairs = all_pairs(n)
        self.stats = SearchStats()
        self.count = 0
        self.first: DesignArray | None = None
        self.deadline = None
        if config.time_budget is not None:
            self.deadline = time.monotonic() + config.time_budget

        cells = dict(middle_column_cells(n)) if config.symmetry_break else {}
        cells.update(fixed or {})
        self.consistent = True
        for (r, c), p in sorted(cells.items()):
            p = tuple(sorted(p))
            if not self.state.fits(r, c, p):
                self.consistent = False
                break
            self.state.place(r, c, p)
        self.order = [
            (r, c)
            for c in range(2 * n - 1)
            for r in range(n)
            if (r, c) not in cells
        ]

    def run(self) -> bool:
        """Search the whole tree; returns True if it finished without timing out."""
        start = time.monotonic()
        try:
            if self.consistent:
                self._dfs(0)
            done = True
        except _Timeout:
            done = False
        self.stats.elapsed = time.monotonic() - start
        return done

    def _dfs(self, depth: int) -> bool:
        if depth == len(self.order):
            design = self.state.to_design()
            if not verify(design).valid:  # pragma: no cover - soundness guard
                raise AssertionError("backtracking produced an invalid design")
            self.count += 1
            if self.first is None:
                self.first = design
            return self.count >= self.limit
        r, c = self.order[depth]
        state = self.state
        forbidden = state.forbidden(r, c)
        used = state.used_pairs
        for p in self.pairs:
            a, b = p
            if (forbidden >> a) & 1 or (forbidden >> b) & 1 or p in used:
                continue
            self.stats.nodes += 1
            if self.deadline is not None and self.stats.nodes % _CLOCK_EVERY == 0:
                if time.monotonic() > self.deadline:
                    raise _Timeout
            state.place(r, c, p)
            stop = self._dfs(depth + 1)
            state.remove(r, c)
            if stop:
                return True
        return False


def _check_engine(config: SearchConfig):
    if config.engine != "backtrack":
        raise ConfigError(f"backtracking needs engine='backtrack', got {config.engine!r}")


def backtrack_search(
    n: int, config: SearchConfig | None = None, fixed: dict | None = None
) -> SearchOutcome:
    """Return the first design in search order, or prove there is none.

    ``fixed`` pre-assigns cells as ``{(row, col): pair}`` (0-based); the
    search only fills the remaining cells.
    """
    config = config or SearchConfig(engine="backtrack")
    _check_engine(config)
    if n < 1:
        raise ConfigError(f"side must be positive, got {n}")
    searcher = _Searcher(n, config, fixed, limit=1)
    done = searcher.run()
    stats = searcher.stats
    log.info("backtrack n=%d nodes=%d elapsed=%.3fs", n, stats.nodes, stats.elapsed)
    if searcher.first is not None:
        return SearchOutcome(Status.FOUND, design=searcher.first, best_cost=0, stats=stats)
    if done:
        return SearchOutcome(Status.EXHAUSTED, stats=stats)
    return SearchOutcome(Status.TIMED_OUT, stats=stats)


def count_solutions(
    n: int, config: SearchConfig | None = None, limit: int | None = None, fixed: dict | None = None
) -> tuple[int, bool]:
    """Count designs up to ``limit``; returns ``(count, complete)``.

    ``complete`` is True when the whole tree was explored, so the count is
    exact. With symmetry breaking on, the count covers only designs whose
    middle column is the normalized one.
    """
    config = config or SearchConfig(engine="backtrack")
    _check_engine(config)
    if limit is None:
        limit = config.solution_limit
    if limit is not None and limit < 1:
        raise ConfigError("solution limit must be positive")
    # one solution past the limit tells "exactly limit" apart from "more"
    searcher = _Searcher(n, config, fixed, limit=limit + 1 if limit is not None else float("inf"))
    done = searcher.run()
    if limit is not None and searcher.count > limit:
        return limit, False
    return searcher.count, done
