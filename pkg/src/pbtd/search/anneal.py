"""Simulated annealing over column-structured states.

Two moves keep every column a perfect matching: swapping two rows inside a
column, and a cycle switch between two columns. Moves are accepted by the
Metropolis rule at the current temperature, the temperature decays
geometrically per epoch, and a run restarts from a fresh state after
``restart_limit`` epochs without a new best cost.
"""

from __future__ import annotations

import logging
import math
import multiprocessing
import random
import time
from dataclasses import replace

from pbtd.core import DesignArray
from pbtd.errors import ConfigError
from pbtd.search.config import SearchConfig, SearchOutcome, SearchStats, Status
from pbtd.search.state import ColumnStructuredState
from pbtd.verify import verify

log = logging.getLogger(__name__)

_CLOCK_EVERY = 512


def _random_move(state: ColumnStructuredState, rng: random.Random, config: SearchConfig):
    n = state.n
    ncols = 2 * n - 1
    if ncols > 1 and rng.random() < config.cycle_switch_rate:
        c1, c2 = rng.sample(range(ncols), 2)
        return state.cycle_switch(c1, c2, rng.randrange(2 * n), config.reassign, rng)
    c = rng.randrange(ncols)
    r1, r2 = rng.sample(range(n), 2)
    return state.swap_rows(c, r1, r2)


def _found(state: ColumnStructuredState, stats: SearchStats) -> SearchOutcome:
    design = state.realize()
    if not verify(design).valid:  # pragma: no cover - soundness guard
        raise AssertionError("zero-cost state failed verification")
    return SearchOutcome(Status.FOUND, design=design, best_cost=0, stats=stats)


def anneal_search(
    n: int,
    config: SearchConfig | None = None,
    initial: ColumnStructuredState | DesignArray | None = None,
) -> SearchOutcome:
    """Look for a design of side ``n`` by simulated annealing.

    ``initial`` warm-starts the first run from a given state or design;
    restarts always draw fresh states from the seeded generator.
    """
    config = config or SearchConfig(engine="anneal")
    if config.engine != "anneal":
        raise ConfigError(f"annealing needs engine='anneal', got {config.engine!r}")
    if n < 1:
        raise ConfigError(f"side must be positive, got {n}")

    rng = random.Random(config.seed)
    stats = SearchStats()
    start = time.monotonic()
    deadline = None if config.time_budget is None else start + config.time_budget

    if isinstance(initial, DesignArray):
        initial = ColumnStructuredState.from_design(initial)
    if initial is not None:
        if initial.n != n:
            raise ConfigError(f"initial state has side {initial.n}, expected {n}")
        state = initial.copy()
    else:
        state = ColumnStructuredState.random(n, rng)

    best_cost = state.cost
    best_state = state.copy()
    moves_per_epoch = config.moves_for(n)

    while True:
        if state.cost == 0:
            stats.elapsed = time.monotonic() - start
            return _found(state, stats)
        if n == 1:  # pragma: no cover - every n = 1 state has cost 0
            break

        temperature = config.initial_temperature
        run_best = state.cost
        stale_epochs = 0
        timed_out = False
        while stale_epochs <= config.restart_limit:
            improved = False
            for _ in range(moves_per_epoch):
                delta, undo = _random_move(state, rng, config)
                stats.moves += 1
                if delta > 0 and rng.random() >= math.exp(-delta / temperature):
                    state.undo(undo)
                    continue
                if state.cost < run_best:
                    run_best = state.cost
                    improved = True
                    if run_best < best_cost:
                        best_cost = run_best
                        best_state = state.copy()
                    if run_best == 0:
                        stats.elapsed = time.monotonic() - start
                        return _found(state, stats)
                if deadline is not None and stats.moves % _CLOCK_EVERY == 0:
                    if time.monotonic() > deadline:
                        timed_out = True
                        break
            if timed_out:
                break
            stale_epochs = 0 if improved else stale_epochs + 1
            temperature *= config.cooling_factor
        if timed_out:
            break
        stats.restarts += 1
        log.info(
            "anneal n=%d restart %d best=%d moves=%d", n, stats.restarts, best_cost, stats.moves
        )
        state = ColumnStructuredState.random(n, rng)

    stats.elapsed = time.monotonic() - start
    return SearchOutcome(Status.TIMED_OUT, best_cost=best_cost, best_state=best_state, stats=stats)


def _run_seed(args):
    n, config = args
    outcome = anneal_search(n, config)
    return config.seed, outcome


def portfolio_search(n: int, config: SearchConfig, seeds, workers: int | None = None) -> SearchOutcome:
    """Run independent seeded annealers in parallel; first verified find wins.

    Which seed wins depends on scheduling, so results are not reproducible,
    but every returned design has passed the verifier.
    """
    seeds = list(seeds)
    if not seeds:
        raise ConfigError("portfolio needs at least one seed")
    jobs = [(n, replace(config, seed=s)) for s in seeds]
    best = None
    with multiprocessing.Pool(workers) as pool:
        for _, outcome in pool.imap_unordered(_run_seed, jobs):
            if outcome.found:
                pool.terminate()
                return outcome
            if best is None or outcome.best_cost < best.best_cost:
                best = outcome
    return best
