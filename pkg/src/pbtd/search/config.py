from __future__ import annotations

import enum
from dataclasses import dataclass, field

from pbtd.core import DesignArray
from pbtd.errors import ConfigError

ENGINES = ("backtrack", "anneal")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for both search engines.

    ``time_budget`` is in seconds; ``None`` means unbounded.
    ``moves_per_temperature`` defaults to ``200 * n`` when left as ``None``.
    ``cycle_switch_rate`` is the probability that an annealing move is a
    cycle switch rather than a within-column row swap.
    """

    engine: str = "backtrack"
    seed: int = 0
    time_budget: float | None = 60.0
    symmetry_break: bool = False
    initial_temperature: float = 0.5
    cooling_factor: float = 0.995
    moves_per_temperature: int | None = None
    restart_limit: int = 200
    solution_limit: int | None = None
    cycle_switch_rate: float = 0.3
    reassign: str = "greedy"

    def __post_init__(self):
        if self.engine not in ENGINES:
            raise ConfigError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if not isinstance(self.seed, int) or not -(2**63) <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit integer, got {self.seed!r}")
        if self.time_budget is not None and not self.time_budget > 0:
            raise ConfigError(f"time budget must be positive, got {self.time_budget}")
        if not self.initial_temperature > 0:
            raise ConfigError("initial temperature must be positive")
        if not 0 < self.cooling_factor < 1:
            raise ConfigError("cooling factor must lie strictly between 0 and 1")
        if self.moves_per_temperature is not None and self.moves_per_temperature < 1:
            raise ConfigError("moves per temperature must be positive")
        if self.restart_limit < 0:
            raise ConfigError("restart limit must be non-negative")
        if self.solution_limit is not None and self.solution_limit < 1:
            raise ConfigError("solution limit must be positive")
        if not 0 <= self.cycle_switch_rate <= 1:
            raise ConfigError("cycle switch rate must lie in [0, 1]")
        if self.reassign not in ("greedy", "random"):
            raise ConfigError("reassign must be 'greedy' or 'random'")

    def moves_for(self, n: int) -> int:
        return self.moves_per_temperature or 200 * n


class Status(str, enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    TIMED_OUT = "timed_out"


@dataclass
class SearchStats:
    nodes: int = 0
    moves: int = 0
    restarts: int = 0
    elapsed: float = 0.0


@dataclass
class SearchOutcome:
    status: Status
    design: DesignArray | None = None
    best_cost: int | None = None
    best_state: object | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND
