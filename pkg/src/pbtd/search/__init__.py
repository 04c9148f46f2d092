from pbtd.search.anneal import anneal_search, portfolio_search
from pbtd.search.backtrack import (
    PartialDesign,
    audit_partial,
    backtrack_search,
    count_solutions,
    middle_column_cells,
    normalize_middle_column,
)
from pbtd.search.config import SearchConfig, SearchOutcome, SearchStats, Status
from pbtd.search.factorization import (
    alternating_cycle,
    is_one_factorization,
    is_perfect_matching,
    round_robin_factorization,
)
from pbtd.search.state import ColumnStructuredState, audit_column_state, cost


def audit_state(state) -> bool:
    """Check a search state's incremental bookkeeping against a full recount."""
    if isinstance(state, PartialDesign):
        return audit_partial(state)
    return audit_column_state(state)


def search(n: int, config: SearchConfig | None = None) -> SearchOutcome:
    """Dispatch to the engine named in ``config``."""
    config = config or SearchConfig()
    if config.engine == "anneal":
        return anneal_search(n, config)
    return backtrack_search(n, config)
