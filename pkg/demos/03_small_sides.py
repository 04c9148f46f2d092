"""
No designs for sides two, three and four
========================================

Complete backtracking settles the small sides. With symmetry breaking on,
the middle column is pinned to (0,1), (2,3), ... which loses nothing: any
design can be relabeled into that form.
"""

import time

from pbtd.search import SearchConfig, backtrack_search, count_solutions

for n in (2, 3, 4):
    cfg = SearchConfig(engine="backtrack", time_budget=None, symmetry_break=n > 2)
    t0 = time.perf_counter()
    out = backtrack_search(n, cfg)
    print(f"n={n}: {out.status.value} after {out.stats.nodes} nodes, {time.perf_counter() - t0:.3f}s")

# counting gives the same answer for n = 2 without any symmetry breaking
print("n=2 count:", count_solutions(2, SearchConfig(engine="backtrack", time_budget=None)))
