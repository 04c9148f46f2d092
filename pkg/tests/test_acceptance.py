"""Exit criteria for the package, one test per criterion.

Each test fills in the ``criterion`` record, and the terminal summary prints
a PASS/FAIL line per criterion.
"""

import time
from itertools import combinations, permutations
from pathlib import Path

from helpers import random_shape_valid, random_symmetry, seeded
from pbtd.core import DesignArray, all_pairs
from pbtd.io import emit_structured, emit_text, parse_structured, parse_text, table1
from pbtd.search import (
    ColumnStructuredState,
    SearchConfig,
    Status,
    anneal_search,
    audit_state,
    backtrack_search,
    cost,
    count_solutions,
)
from pbtd.verify import (
    check_back_factors,
    check_column_factors,
    check_front_factors,
    check_pair_coverage,
    verify,
)

DATA = Path(__file__).parent / "data"


def test_golden_table1(criterion):
    d = table1()
    t0 = time.perf_counter()
    report = verify(d)
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"violations={len(report.violations)} verify={elapsed * 1e3:.2f}ms"

    assert report.valid and len(report.violations) == 0
    cells = [p for _, _, p in d.cells()]
    assert len(cells) == 153 and set(cells) == set(all_pairs(9))
    for c in range(17):
        col = [e for p in d.column(c) for e in p]
        assert sorted(col) == list(range(18))
    for row in d.grid:
        assert sorted(e for p in row[:9] for e in p) == list(range(18))
        assert sorted(e for p in row[8:] for e in p) == list(range(18))
    assert check_column_factors(d) == check_pair_coverage(d) == []
    assert check_front_factors(d) == check_back_factors(d) == []
    assert elapsed < 0.050


def test_mutation_completeness(criterion):
    d = table1()
    swaps = 0
    false_accepts = 0
    for c in range(17):
        for r1, r2 in combinations(range(9), 2):
            swaps += 1
            false_accepts += verify(d.swap_in_column(c, r1, r2)).valid

    rng = seeded(612)
    pairs = all_pairs(9)
    for _ in range(1000):
        r, c = rng.randrange(9), rng.randrange(17)
        p = rng.choice([q for q in pairs if q != d.cell(r, c)])
        false_accepts += verify(d.replace_cell(r, c, p)).valid

    criterion["detail"] = f"swaps={swaps} overwrites=1000 false_accepts={false_accepts}"
    assert swaps == 612
    assert false_accepts == 0


def test_symmetry_suite(criterion):
    rng = seeded(200)
    d = table1()
    broken = d.swap_in_column(3, 2, 6)
    assert not verify(broken).valid
    valid_images = invalid_images = 0
    for _ in range(200):
        valid_images += verify(random_symmetry(d, rng, steps=rng.randint(1, 6))).valid
        invalid_images += not verify(random_symmetry(broken, rng, steps=rng.randint(1, 6))).valid
    criterion["detail"] = f"valid_images={valid_images}/200 invalid_images={invalid_images}/200"
    assert valid_images == 200 and invalid_images == 200


def _naive_pbtd2_count():
    pairs = all_pairs(2)
    count = 0
    for arrangement in permutations(pairs):
        grid = [list(arrangement[0:3]), list(arrangement[3:6])]
        count += verify(DesignArray(2, grid)).valid
    return count


def test_nonexistence_n2(criterion):
    cfg = SearchConfig(engine="backtrack", time_budget=None)
    t0 = time.perf_counter()
    out = backtrack_search(2, cfg)
    count = count_solutions(2, cfg)
    elapsed = time.perf_counter() - t0
    oracle = _naive_pbtd2_count()
    criterion["detail"] = f"status={out.status.value} count={count} oracle={oracle} {elapsed:.4f}s"
    assert out.status is Status.EXHAUSTED
    assert count == (0, True)
    assert oracle == 0
    assert elapsed < 1.0


def test_nonexistence_n3(criterion):
    cfg = SearchConfig(engine="backtrack", time_budget=None, symmetry_break=True)
    t0 = time.perf_counter()
    out = backtrack_search(3, cfg)
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"status={out.status.value} nodes={out.stats.nodes} {elapsed:.3f}s"
    assert out.status is Status.EXHAUSTED
    assert elapsed < 120


def test_constructive_n5(criterion):
    t0 = time.perf_counter()
    found = None
    tried = []
    for seed in range(10):
        remaining = 900 - (time.perf_counter() - t0)
        if remaining <= 0:
            break
        out = anneal_search(5, SearchConfig(engine="anneal", seed=seed, time_budget=min(remaining, 300)))
        tried.append(seed)
        if out.found:
            found = out
            break
    elapsed = time.perf_counter() - t0
    criterion["detail"] = f"seeds_tried={tried} {elapsed:.1f}s"
    assert found is not None
    assert verify(found.design).valid
    assert elapsed < 900


def _random_move(state, rng):
    n = state.n
    if rng.random() < 0.3:
        c1, c2 = rng.sample(range(2 * n - 1), 2)
        return state.cycle_switch(c1, c2, rng.randrange(2 * n), rng.choice(["greedy", "random"]), rng)
    c = rng.randrange(2 * n - 1)
    r1, r2 = rng.sample(range(n), 2)
    return state.swap_rows(c, r1, r2)


def test_cost_oracle_equivalence(criterion):
    rng = seeded(500)
    pbtd5 = parse_text((DATA / "pbtd5.txt").read_text())
    checked = zeros = 0
    for i in range(500):
        n = (2, 3, 5)[i % 3]
        if n == 5 and i % 2:
            # valid designs and single-move perturbations of them, so both sides of the iff occur
            state = ColumnStructuredState.from_design(random_symmetry(pbtd5, rng))
            if rng.random() < 0.5:
                _random_move(state, rng)
        else:
            state = ColumnStructuredState.random(n, rng)
        zero = cost(state) == 0
        zeros += zero
        assert zero == verify(state.realize()).valid
        checked += 1

    mismatches = 0
    for n in (2, 3, 5):
        state = ColumnStructuredState.random(n, rng)
        for _ in range(10_000):
            before = cost(state)
            delta, undo = _random_move(state, rng)
            mismatches += cost(state) - before != delta or state.cost != cost(state)
            if rng.random() < 0.5:
                state.undo(undo)
        assert audit_state(state)
    criterion["detail"] = f"states={checked} zero_cost={zeros} delta_mismatches={mismatches}/30000"
    assert zeros > 0
    assert mismatches == 0


def test_round_trips(criterion):
    total = 0
    for n in (1, 2, 3, 5, 9):
        rng = seeded(n)
        for _ in range(100):
            d = random_shape_valid(n, rng)
            text, doc = emit_text(d), emit_structured(d)
            assert parse_text(text) == d
            assert parse_structured(doc) == d
            assert emit_text(parse_text(text)) == text
            assert emit_structured(parse_structured(doc)) == doc
            assert emit_text(d) == text and emit_structured(d) == doc
            total += 1
    criterion["detail"] = f"designs={total}"
    assert total == 500
