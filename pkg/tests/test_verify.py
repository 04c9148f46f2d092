import json
from collections import Counter

import pytest

from helpers import random_coverage_design, random_symmetry, seeded
from pbtd.core import DesignArray
from pbtd.verify import (
    Violation,
    ViolationKind as K,
    check_back_factors,
    check_column_factors,
    check_front_factors,
    check_pair_coverage,
    check_row_multiplicity,
    row_singletons,
    verify,
)

WINDOW_KINDS = {K.FRONT_WINDOW_NOT_FACTOR, K.BACK_WINDOW_NOT_FACTOR}


def test_table1_column_one(t1):
    assert t1.column(0) == (
        (2, 16), (0, 4), (1, 3), (10, 14), (5, 6), (8, 12), (9, 15), (11, 17), (7, 13)
    )
    assert check_column_factors(t1) == []


def test_n1_trivially_valid(tiny):
    for check in (
        check_column_factors,
        check_pair_coverage,
        check_row_multiplicity,
        check_front_factors,
        check_back_factors,
    ):
        assert check(tiny) == []
    assert verify(tiny).valid


def test_overwrite_breaks_column_and_coverage(t1):
    bad = t1.replace_cell(0, 0, (2, 5))
    assert check_column_factors(bad) == [
        Violation(K.COLUMN_NOT_FACTOR, 2, column=1, element=5),
        Violation(K.COLUMN_NOT_FACTOR, 0, column=1, element=16),
    ]
    assert check_pair_coverage(bad) == [
        Violation(K.PAIR_MISSING, 0, pair=(2, 16)),
        Violation(K.PAIR_REPEATED, 2, pair=(2, 5), cells=((1, 1), (1, 10))),
    ]
    assert check_row_multiplicity(bad) == [
        Violation(K.ROW_MULTIPLICITY_EXCEEDED, 3, row=1, element=5)
    ]


def test_row_multiplicity_counts_three():
    d = DesignArray(2, [[(0, 1), (0, 2), (0, 3)], [(1, 2), (1, 3), (2, 3)]])
    assert Violation(K.ROW_MULTIPLICITY_EXCEEDED, 3, row=1, element=0) in check_row_multiplicity(d)


def test_table1_row_one_counts(t1):
    counts = Counter(e for p in t1.grid[0] for e in p)
    assert counts[0] == counts[1] == 1
    assert all(counts[e] == 2 for e in range(2, 18))
    assert check_row_multiplicity(t1) == []


def test_front_windows(t1):
    assert t1.grid[0][:9] == (
        (2, 16), (3, 17), (4, 6), (5, 7), (8, 10), (9, 11), (12, 14), (13, 15), (0, 1)
    )
    assert t1.grid[8][0] == (7, 13) and t1.grid[8][8] == (16, 17)
    assert check_front_factors(t1) == []
    bad = t1.replace_cell(0, 0, (0, 4))
    found = check_front_factors(bad)
    assert Violation(K.FRONT_WINDOW_NOT_FACTOR, 0, row=1, element=16) in found
    assert Violation(K.FRONT_WINDOW_NOT_FACTOR, 2, row=1, element=0) in found


def test_back_windows(t1):
    assert t1.grid[0][8:] == (
        (0, 1), (2, 5), (3, 4), (6, 15), (7, 14), (8, 11), (9, 10), (12, 16), (13, 17)
    )
    assert t1.grid[1][8] == (2, 3) and t1.grid[1][9] == (0, 16) and t1.grid[1][16] == (11, 14)
    assert check_back_factors(t1) == []


def test_middle_column_sits_in_both_windows(t1):
    bad = t1.replace_cell(3, 8, (6, 8))
    rows_hit = {(v.kind, v.row) for v in verify(bad).violations if v.kind in WINDOW_KINDS}
    assert (K.FRONT_WINDOW_NOT_FACTOR, 4) in rows_hit
    assert (K.BACK_WINDOW_NOT_FACTOR, 4) in rows_hit


def test_table1_is_valid(t1):
    report = verify(t1)
    assert report.valid
    assert report.violations == ()
    assert len({p for _, _, p in t1.cells()}) == 153


def test_sampled_column_swaps_hit_a_window(t1, rng):
    for _ in range(50):
        c = rng.randrange(17)
        r1, r2 = rng.sample(range(9), 2)
        report = verify(t1.swap_in_column(c, r1, r2))
        assert not report.valid
        assert any(v.kind in WINDOW_KINDS for v in report.violations)


def test_violations_are_sorted(rng):
    d = random_coverage_design(4, rng)
    report = verify(d)
    keys = [v.sort_key() for v in report.violations]
    assert keys == sorted(keys)
    assert sum(report.summary.values()) == len(report.violations)


def test_report_is_deterministic(rng):
    d = random_coverage_design(5, rng)
    a = json.dumps(verify(d).as_record())
    b = json.dumps(verify(d).as_record())
    assert a == b


def test_row_multiplicity_implied_by_other_checks(t1):
    rng = seeded(7)
    for _ in range(40):
        d = random_symmetry(t1, rng)
        assert check_column_factors(d) == []
        assert check_front_factors(d) == []
        assert check_back_factors(d) == []
        assert check_row_multiplicity(d) == []


def test_singletons_are_the_middle_cell(t1):
    assert row_singletons(t1, 0) == [0, 1]
    rng = seeded(11)
    for d in [t1] + [random_symmetry(t1, rng) for _ in range(10)]:
        for r in range(d.n):
            assert row_singletons(d, r) == list(d.cell(r, d.n - 1))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_checks_run_on_garbage(n, rng):
    d = random_coverage_design(n, rng)
    assert check_pair_coverage(d) == []
    report = verify(d)
    assert report.valid == (not report.violations)


def test_text_report_header(t1):
    assert verify(t1).format_text() == "valid: true, violations: 0\n"
    text = verify(t1.replace_cell(0, 0, (2, 5))).format_text()
    assert text.startswith("valid: false, violations: ")
    assert "ColumnNotFactor: column 1, element 5, count 2" in text
