"""Shared generators for the test suite."""

import random

from pbtd.core import (
    DesignArray,
    all_pairs,
    permute_rows,
    permute_window_columns,
    reflect_horizontal,
    relabel,
)


def random_shape_valid(n, rng):
    """A design with the right shape and labels but no other structure."""
    m = 2 * n
    rows = []
    for _ in range(n):
        rows.append([tuple(rng.sample(range(m), 2)) for _ in range(2 * n - 1)])
    return DesignArray(n, rows)


def random_coverage_design(n, rng):
    """All pairs shuffled into the grid: coverage holds, little else does."""
    pairs = all_pairs(n)
    rng.shuffle(pairs)
    it = iter(pairs)
    return DesignArray(n, [[next(it) for _ in range(2 * n - 1)] for _ in range(n)])


def random_symmetry(design, rng, steps=4):
    """Apply ``steps`` randomly chosen validity-preserving actions."""
    n = design.n
    for _ in range(steps):
        kind = rng.randrange(4)
        if kind == 0:
            perm = list(range(2 * n))
            rng.shuffle(perm)
            design = relabel(design, perm)
        elif kind == 1:
            perm = list(range(n))
            rng.shuffle(perm)
            design = permute_rows(design, perm)
        elif kind == 2:
            design = reflect_horizontal(design)
        else:
            window = rng.choice(["front", "back"])
            movable = list(range(n - 1)) if window == "front" else list(range(n, 2 * n - 1))
            shuffled = movable[:]
            rng.shuffle(shuffled)
            perm = list(range(2 * n - 1))
            for src, dst in zip(movable, shuffled):
                perm[src] = dst
            design = permute_window_columns(design, window, perm)
    return design


def seeded(seed):
    return random.Random(seed)
