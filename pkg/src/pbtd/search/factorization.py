"""One-factorizations of the complete graph on ``2n`` points."""

from __future__ import annotations

from pbtd.core import Pair, make_pair


def round_robin_factorization(n: int, rotation: int = 0) -> list[list[Pair]]:
    """Circle-method one-factorization of K_{2n}.

    Matching ``k`` pairs the fixed point ``2n-1`` with ``k`` and folds the
    remaining points around ``k`` modulo ``2n-1``. The result lists matching
    ``(j + rotation) mod (2n-1)`` at position ``j``. Pairs within a matching
    are sorted.
    """
    if n < 1:
        raise ValueError(f"side must be positive, got {n}")
    m = 2 * n - 1
    out = []
    for j in range(m):
        k = (j + rotation) % m
        matching = [make_pair(k, m)]
        for i in range(1, n):
            matching.append(make_pair((k - i) % m, (k + i) % m))
        out.append(sorted(matching))
    return out


def is_perfect_matching(pairs, n: int) -> bool:
    seen = set()
    for a, b in pairs:
        if a in seen or b in seen or a == b:
            return False
        seen.update((a, b))
    return seen == set(range(2 * n))


def is_one_factorization(matchings, n: int) -> bool:
    """Disjoint perfect matchings whose union is every pair of ``range(2n)``."""
    if len(matchings) != 2 * n - 1:
        return False
    union = set()
    for m in matchings:
        if not is_perfect_matching(m, n):
            return False
        ms = {tuple(sorted(p)) for p in m}
        if union & ms:
            return False
        union |= ms
    return len(union) == n * (2 * n - 1)


def alternating_cycle(m1: dict, m2: dict, start: int) -> list[int]:
    """Vertices of the cycle through ``start`` in the union of two matchings.

    ``m1`` and ``m2`` map each element to its partner. The walk leaves
    ``start`` along ``m1`` and alternates, so consecutive vertices
    ``v[0]v[1], v[2]v[3], ...`` are ``m1`` edges and the others ``m2`` edges.
    """
    cycle = [start]
    v = start
    use_first = True
    while True:
        v = m1[v] if use_first else m2[v]
        use_first = not use_first
        if v == start:
            return cycle
        cycle.append(v)
