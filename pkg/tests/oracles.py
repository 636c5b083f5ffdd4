"""Independent oracles kept in the test tree.

Both counting routes are deliberately separate from the library's
enumeration: a labeled brute force over every edge subset with
permutation-minimum dedup, and the orbit-counting (Burnside) formula over
the symmetric group acting on vertex pairs.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import factorial


def bruteforce_unlabeled_count(n: int) -> int:
    """Count graphs on n vertices up to isomorphism by brute force over all
    labeled graphs, deduplicating by the minimum edge-set encoding over
    every vertex permutation. Feasible for n <= 5."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    seen = set()
    for bits in range(1 << len(pairs)):
        best = None
        for perm in perms:
            relabeled = 0
            for i, (u, v) in enumerate(pairs):
                if bits >> i & 1:
                    pu, pv = perm[u], perm[v]
                    relabeled |= 1 << index[(min(pu, pv), max(pu, pv))]
            if best is None or relabeled < best:
                best = relabeled
        seen.add(best)
    return len(seen)


def burnside_unlabeled_count(n: int) -> int:
    """Count graphs on n vertices up to isomorphism via orbit counting:
    average over all vertex permutations of 2^(pair-cycles)."""
    pairs = list(combinations(range(n), 2))
    total = 0
    for perm in permutations(range(n)):
        remaining = set(pairs)
        cycles = 0
        while remaining:
            start = next(iter(remaining))
            cur = start
            cycles += 1
            while True:
                remaining.discard(cur)
                u, v = perm[cur[0]], perm[cur[1]]
                cur = (min(u, v), max(u, v))
                if cur == start:
                    break
        total += 1 << cycles
    count, rem = divmod(total, factorial(n))
    assert rem == 0
    return count


# A000088: graphs on n unlabeled vertices
KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
