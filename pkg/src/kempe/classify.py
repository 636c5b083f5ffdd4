"""Chromatic-index machinery: constructive (Delta+1)-coloring via fan
rotation, an exact backtracking solver, and criticality tests.

For a simple graph the chromatic index is Delta or Delta+1, so the exact
question reduces to one decision: does a Delta-coloring exist?
"""

from __future__ import annotations

import random
from enum import Enum

from .coloring import PartialEdgeColoring
from .graph import Edge, Graph, edge_key


class GraphClass(Enum):
    CLASS1 = 1
    CLASS2 = 2

    def __str__(self) -> str:
        return f"Class {self.value}"


class BudgetExceededError(RuntimeError):
    """The solver hit its node cap; carries progress for diagnostics."""

    def __init__(self, nodes: int, partial: dict[Edge, int]):
        super().__init__(f"solver budget exceeded after {nodes} nodes")
        self.nodes = nodes
        self.partial = partial


DEFAULT_NODE_BUDGET = 50_000_000


# ---------------------------------------------------------------------------
# Constructive (Delta+1)-coloring: fan rotation plus one Kempe inversion
# ---------------------------------------------------------------------------


def vizing_plus_one_coloring(g: Graph) -> PartialEdgeColoring:
    """Proper full coloring with k = Delta + 1 colors.

    Classic fan argument: for each uncolored edge build a maximal fan at
    one endpoint, invert one two-colored path, rotate a fan prefix, and
    color the freed edge. Deterministic: ties broken by smallest index.
    """
    if g.n < 2:
        raise ValueError("need at least two vertices")
    k = g.max_degree() + 1
    col = PartialEdgeColoring(g, k)
    for e in g.edges():
        _color_one_edge(col, e)
    assert col.is_full() and col.validate()
    return col


def _color_one_edge(col: PartialEdgeColoring, e: Edge) -> None:
    g = col.graph
    x, f = e

    # fan: neighbors f = F[0], F[1], ... where each edge (x, F[i+1]) carries
    # a color missing at F[i]
    fan = [f]
    in_fan = {f}
    while True:
        last = fan[-1]
        nxt = None
        for z in sorted(g.neighbors(x)):
            if z in in_fan:
                continue
            c = col.color_of((x, z))
            if c is not None and col.is_missing(last, c):
                nxt = z
                break
        if nxt is None:
            break
        fan.append(nxt)
        in_fan.add(nxt)

    c_free = min(col.missing(x))
    d_free = min(col.missing(fan[-1]))
    if c_free != d_free and not col.is_missing(x, d_free):
        # invert the (c, d)-path starting at x; afterwards d is free at x
        col.kempe_swap_at(x, c_free, d_free)

    w_idx = _fan_prefix_with(col, x, fan, d_free)
    if w_idx is None:
        # d became free at the fan tip only through c; retry with the tip
        raise AssertionError("fan rotation invariant violated")
    # rotate the prefix: shift each edge color one step toward F[0]
    for i in range(w_idx):
        nxt_color = col.color_of((x, fan[i + 1]))
        col.uncolor_edge((x, fan[i + 1]))
        col.color_edge((x, fan[i]), nxt_color)
    col.color_edge((x, fan[w_idx]), d_free)


def _fan_prefix_with(
    col: PartialEdgeColoring, x: int, fan: list[int], d: int
) -> int | None:
    """Largest-prefix scan: the first fan index w such that d is missing at
    fan[w] and fan[0..w] is still a valid fan under the current coloring."""
    for i, v in enumerate(fan):
        if i > 0:
            c = col.color_of((x, fan[i]))
            if c is None or not col.is_missing(fan[i - 1], c):
                return None
        if col.is_missing(v, d):
            return i
    return None


# ---------------------------------------------------------------------------
# Exact solver: DFS over edges with forward pruning and symmetry breaking
# ---------------------------------------------------------------------------


def find_edge_coloring(
    g: Graph,
    k: int,
    seed: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PartialEdgeColoring | None:
    """A proper edge k-coloring of g, or None when none exists.

    DFS over edges with most-constrained-edge selection, per-vertex
    free-color counting, and first-use color symmetry breaking. A seed
    permutes vertex labels to diversify which coloring is found; the
    search itself stays deterministic for a fixed seed.
    """
    if k < 0:
        raise ValueError("color count must be non-negative")
    if g.edge_count() == 0:
        return PartialEdgeColoring(g, k)
    if g.max_degree() > k:
        return None
    # each color class is a matching with at most floor(n/2) edges
    if g.edge_count() > k * (g.n // 2):
        return None

    if seed is None:
        perm = list(range(g.n))
    else:
        perm = list(range(g.n))
        random.Random(seed).shuffle(perm)
    work = g.relabeled(perm)

    assignment = _search(work, k, node_budget)
    if assignment is None:
        return None
    col = PartialEdgeColoring(g, k)
    inv = [0] * g.n
    for v, pv in enumerate(perm):
        inv[pv] = v
    for (u, v), c in sorted(assignment.items()):
        col.color_edge((inv[u], inv[v]), c)
    assert col.validate()
    return col


def _degeneracy_rank(g: Graph) -> list[int]:
    """Rank by iterated minimum-degree removal; high rank = removed late."""
    deg = list(g.degrees())
    alive = set(range(g.n))
    rank = [0] * g.n
    for r in range(g.n):
        v = min(alive, key=lambda w: (deg[w], w))
        alive.remove(v)
        rank[v] = r
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return rank


def _search(g: Graph, k: int, node_budget: int) -> dict[Edge, int] | None:
    full = (1 << k) - 1
    edges = g.edges()
    rank = _degeneracy_rank(g)
    # color edges among late-surviving (dense) vertices first
    edges.sort(key=lambda e: (-(rank[e[0]] + rank[e[1]]), e))
    m = len(edges)

    free = [full] * g.n
    uncolored_deg = list(g.degrees())
    colors: dict[Edge, int] = {}
    nodes = 0

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def choose() -> tuple[Edge, int] | None:
        """Most constrained uncolored edge and its option mask."""
        best = None
        best_count = k + 1
        limit = (1 << min(_max_used[0] + 1, k)) - 1
        for e in edges:
            if e in colors:
                continue
            opts = free[e[0]] & free[e[1]] & limit
            cnt = popcount(opts)
            if cnt < best_count:
                best, best_count = (e, opts), cnt
                if cnt == 0:
                    break
        return best

    _max_used = [0]

    def dfs() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(nodes, dict(colors))
        if len(colors) == m:
            return True
        pick = choose()
        if pick is None:
            return True
        (u, v), opts = pick
        if opts == 0:
            return False
        saved_max = _max_used[0]
        mask = opts
        while mask:
            bit = mask & -mask
            mask ^= bit
            c = bit.bit_length()
            colors[(u, v)] = c
            free[u] &= ~bit
            free[v] &= ~bit
            uncolored_deg[u] -= 1
            uncolored_deg[v] -= 1
            _max_used[0] = max(saved_max, c)
            ok = popcount(free[u]) >= uncolored_deg[u] and popcount(
                free[v]
            ) >= uncolored_deg[v]
            if ok and dfs():
                return True
            del colors[(u, v)]
            free[u] |= bit
            free[v] |= bit
            uncolored_deg[u] += 1
            uncolored_deg[v] += 1
            _max_used[0] = saved_max
        return False

    return dict(colors) if dfs() else None


# ---------------------------------------------------------------------------
# Classification and criticality
# ---------------------------------------------------------------------------


def exact_chromatic_index(
    g: Graph, seed: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> int:
    """Delta if a Delta-coloring exists, else Delta + 1."""
    if g.edge_count() == 0:
        return 0
    delta = g.max_degree()
    col = find_edge_coloring(g, delta, seed=seed, node_budget=node_budget)
    return delta if col is not None else delta + 1


def classify(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> GraphClass:
    if g.edge_count() == 0:
        return GraphClass.CLASS1
    chi = exact_chromatic_index(g, node_budget=node_budget)
    return GraphClass.CLASS1 if chi == g.max_degree() else GraphClass.CLASS2


def is_critical_edge(
    g: Graph, e: tuple[int, int], node_budget: int = DEFAULT_NODE_BUDGET
) -> bool:
    """Does deleting e drop the chromatic index below Delta + 1?

    Only meaningful on Class 2 graphs; calling it on a Class 1 graph is a
    precondition error."""
    e = edge_key(*e)
    if classify(g, node_budget) is GraphClass.CLASS1:
        raise ValueError("criticality is defined for Class 2 graphs only")
    delta = g.max_degree()
    return (
        find_edge_coloring(g.without_edge(e), delta, node_budget=node_budget)
        is not None
    )


def is_delta_critical(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Connected, Class 2, and every edge critical."""
    if g.n == 0 or g.edge_count() == 0 or not g.is_connected():
        return False
    if classify(g, node_budget) is not GraphClass.CLASS2:
        return False
    delta = g.max_degree()
    return all(
        find_edge_coloring(g.without_edge(e), delta, node_budget=node_budget)
        is not None
        for e in g.edges()
    )


def delta_coloring_of_minus_e(
    g: Graph,
    e: tuple[int, int],
    seed: int | None = 0,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PartialEdgeColoring:
    """A proper Delta(g)-coloring of g with exactly e uncolored.

    Deterministic given the seed. Raises ValueError when no such coloring
    exists (the edge is not critical, or the graph is not Class 2)."""
    e = edge_key(*e)
    delta = g.max_degree()
    base = find_edge_coloring(
        g.without_edge(e), delta, seed=seed, node_budget=node_budget
    )
    if base is None:
        raise ValueError(
            f"no {delta}-coloring of the graph minus {e}: edge is not critical"
        )
    col = PartialEdgeColoring(g, delta)
    for f, c in sorted(base.colored_edges().items()):
        col.color_edge(f, c)
    assert col.uncolored_edges() == [e]
    return col
