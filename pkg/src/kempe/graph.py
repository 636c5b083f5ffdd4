"""Simple undirected graphs, graph6 I/O, and degree-based constructions.

Vertices are dense integers 0..n-1 and stay stable under edge deletions.
Graphs are immutable; mutating operations return new Graph values.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]

GRAPH6_MAX_N = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def edge_key(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to (min, max)."""
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = edge_key(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        # bitmask adjacency, used by the solver and isomorphism code
        self._mask: tuple[int, ...] = tuple(
            sum(1 << v for v in s) for s in self._adj
        )

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def adjacency_masks(self) -> tuple[int, ...]:
        return self._mask

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no maximum degree")
        return max((len(s) for s in self._adj), default=0)

    def without_edge(self, e: tuple[int, int]) -> "Graph":
        u, v = edge_key(*e)
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not in graph")
        return Graph(self.n, [f for f in self.edges() if f != (u, v)])

    def with_edge(self, e: tuple[int, int]) -> "Graph":
        u, v = edge_key(*e)
        return Graph(self.n, self.edges() + [(u, v)])

    def relabeled(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def validate(self) -> None:
        """Check adjacency symmetry and loop-freeness (debug aid)."""
        for u in range(self.n):
            if u in self._adj[u]:
                raise AssertionError(f"loop at {u}")
            for v in self._adj[u]:
                if u not in self._adj[v]:
                    raise AssertionError(f"asymmetric edge ({u},{v})")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class Multigraph:
    """Minimal multigraph value: a multiset of loop-free edges.

    Produced by identifying adjacent vertex pairs; supports degree queries
    and proper-coloring verification but no coloring algorithms.
    """

    __slots__ = ("n", "edge_multiset")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        self.edge_multiset: Counter[Edge] = Counter()
        for u, v in edges:
            u, v = edge_key(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            self.edge_multiset[(u, v)] += 1

    def edges(self) -> list[Edge]:
        """All edges with multiplicity, sorted."""
        return sorted(self.edge_multiset.elements())

    def edge_count(self) -> int:
        return sum(self.edge_multiset.values())

    def degree(self, v: int) -> int:
        d = 0
        for (a, b), m in self.edge_multiset.items():
            if a == v:
                d += m
            if b == v:
                d += m
        return d

    def degrees(self) -> tuple[int, ...]:
        ds = [0] * self.n
        for (a, b), m in self.edge_multiset.items():
            ds[a] += m
            ds[b] += m
        return tuple(ds)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self) -> bool:
        ds = self.degrees()
        return len(set(ds)) <= 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self.edge_multiset == other.edge_multiset
        )

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class SplitSpec:
    """A vertex split: `vertex` is replaced by two adjacent vertices, with
    `part_one` (a non-empty proper subset of its neighborhood) attached to
    the first copy and the rest to the second."""

    vertex: int
    part_one: frozenset[int]

    def validate_for(self, g: Graph) -> None:
        if not (0 <= self.vertex < g.n):
            raise InvalidSplitError(f"vertex {self.vertex} out of range")
        nbrs = g.neighbors(self.vertex)
        if not self.part_one or not self.part_one < nbrs:
            raise InvalidSplitError(
                "part_one must be a non-empty proper subset of the "
                f"neighborhood of {self.vertex}"
            )


class InvalidSplitError(ValueError):
    pass


# ---------------------------------------------------------------------------
# graph6 encoding (McKay's format, n <= 62, one graph per line)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode as a canonical-length graph6 string (no header, no newline).

    Bit order follows the format: columns of the upper triangle, i.e.
    pairs (0,1), (0,2), (1,2), (0,3), ...
    """
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 output limited to n <= {GRAPH6_MAX_N}")
    out = [chr(n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            bits = (bits << 1) | (1 if g.has_edge(u, v) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Parse one graph6 line into a Graph.

    Accepts an optional '>>graph6<<' header and surrounding whitespace.
    Raises Graph6Error with a byte offset on malformed input.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error(
            f"multi-byte vertex counts (n > {GRAPH6_MAX_N}) not supported", 0
        )
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid size byte {s[0]!r}", 0)
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated graph6 string: need {need} data bytes, got {len(body)}",
            len(s),
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 data", 1 + need)
    edges = []
    bitpos = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(body[bitpos // 6])
            if not 63 <= byte <= 126:
                raise Graph6Error(
                    f"invalid data byte {body[bitpos // 6]!r}", 1 + bitpos // 6
                )
            if (byte - 63) >> (5 - bitpos % 6) & 1:
                edges.append((u, v))
            bitpos += 1
    # padding bits must be zero
    if bitpos % 6:
        byte = ord(body[-1]) - 63
        if byte & ((1 << (6 - bitpos % 6)) - 1):
            raise Graph6Error("nonzero padding bits", len(s) - 1)
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks."""
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


# ---------------------------------------------------------------------------
# Degree-based queries and constructions
# ---------------------------------------------------------------------------


def max_degree(g: Graph) -> int:
    return g.max_degree()


def is_overfull(g: Graph) -> bool:
    """True iff the graph has more edges than Delta * floor(n/2).

    Any proper edge coloring needs each color class to be a matching of at
    most floor(n/2) edges, so an overfull graph cannot be Delta-colored.
    Only odd-order graphs can be overfull.
    """
    return g.edge_count() > g.max_degree() * (g.n // 2)


def split_vertex(g: Graph, spec: SplitSpec) -> Graph:
    """Split a vertex in two adjacent copies partitioning its neighborhood.

    The first copy keeps the original index and is joined to part_one; the
    second copy gets the new index n and is joined to the rest. The copies
    are adjacent, so the edge count grows by one.
    """
    spec.validate_for(g)
    v = spec.vertex
    v2 = g.n
    edges = [e for e in g.edges() if v not in e]
    for u in g.neighbors(v):
        edges.append((v, u) if u in spec.part_one else (v2, u))
    edges.append((v, v2))
    return Graph(g.n + 1, edges)


def identify_pair(g: Graph, a: int, b: int) -> Multigraph:
    """Merge adjacent vertices a and b, deleting the edge between them.

    Inverse of split_vertex up to isomorphism. The merged vertex takes
    index min(a, b); vertices above max(a, b) shift down by one. Parallel
    edges appear whenever a and b share a neighbor.
    """
    if not g.has_edge(a, b):
        raise ValueError(f"vertices {a} and {b} are not adjacent")
    lo, hi = min(a, b), max(a, b)

    def remap(v: int) -> int:
        if v == hi:
            return lo
        return v - 1 if v > hi else v

    edges = [
        (remap(u), remap(v)) for u, v in g.edges() if (u, v) != (lo, hi)
    ]
    return Multigraph(g.n - 1, edges)


def identification_map(g: Graph, a: int, b: int) -> dict[int, int]:
    """The vertex relabeling used by identify_pair."""
    lo, hi = min(a, b), max(a, b)
    return {
        v: (lo if v == hi else (v - 1 if v > hi else v)) for v in range(g.n)
    }


def full_deficiency_pairs(g: Graph) -> list[tuple[int, int]]:
    """All adjacent pairs (u, v), u < v, with d(u) + d(v) = Delta + 2."""
    target = g.max_degree() + 2
    return [
        (u, v)
        for u, v in g.edges()
        if g.degree(u) + g.degree(v) == target
    ]


def distance_to_set(g: Graph, u: int, targets: set[int] | frozenset[int]) -> float:
    """Shortest-path distance from u to the nearest vertex of a non-empty
    target set; math.inf when unreachable."""
    if not targets:
        raise ValueError("target set must be non-empty")
    if u in targets:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if w in targets:
                    return dist[w]
                queue.append(w)
    return math.inf


# ---------------------------------------------------------------------------
# Built-in fixtures (vertex numbering fixed so graph6 output is reproducible)
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(m: int) -> Graph:
    """K_{1,m} with the hub at vertex 0."""
    return Graph(m + 1, [(0, i) for i in range(1, m + 1)])


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return Graph(
        n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    )


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen_graph() -> Graph:
    """Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def pstar_graph() -> Graph:
    """Petersen graph minus vertex 0; old vertex v becomes v - 1."""
    pet = petersen_graph()
    return Graph(9, [(u - 1, v - 1) for u, v in pet.edges() if 0 not in (u, v)])


def splitk4_graph() -> Graph:
    """K4 split at vertex 0 with part_one = {1}."""
    return split_vertex(complete_graph(4), SplitSpec(0, frozenset({1})))


_FIXTURES = {
    "triangle": lambda: complete_graph(3),
    "k3": lambda: complete_graph(3),
    "k4": lambda: complete_graph(4),
    "k5": lambda: complete_graph(5),
    "k6": lambda: complete_graph(6),
    "k7": lambda: complete_graph(7),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
    "c7": lambda: cycle_graph(7),
    "petersen": petersen_graph,
    "pstar": pstar_graph,
    "splitk4": splitk4_graph,
    "cube": lambda: hypercube_graph(3),
}


def builtin_fixture(name: str) -> Graph:
    """Look up a named fixture graph; raises KeyError on unknown names."""
    try:
        factory = _FIXTURES[name.lower()]
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; known: {', '.join(sorted(_FIXTURES))}"
        ) from None
    return factory()


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)
