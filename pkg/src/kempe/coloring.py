"""Partial proper edge colorings, Kempe chains, and swap scripts.

Colors are integers 1..k. Missing-color sets are maintained incrementally
as per-vertex bitmasks (bit c-1 set when color c is present), so k is
limited to 64 — plenty at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, edge_key


class ColoringError(Exception):
    """Improper state or violated precondition in a coloring operation."""


class ChainError(ColoringError):
    """A Kempe-chain operation could not be applied (stale chain,
    unlinked endpoints, ambiguous cycle segment, ...)."""


class ScriptError(ColoringError):
    """A swap-script step failed; records which one and why."""

    def __init__(self, step_index: int, reason: str):
        super().__init__(f"script step {step_index}: {reason}")
        self.step_index = step_index
        self.reason = reason


@dataclass(frozen=True)
class KempeChain:
    """A maximal component of the subgraph induced by two colors.

    Paths are listed endpoint to endpoint; cycles start and end at the
    same vertex in `vertices` but list each edge once. A vertex missing
    both colors forms a trivial single-vertex path.
    """

    colors: tuple[int, int]
    kind: str  # "path" | "cycle"
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def has_edge(self, e: tuple[int, int]) -> bool:
        return edge_key(*e) in self.edges

    def is_trivial(self) -> bool:
        return not self.edges


class PartialEdgeColoring:
    """A proper edge k-coloring of a graph minus its uncolored edge set."""

    __slots__ = ("graph", "k", "_assign", "_present")

    def __init__(self, graph: Graph, k: int):
        if k < 0 or k > 64:
            raise ValueError("color count must be in 0..64")
        self.graph = graph
        self.k = k
        self._assign: dict[Edge, int] = {}
        self._present: list[int] = [0] * graph.n

    # -- basic queries ------------------------------------------------------

    def color_of(self, e: tuple[int, int]) -> int | None:
        return self._assign.get(edge_key(*e))

    def is_colored(self, e: tuple[int, int]) -> bool:
        return edge_key(*e) in self._assign

    def colored_edges(self) -> dict[Edge, int]:
        return dict(self._assign)

    def uncolored_edges(self) -> list[Edge]:
        return [e for e in self.graph.edges() if e not in self._assign]

    def uncolored_count(self) -> int:
        return self.graph.edge_count() - len(self._assign)

    def is_full(self) -> bool:
        return len(self._assign) == self.graph.edge_count()

    def present_mask(self, v: int) -> int:
        return self._present[v]

    def present(self, v: int) -> set[int]:
        return _mask_to_colors(self._present[v])

    def missing_mask(self, v: int) -> int:
        return ~self._present[v] & ((1 << self.k) - 1)

    def missing(self, v: int) -> set[int]:
        """Colors of 1..k absent from every edge at v."""
        return _mask_to_colors(self.missing_mask(v))

    def is_missing(self, v: int, c: int) -> bool:
        return not self._present[v] >> (c - 1) & 1

    def missing_union(self, vertices: Iterable[int]) -> set[int]:
        mask = 0
        for v in vertices:
            mask |= self.missing_mask(v)
        return _mask_to_colors(mask)

    def is_elementary(self, vertices: Iterable[int]) -> bool:
        """True iff the missing sets of the given vertices are pairwise
        disjoint."""
        seen = 0
        for v in vertices:
            m = self.missing_mask(v)
            if seen & m:
                return False
            seen |= m
        return True

    def edge_at(self, v: int, c: int) -> Edge | None:
        """The unique edge at v colored c, if any."""
        if self.is_missing(v, c):
            return None
        for u in self.graph.neighbors(v):
            e = edge_key(u, v)
            if self._assign.get(e) == c:
                return e
        return None

    # -- mutations ----------------------------------------------------------

    def _check_color(self, c: int) -> None:
        if not 1 <= c <= self.k:
            raise ColoringError(f"color {c} outside 1..{self.k}")

    def color_edge(self, e: tuple[int, int], c: int) -> None:
        """Assign color c to an uncolored edge; c must be missing at both
        endpoints."""
        self._check_color(c)
        u, v = e = edge_key(*e)
        if e in self._assign:
            raise ColoringError(f"edge {e} already colored")
        if not self.graph.has_edge(u, v):
            raise ColoringError(f"edge {e} not in graph")
        bit = 1 << (c - 1)
        if (self._present[u] | self._present[v]) & bit:
            raise ColoringError(f"color {c} already present at an end of {e}")
        self._assign[e] = c
        self._present[u] |= bit
        self._present[v] |= bit

    def uncolor_edge(self, e: tuple[int, int]) -> None:
        u, v = e = edge_key(*e)
        c = self._assign.pop(e, None)
        if c is None:
            raise ColoringError(f"edge {e} is not colored")
        bit = 1 << (c - 1)
        self._present[u] &= ~bit
        self._present[v] &= ~bit

    def recolor_edge(self, e: tuple[int, int], c: int) -> None:
        """Recolor a colored edge; the new color must be missing at both
        endpoints once the edge's own color is removed."""
        self._check_color(c)
        e = edge_key(*e)
        old = self._assign.get(e)
        if old is None:
            raise ColoringError(f"edge {e} is not colored")
        if old == c:
            return
        self.uncolor_edge(e)
        try:
            self.color_edge(e, c)
        except ColoringError:
            self.color_edge(e, old)
            raise

    def _set_color_raw(self, e: tuple[int, int], c: int) -> None:
        """Recolor without the propriety precondition (script transactions
        may pass through improper states; the final validation gates them)."""
        self._check_color(c)
        u, v = e = edge_key(*e)
        if e not in self._assign:
            raise ColoringError(f"edge {e} is not colored")
        self._assign[e] = c
        for w in (u, v):
            mask = 0
            for z in self.graph.neighbors(w):
                col = self._assign.get(edge_key(w, z))
                if col is not None:
                    mask |= 1 << (col - 1)
            self._present[w] = mask

    def permute_colors(self, a: int, b: int) -> None:
        """Swap the names of two colors everywhere (a global renaming)."""
        self._check_color(a)
        self._check_color(b)
        if a == b:
            return
        for e, c in self._assign.items():
            if c == a:
                self._assign[e] = b
            elif c == b:
                self._assign[e] = a
        abit, bbit = 1 << (a - 1), 1 << (b - 1)
        for v in range(self.graph.n):
            p = self._present[v]
            hasa, hasb = p & abit, p & bbit
            if bool(hasa) != bool(hasb):
                self._present[v] = p ^ abit ^ bbit

    # -- Kempe machinery ----------------------------------------------------

    def chain_through(
        self, v: int, alpha: int, beta: int, first_edge: tuple[int, int] | None = None
    ) -> KempeChain:
        """The maximal (alpha, beta)-component containing v.

        A vertex missing both colors yields a trivial one-vertex path.
        `first_edge` disambiguates direction when v is interior to a path:
        the returned path then starts at v's other side so that the chain
        still covers the whole component (the argument only fixes the
        orientation of the vertex listing).
        """
        self._check_color(alpha)
        self._check_color(beta)
        if alpha == beta:
            raise ColoringError("chain colors must differ")

        e1 = self.edge_at(v, alpha)
        e2 = self.edge_at(v, beta)
        local = [e for e in (e1, e2) if e is not None]
        if not local:
            return KempeChain(
                (alpha, beta), "path", (v,), ()
            )
        if first_edge is not None:
            fe = edge_key(*first_edge)
            if fe not in local:
                raise ChainError(f"{fe} is not an ({alpha},{beta})-edge at {v}")
            if len(local) == 2 and local[0] != fe:
                local.reverse()

        def walk(start: int, e: Edge) -> tuple[list[int], list[Edge]]:
            verts, edges = [start], []
            cur = start
            nxt_edge: Edge | None = e
            while nxt_edge is not None:
                edges.append(nxt_edge)
                a, b = nxt_edge
                cur = b if a == cur else a
                verts.append(cur)
                if cur == start:
                    return verts, edges  # closed cycle
                want = beta if self._assign[nxt_edge] == alpha else alpha
                nxt_edge = self.edge_at(cur, want)
            return verts, edges

        verts1, edges1 = walk(v, local[0])
        if verts1[-1] == v and len(edges1) > 1:
            return KempeChain((alpha, beta), "cycle", tuple(verts1), tuple(edges1))
        if len(local) == 1:
            return KempeChain((alpha, beta), "path", tuple(verts1), tuple(edges1))
        # v is interior: extend the other way and splice
        verts2, edges2 = walk(v, local[1])
        vertices = tuple(reversed(verts2)) + tuple(verts1[1:])
        edges = tuple(reversed(edges2)) + tuple(edges1)
        return KempeChain((alpha, beta), "path", vertices, edges)

    def are_linked(self, x: int, y: int, alpha: int, beta: int) -> bool:
        """True iff x and y lie in the same (alpha, beta)-component."""
        if x == y:
            return True
        return y in self.chain_through(x, alpha, beta).vertices

    def _chain_is_current(self, chain: KempeChain) -> bool:
        alpha, beta = chain.colors
        for e in chain.edges:
            if self._assign.get(e) not in (alpha, beta):
                return False
        if chain.edges:
            fresh = self.chain_through(chain.vertices[0], alpha, beta)
            return set(fresh.edges) == set(chain.edges)
        return True

    def swap_chain(self, chain: KempeChain) -> None:
        """Kempe change: exchange the two colors along a full chain.

        Propriety is preserved; swapping the same chain twice restores the
        original coloring."""
        if not self._chain_is_current(chain):
            raise ChainError("stale chain: not a current component")
        alpha, beta = chain.colors
        self._swap_edges(chain.edges, alpha, beta)

    def _swap_edges(self, edges: Sequence[Edge], alpha: int, beta: int) -> None:
        if not edges:
            return
        abit, bbit = 1 << (alpha - 1), 1 << (beta - 1)
        both = abit | bbit
        for e in edges:
            c = self._assign[e]
            self._assign[e] = beta if c == alpha else alpha
        for v in e_vertices(edges):
            mask = 0
            for u in self.graph.neighbors(v):
                c = self._assign.get(edge_key(u, v))
                if c == alpha:
                    mask |= abit
                elif c == beta:
                    mask |= bbit
            self._present[v] = (self._present[v] & ~both) | mask

    def kempe_swap_at(self, v: int, alpha: int, beta: int) -> KempeChain:
        """Swap the full (alpha, beta)-chain containing v, where v must miss
        at least one of the two colors (so it is a path end or trivial).
        Returns the swapped chain. Swapping a trivial chain, or a pair of
        equal colors, does nothing (the conventional no-op swap)."""
        if alpha == beta:
            return KempeChain((alpha, beta), "path", (v,), ())
        if not (self.is_missing(v, alpha) or self.is_missing(v, beta)):
            raise ChainError(
                f"vertex {v} misses neither color {alpha} nor {beta}; "
                "interior swaps need an explicit segment"
            )
        chain = self.chain_through(v, alpha, beta)
        self.swap_chain(chain)
        return chain

    def swap_subchain(self, x: int, y: int, alpha: int, beta: int) -> tuple[Edge, ...]:
        """Exchange colors on the x..y segment of their common (alpha, beta)
        path.

        The result can be improper at the segment boundary unless the
        boundary vertices miss the right colors; callers outside a script
        transaction must re-validate. Cycles are rejected (the segment
        would be ambiguous)."""
        chain = self.chain_through(x, alpha, beta)
        if chain.kind == "cycle":
            raise ChainError("subchain of a cycle is ambiguous")
        if y not in chain.vertices:
            raise ChainError(f"{x} and {y} are not ({alpha},{beta})-linked")
        if x == y:
            return ()
        vi = chain.vertices.index(x)
        vj = chain.vertices.index(y)
        lo, hi = min(vi, vj), max(vi, vj)
        segment = chain.edges[lo:hi]
        self._swap_edges(segment, alpha, beta)
        return segment

    def half_chain_from(
        self, x: int, alpha: int, beta: int, first_edge: tuple[int, int]
    ) -> tuple[Edge, ...]:
        """The two-colored segment from x along `first_edge` to its end.

        Walks the alternation directly from the given edge, so it stays
        well defined even while a script transaction is transiently
        improper elsewhere. Rejects closed walks back to x."""
        fe = edge_key(*first_edge)
        if self._assign.get(fe) not in (alpha, beta) or x not in fe:
            raise ChainError(f"{fe} is not an ({alpha},{beta})-edge at {x}")
        edges = [fe]
        cur = fe[1] if fe[0] == x else fe[0]
        prev = fe
        while True:
            if cur == x:
                raise ChainError("half chain closed into a cycle")
            want = (
                beta if self._assign[prev] == alpha else alpha
            )
            nxt = None
            for z in sorted(self.graph.neighbors(cur)):
                e = edge_key(cur, z)
                if e != prev and self._assign.get(e) == want:
                    nxt = e
                    break
            if nxt is None:
                return tuple(edges)
            edges.append(nxt)
            cur = nxt[1] if nxt[0] == cur else nxt[0]
            prev = nxt

    def swap_half_chain(
        self, x: int, alpha: int, beta: int, first_edge: tuple[int, int]
    ) -> tuple[Edge, ...]:
        """Exchange colors from x along `first_edge` to the chain's end.

        Propriety can break at x when x carries the other color too; script
        transactions must restore it before the final validation."""
        segment = self.half_chain_from(x, alpha, beta, first_edge)
        self._swap_edges(segment, alpha, beta)
        return segment

    def swap_explicit_path(self, vertices: Sequence[int], alpha: int, beta: int) -> None:
        """Exchange colors along an explicitly listed alternating path."""
        edges = []
        for u, v in zip(vertices, vertices[1:]):
            e = edge_key(u, v)
            if self._assign.get(e) not in (alpha, beta):
                raise ChainError(f"edge {e} is not colored {alpha} or {beta}")
            edges.append(e)
        self._swap_edges(edges, alpha, beta)

    # -- validation, copying, serialization ----------------------------------

    def validate(self) -> bool:
        """True iff proper and the incremental bookkeeping is consistent."""
        masks = [0] * self.graph.n
        for (u, v), c in self._assign.items():
            if not self.graph.has_edge(u, v) or not 1 <= c <= self.k:
                return False
            bit = 1 << (c - 1)
            if masks[u] & bit or masks[v] & bit:
                return False
            masks[u] |= bit
            masks[v] |= bit
        return masks == self._present

    def copy(self) -> "PartialEdgeColoring":
        dup = PartialEdgeColoring(self.graph, self.k)
        dup._assign = dict(self._assign)
        dup._present = list(self._present)
        return dup

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PartialEdgeColoring)
            and self.graph == other.graph
            and self.k == other.k
            and self._assign == other._assign
        )

    def __repr__(self) -> str:
        return (
            f"PartialEdgeColoring(k={self.k}, colored={len(self._assign)}, "
            f"uncolored={self.uncolored_count()})"
        )

    def serialize(self) -> str:
        """Text form: header `k=<int> uncolored=<count>`, then one line per
        edge `u v c` (c is '-' for uncolored edges)."""
        lines = [f"k={self.k} uncolored={self.uncolored_count()}"]
        for u, v in self.graph.edges():
            c = self._assign.get((u, v))
            lines.append(f"{u} {v} {'-' if c is None else c}")
        return "\n".join(lines) + "\n"


def parse_coloring(graph: Graph, text: str) -> PartialEdgeColoring:
    """Inverse of PartialEdgeColoring.serialize for a known graph."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("k="):
        raise ValueError("missing coloring header")
    head = dict(part.split("=") for part in lines[0].split())
    col = PartialEdgeColoring(graph, int(head["k"]))
    for ln in lines[1:]:
        u, v, c = ln.split()
        if c != "-":
            col.color_edge((int(u), int(v)), int(c))
    if col.uncolored_count() != int(head["uncolored"]):
        raise ValueError("uncolored count does not match header")
    return col


def full_coloring_from(graph: Graph, assignment: dict[Edge, int], k: int) -> PartialEdgeColoring:
    """Build a coloring from an explicit edge -> color map."""
    col = PartialEdgeColoring(graph, k)
    for e, c in sorted(assignment.items()):
        col.color_edge(e, c)
    return col


def _mask_to_colors(mask: int) -> set[int]:
    out = set()
    c = 1
    while mask:
        if mask & 1:
            out.add(c)
        mask >>= 1
        c += 1
    return out


def e_vertices(edges: Sequence[Edge]) -> set[int]:
    out: set[int] = set()
    for e in edges:
        out.update(e)
    return out


# ---------------------------------------------------------------------------
# Swap scripts: the two-row operation matrices as executable step lists
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SwapSubchain:
    """Exchange two colors on the segment between x and y of their common
    chain (may transiently break propriety at the segment boundary)."""

    x: int
    y: int
    alpha: int
    beta: int

    def render(self) -> tuple[str, str]:
        return f"P[{self.x},{self.y}]({self.alpha},{self.beta})", f"{self.alpha}/{self.beta}"


@dataclass(frozen=True)
class SwapChainAt:
    """Kempe change on the full chain containing x (x must miss one color)."""

    x: int
    alpha: int
    beta: int

    def render(self) -> tuple[str, str]:
        return f"P{self.x}({self.alpha},{self.beta})", f"{self.alpha}/{self.beta}"


@dataclass(frozen=True)
class SwapHalfChain:
    """Exchange two colors from x along `first` to the chain's end."""

    x: int
    alpha: int
    beta: int
    first: Edge

    def render(self) -> tuple[str, str]:
        u, v = self.first
        return (
            f"P{self.x}({self.alpha},{self.beta})|{u}-{v}",
            f"{self.alpha}/{self.beta}",
        )


@dataclass(frozen=True)
class SwapPath:
    """Exchange two colors along an explicitly listed path of vertices."""

    vertices: tuple[int, ...]
    alpha: int
    beta: int

    def render(self) -> tuple[str, str]:
        return "".join(map(str, self.vertices)), f"{self.alpha}/{self.beta}"


@dataclass(frozen=True)
class RecolorEdge:
    edge: Edge
    old: int
    new: int

    def render(self) -> tuple[str, str]:
        u, v = self.edge
        return f"{u}-{v}", f"{self.old}->{self.new}"


@dataclass(frozen=True)
class AssignColor:
    edge: Edge
    color: int

    def render(self) -> tuple[str, str]:
        u, v = self.edge
        return f"{u}-{v}", f"{self.color}"


@dataclass(frozen=True)
class PermuteColors:
    """Globally rename color a as b and vice versa."""

    a: int
    b: int

    def render(self) -> tuple[str, str]:
        return f"{self.a}<->{self.b}", "rename"


Step = (
    SwapSubchain
    | SwapChainAt
    | SwapHalfChain
    | SwapPath
    | RecolorEdge
    | AssignColor
    | PermuteColors
)


@dataclass
class SwapScript:
    """An ordered sequence of recoloring steps, applied left to right."""

    steps: list[Step] = field(default_factory=list)

    def append(self, step: Step) -> None:
        self.steps.append(step)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def render(self) -> str:
        """Two aligned rows: targets above actions."""
        if not self.steps:
            return "(empty script)"
        cells = [s.render() for s in self.steps]
        widths = [max(len(t), len(a)) for t, a in cells]
        row1 = "  ".join(t.ljust(w) for (t, _), w in zip(cells, widths))
        row2 = "  ".join(a.ljust(w) for (_, a), w in zip(cells, widths))
        return row1.rstrip() + "\n" + row2.rstrip()


def apply_step(col: PartialEdgeColoring, step: Step) -> None:
    if isinstance(step, SwapSubchain):
        col.swap_subchain(step.x, step.y, step.alpha, step.beta)
    elif isinstance(step, SwapChainAt):
        col.kempe_swap_at(step.x, step.alpha, step.beta)
    elif isinstance(step, SwapHalfChain):
        col.swap_half_chain(step.x, step.alpha, step.beta, step.first)
    elif isinstance(step, SwapPath):
        col.swap_explicit_path(step.vertices, step.alpha, step.beta)
    elif isinstance(step, RecolorEdge):
        actual = col.color_of(step.edge)
        if actual != step.old:
            raise ColoringError(
                f"edge {step.edge} is colored {actual}, expected {step.old}"
            )
        # scripts may recolor through transient conflicts; the script's
        # final validation is the propriety gate
        col._set_color_raw(step.edge, step.new)
    elif isinstance(step, AssignColor):
        col.color_edge(step.edge, step.color)
    elif isinstance(step, PermuteColors):
        col.permute_colors(step.a, step.b)
    else:  # pragma: no cover
        raise TypeError(f"unknown step {step!r}")


def apply_script(
    col: PartialEdgeColoring, script: SwapScript
) -> tuple[PartialEdgeColoring, list[str]]:
    """Apply a script to a copy of the coloring.

    Returns the resulting coloring and a step-by-step trace. Subchain swaps
    may pass through improper intermediate states, but the final coloring
    must validate. The first inapplicable step raises ScriptError with its
    index."""
    work = col.copy()
    trace: list[str] = []
    for i, step in enumerate(script):
        try:
            apply_step(work, step)
        except ColoringError as exc:
            raise ScriptError(i, str(exc)) from exc
        target, action = step.render()
        trace.append(f"[{i}] {target} : {action}")
    if not work.validate():
        raise ScriptError(len(script.steps), "final coloring is improper")
    return work, trace
