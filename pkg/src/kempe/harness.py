"""Corpus construction and end-to-end empirical verification.

Builds the small-graph corpora (complete enumeration up to isomorphism,
certified Class 1 regular families), runs every structure check across
them, and verifies the two splitting/overfull theorems plus the
near-full-degree corollary. Report files are deterministic byte-for-byte
for a fixed (config, seed): they carry work counts, never wall times.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .classify import (
    GraphClass,
    classify,
    delta_coloring_of_minus_e,
    find_edge_coloring,
    is_delta_critical,
)
from .coloring import PartialEdgeColoring
from .graph import (
    Graph,
    Multigraph,
    SplitSpec,
    complete_graph,
    from_graph6,
    full_deficiency_pairs,
    identification_map,
    identify_pair,
    is_overfull,
    split_vertex,
    to_graph6,
)
from .iso import enumerate_mask_graphs
from .normalize import (
    HypothesisError,
    Normalized,
    ProperColoring,
    NormalizeDiagnosticError,
    normalize_k5,
)
from .report import VerificationReport, failing, passing, vacuous
from .structures import (
    KiersteadPath,
    check_fan_lemmas,
    check_fork_absence,
    check_fulldpair_lemma,
    check_kierstead4,
    check_k5_claims,
    check_kite,
    check_parity,
    check_shortkite,
    check_val,
    find_kierstead_paths,
    find_structure_witnesses,
    grow_multifan,
)


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    provenance: str  # "enumerated" | "family:<name>" | "file"


@dataclass
class Corpus:
    entries: list[CorpusEntry]
    filters: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def filtered(self, name: str, predicate) -> "Corpus":
        return Corpus(
            [e for e in self.entries if predicate(e.graph)],
            self.filters + [name],
        )


def enumerate_graphs(n: int) -> Corpus:
    """All simple graphs on n vertices up to isomorphism."""
    if n > 8:
        raise ValueError("enumeration is budgeted for n <= 8")
    entries = [
        CorpusEntry(_graph_from_masks(masks), "enumerated")
        for masks in enumerate_mask_graphs(n)
    ]
    return Corpus(entries)


def enumerate_graphs_upto(n_max: int) -> Corpus:
    entries = []
    for n in range(1, n_max + 1):
        entries.extend(enumerate_graphs(n).entries)
    return Corpus(entries)


def _graph_from_masks(masks: tuple[int, ...]) -> Graph:
    n = len(masks)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1
    ]
    return Graph(n, edges)


_CRITICAL_CACHE: dict[int, list[Graph]] = {}


def delta_critical_corpus(n_max: int) -> Corpus:
    """All connected graphs up to n_max vertices (up to isomorphism) that
    are Class 2 with every edge critical."""
    if n_max not in _CRITICAL_CACHE:
        found = []
        for entry in enumerate_graphs_upto(n_max):
            g = entry.graph
            if g.edge_count() and g.is_connected() and is_delta_critical(g):
                found.append(g)
        _CRITICAL_CACHE[n_max] = found
    return Corpus(
        [CorpusEntry(g, "enumerated") for g in _CRITICAL_CACHE[n_max]],
        filters=["delta-critical"],
    )


# ---------------------------------------------------------------------------
# Certified Class 1 regular families
# ---------------------------------------------------------------------------


class FamilyError(ValueError):
    """The requested family member is not a regular Class 1 graph."""


def round_robin_one_factorization(n: int) -> PartialEdgeColoring:
    """Explicit proper (n-1)-coloring of K_n for even n: the circle method,
    one matching per round with vertex n-1 fixed."""
    if n % 2 or n < 2:
        raise ValueError("round robin needs an even vertex count")
    g = complete_graph(n)
    col = PartialEdgeColoring(g, n - 1)
    m = n - 1
    for r in range(m):
        col.color_edge((n - 1, r), r + 1)
        for i in range(1, n // 2):
            col.color_edge(((r + i) % m, (r - i) % m), r + 1)
    assert col.is_full() and col.validate()
    return col


def class1_regular_family(kind: str, *params: int) -> Graph:
    """A certified Delta-regular Class 1 graph.

    Kinds: complete-even(n) (certified by the round-robin construction),
    bipartite-regular(d) (the d-cube; solver certified), circulant(n,
    *offsets) (solver certified). Raises FamilyError when the member is
    not regular Class 1."""
    from .graph import hypercube_graph

    if kind == "complete-even":
        (n,) = params
        if n % 2:
            raise FamilyError("complete graphs are Class 1 only for even order")
        round_robin_one_factorization(n)  # construction is the certificate
        return complete_graph(n)
    if kind == "bipartite-regular":
        (d,) = params
        g = hypercube_graph(d)
    elif kind == "circulant":
        n, *offsets = params
        edges = set()
        for v in range(n):
            for off in offsets:
                edges.add(tuple(sorted((v, (v + off) % n))))
        g = Graph(n, sorted(edges))
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    degs = set(g.degrees())
    if len(degs) != 1:
        raise FamilyError("family member is not regular")
    if classify(g) is not GraphClass.CLASS1:
        raise FamilyError("family member is Class 2")
    return g


# ---------------------------------------------------------------------------
# Theorem checks
# ---------------------------------------------------------------------------


def _split_specs(g: Graph) -> list[SplitSpec]:
    """All vertex splits up to obvious symmetry: the two split halves are
    interchangeable, so only canonical-part subsets are kept; for complete
    graphs (vertex-transitive, neighbors interchangeable) one vertex and
    one subset per size suffice."""
    n = g.n
    complete = g.edge_count() == n * (n - 1) // 2
    specs = []
    if complete:
        nbrs = sorted(g.neighbors(0))
        t = len(nbrs)
        for s in range(1, t // 2 + 1):
            specs.append(SplitSpec(0, frozenset(nbrs[:s])))
        return specs
    for v in range(n):
        nbrs = sorted(g.neighbors(v))
        t = len(nbrs)
        for bits in range(1, (1 << t) - 1):
            part = frozenset(nbrs[i] for i in range(t) if bits >> i & 1)
            rest = frozenset(nbrs) - part
            if (len(part), sorted(part)) <= (len(rest), sorted(rest)):
                specs.append(SplitSpec(v, part))
    return specs


def verify_theorem1(g: Graph) -> VerificationReport:
    """Splitting a vertex of a Delta-regular Class 1 graph with
    Delta >= 3(n_split - 1)/4 must always produce a Delta-critical graph
    (n_split counts the graph after the split)."""
    check = "theorem-vertex-splitting"
    degs = set(g.degrees())
    if len(degs) != 1:
        raise ValueError("input must be regular")
    if classify(g) is not GraphClass.CLASS1:
        raise ValueError("input must be Class 1")
    delta = g.max_degree()
    n_split = g.n + 1
    if 4 * delta < 3 * (n_split - 1):
        return vacuous(check, reason="degree-bound-unmet")
    splits = 0
    for spec in _split_specs(g):
        h = split_vertex(g, spec)
        splits += 1
        if not is_delta_critical(h):
            return failing(
                check,
                counterexample={
                    "graph6": to_graph6(g),
                    "split_vertex": spec.vertex,
                    "part_one": sorted(spec.part_one),
                    "result_graph6": to_graph6(h),
                },
                met=splits,
            )
    return passing(check, met=splits, splits=splits)


def _merged_coloring_is_proper(
    mg: Multigraph, colored: list[tuple[tuple[int, int], int]]
) -> bool:
    if len(colored) != mg.edge_count():
        return False
    seen: dict[int, set[int]] = {}
    for (u, v), c in colored:
        for w in (u, v):
            if c in seen.setdefault(w, set()):
                return False
            seen[w].add(c)
    return True


def verify_theorem2_entry(g: Graph, seed: int = 0) -> VerificationReport:
    """One Delta-critical graph: with a full-deficiency pair and
    Delta >= 3(n-1)/4 it must be overfull, and identifying the pair must
    turn a coloring of G minus the pair edge into a proper Delta-coloring
    of a Delta-regular multigraph."""
    check = "theorem-full-deficiency-overfull"
    delta = g.max_degree()
    pairs = full_deficiency_pairs(g)
    if not pairs or 4 * delta < 3 * (g.n - 1):
        return vacuous(check, reason="hypothesis-unmet")

    def fail(**info) -> VerificationReport:
        return failing(check, counterexample={"graph6": to_graph6(g), **info})

    if not is_overfull(g):
        return fail(clause="overfull")
    for a, b in pairs:
        col = delta_coloring_of_minus_e(g, (a, b), seed=seed)
        mg = identify_pair(g, a, b)
        vmap = identification_map(g, a, b)
        colored = [
            ((vmap[u], vmap[v]), c) for (u, v), c in sorted(col.colored_edges().items())
        ]
        if not mg.is_regular() or mg.max_degree() != delta:
            return fail(clause="merged-regularity", pair=[a, b])
        if not _merged_coloring_is_proper(mg, colored):
            return fail(clause="merged-coloring", pair=[a, b])
    return passing(check, pairs=len(pairs))


def verify_theorem2(corpus: Corpus, seed: int = 0) -> VerificationReport:
    reports = [verify_theorem2_entry(e.graph, seed) for e in corpus]
    out = None
    for rep in reports:
        out = rep if out is None else out.merge(rep)
    return out if out is not None else vacuous("theorem-full-deficiency-overfull")


def verify_corollary_entry(g: Graph) -> VerificationReport:
    """At most one vertex outside a full-deficiency pair may have degree
    Delta - 1 (requires the pair edge critical and the degree bound)."""
    check = "corollary-near-full-uniqueness"
    delta = g.max_degree()
    pairs = full_deficiency_pairs(g)
    if not pairs or 4 * delta < 3 * (g.n - 1):
        return vacuous(check, reason="hypothesis-unmet")
    met = 0
    for a, b in pairs:
        met += 1
        near = [
            x for x in range(g.n) if x not in (a, b) and g.degree(x) == delta - 1
        ]
        if len(near) > 1:
            return failing(
                check,
                counterexample={
                    "graph6": to_graph6(g),
                    "pair": [a, b],
                    "near_full_vertices": near,
                },
                met=met,
            )
    return passing(check, met=met)


def verify_corollary(corpus: Corpus) -> VerificationReport:
    out = None
    for entry in corpus:
        rep = verify_corollary_entry(entry.graph)
        out = rep if out is None else out.merge(rep)
    return out if out is not None else vacuous("corollary-near-full-uniqueness")


# ---------------------------------------------------------------------------
# Structure-lemma sweeps over the critical corpus
# ---------------------------------------------------------------------------

SWEEP_CHECKS = (
    "val",
    "multifan-lemmas",
    "kierstead4",
    "kierstead5-degrees",
    "shortkite-max-degree",
    "kite-overlap-bound",
    "fork-absence",
    "full-deficiency-pair",
)


def _accumulate(acc: dict[str, VerificationReport], rep: VerificationReport) -> None:
    if rep.check in acc:
        acc[rep.check] = acc[rep.check].merge(rep)
    else:
        acc[rep.check] = rep


def sweep_colorings(g: Graph, seeds: int):
    """Yield (edge, seed, coloring of g minus edge) for every edge."""
    for e in g.edges():
        for seed in range(seeds):
            yield e, seed, delta_coloring_of_minus_e(g, e, seed=seed)


def lemma_sweep(corpus: Corpus, seeds: int = 8) -> list[VerificationReport]:
    """Run every structure check across the corpus: graph-level degree
    lemmas once per graph, coloring-level checks for `seeds` colorings of
    each edge deletion."""
    acc: dict[str, VerificationReport] = {}
    for entry in corpus:
        g = entry.graph
        for e in g.edges():
            _accumulate(acc, check_val(g, e))
        for a, b in full_deficiency_pairs(g):
            _accumulate(acc, check_fulldpair_lemma(g, a, b))
        for e, seed, col in sweep_colorings(g, seeds):
            for r, s1 in (e, e[::-1]):
                fan = grow_multifan(col, r, s1)
                _accumulate(acc, check_fan_lemmas(col, fan))
            for kp in find_kierstead_paths(col, 3):
                _accumulate(acc, check_kierstead4(col, kp))
            for kp in find_kierstead_paths(col, 4):
                _accumulate(acc, check_k5_claims(col, kp))
            for wit in find_structure_witnesses(col, "shortkite"):
                _accumulate(acc, check_shortkite(col, wit))
            for wit in find_structure_witnesses(col, "kite"):
                _accumulate(acc, check_kite(col, wit))
            _accumulate(acc, check_fork_absence(col))
    for name in SWEEP_CHECKS:
        if name not in acc:
            acc[name] = vacuous(name, reason="no-instances-in-corpus")
    return [acc[name] for name in SWEEP_CHECKS if name in acc]


def parity_sweep(n_max: int, limit: int | None = None) -> VerificationReport:
    """Full Delta-colorings found by the solver on Class 1 members of the
    enumeration all satisfy the per-color parity bound."""
    out = None
    count = 0
    for entry in enumerate_graphs_upto(n_max):
        g = entry.graph
        if g.edge_count() == 0:
            continue
        col = find_edge_coloring(g, g.max_degree())
        if col is None:
            continue
        rep = check_parity(col)
        out = rep if out is None else out.merge(rep)
        count += 1
        if limit is not None and count >= limit:
            break
    return out if out is not None else vacuous("parity")


# ---------------------------------------------------------------------------
# Normalization mining
# ---------------------------------------------------------------------------


def mine_k5_instances(
    corpus: Corpus, seeds: int = 8
) -> list[tuple[Graph, tuple[int, int], int, KiersteadPath]]:
    """All (graph, edge, seed, path) tuples over the corpus where a
    5-vertex Kierstead path has far-end overlap at least 3."""
    found = []
    for entry in corpus:
        g = entry.graph
        for e, seed, col in sweep_colorings(g, seeds):
            for kp in find_kierstead_paths(col, 4):
                a, b, _, _, t = kp.vertices
                overlap = col.missing(t) & (col.missing(a) | col.missing(b))
                if len(overlap) >= 3:
                    found.append((g, e, seed, kp))
    return found


def verify_normalization(corpus: Corpus, seeds: int = 8) -> VerificationReport:
    """Every mined instance must normalize to the canonical pattern within
    the swap bound; a completed coloring would contradict criticality."""
    check = "kierstead5-normalization"
    instances = mine_k5_instances(corpus, seeds)
    if not instances:
        return vacuous(check, reason="no-instances-in-corpus")
    met = 0
    for g, e, seed, kp in instances:
        col = delta_coloring_of_minus_e(g, e, seed=seed)
        met += 1

        def fail(reason: str) -> VerificationReport:
            return failing(
                check,
                counterexample={
                    "graph6": to_graph6(g),
                    "edge": list(e),
                    "seed": seed,
                    "path": list(kp.vertices),
                    "reason": reason,
                },
                met=met,
            )

        try:
            outcome = normalize_k5(col, kp)
        except HypothesisError:
            continue
        except NormalizeDiagnosticError as exc:
            return fail(f"diagnostic: {exc}")
        if isinstance(outcome, ProperColoring):
            return fail("completed a proper coloring on a critical host")
        assert isinstance(outcome, Normalized)
        res = outcome.coloring
        a, b, u, s, t = kp.vertices
        conditions = (
            res.validate()
            and res.color_of((b, u)) == outcome.alpha
            and res.is_missing(a, outcome.alpha)
            and res.is_missing(t, outcome.alpha)
            and res.color_of((u, s)) == outcome.beta
            and res.is_missing(b, outcome.beta)
            and res.is_missing(t, outcome.beta)
            and res.color_of((s, t)) == outcome.gamma
            and res.is_missing(a, outcome.gamma)
            and res.uncolored_edges() == [tuple(sorted(e))]
        )
        if not conditions:
            return fail("normalized outcome violates the canonical pattern")
        if outcome.swap_count > 24:
            return fail(f"swap bound exceeded: {outcome.swap_count}")
        deg_ok = g.degree(b) == g.max_degree() and g.degree(u) == g.max_degree()
        if not deg_ok:
            return fail("inner-degree consequence violated")
    return passing(check, met=met, instances=met)


# ---------------------------------------------------------------------------
# Suite driver
# ---------------------------------------------------------------------------


@dataclass
class SuiteConfig:
    suite: str = "default"
    n_max: int = 8
    seeds: int = 8
    out_dir: str | None = None
    graph6: list[str] = field(default_factory=list)


@dataclass
class SuiteResult:
    reports: list[VerificationReport]
    config: SuiteConfig

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    @property
    def not_instantiated(self) -> list[str]:
        """Checks whose hypothesis never fired on this corpus."""
        return [r.check for r in self.reports if not r.fired]

    def summary(self) -> str:
        lines = [rep.summary_line() for rep in self.reports]
        if self.not_instantiated:
            lines.append(
                "not instantiated on this corpus: "
                + ", ".join(self.not_instantiated)
            )
        verdict = "ALL CHECKS PASSED" if not self.failures else (
            f"{len(self.failures)} CHECK(S) FAILED"
        )
        lines.append(verdict)
        return "\n".join(lines)


def run_suite(config: SuiteConfig) -> SuiteResult:
    """Execute the requested verification suite and optionally write one
    JSON document per check plus a summary, deterministically."""
    reports: list[VerificationReport] = []
    if config.graph6:
        corpus = Corpus(
            [CorpusEntry(from_graph6(s), "file") for s in config.graph6]
        ).filtered("delta-critical", is_delta_critical)
    else:
        corpus = delta_critical_corpus(config.n_max)

    if config.suite in ("default", "theorem1"):
        for n in (4, 6):
            rep = verify_theorem1(complete_graph(n))
            rep.check = f"theorem-vertex-splitting-K{n}"
            reports.append(rep)
    if config.suite in ("default", "theorem2"):
        reports.append(verify_theorem2(corpus))
        reports.append(verify_corollary(corpus))
    if config.suite in ("default", "lemmas"):
        reports.extend(lemma_sweep(corpus, config.seeds))
        reports.append(parity_sweep(min(config.n_max, 8)))
        reports.append(verify_normalization(corpus, config.seeds))

    result = SuiteResult(reports, config)
    if config.out_dir:
        write_reports(result, Path(config.out_dir))
    return result


def write_reports(result: SuiteResult, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for rep in result.reports:
        (out_dir / f"{rep.check}.json").write_text(rep.to_json() + "\n")
    manifest = {
        "suite": result.config.suite,
        "n_max": result.config.n_max,
        "seeds": result.config.seeds,
        "checks": [rep.check for rep in result.reports],
        "failures": [rep.check for rep in result.failures],
        "not_instantiated": result.not_instantiated,
    }
    (out_dir / "suite.json").write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n"
    )
    (out_dir / "summary.txt").write_text(result.summary() + "\n")
