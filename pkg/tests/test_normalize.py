from __future__ import annotations

import random

import pytest

from kempe.classify import GraphClass, classify, find_edge_coloring
from kempe.coloring import (
    AssignColor,
    PartialEdgeColoring,
    RecolorEdge,
    SwapHalfChain,
    SwapPath,
    SwapScript,
    SwapSubchain,
)
from kempe.graph import Graph
from kempe.normalize import (
    HypothesisError,
    Normalized,
    NormalizeDiagnosticError,
    ProperColoring,
    normalize_k5,
    replay_proof_script,
)
from kempe.structures import KiersteadPath, find_kierstead_paths


def already_normalized_host():
    """A tree whose path a-b-u-s-t already carries the canonical pattern:
    the procedure must return it unchanged."""
    # a=0, b=1, u=2, s=3, t=4; pendants x1=5 (at a), x2=6, x3=7 (at b)
    g = Graph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 6), (1, 7)],
    )
    col = PartialEdgeColoring(g, 4)
    col.color_edge((1, 2), 1)  # bu = alpha
    col.color_edge((2, 3), 2)  # us = beta
    col.color_edge((3, 4), 3)  # st = gamma
    col.color_edge((0, 5), 2)
    col.color_edge((1, 6), 3)
    col.color_edge((1, 7), 4)
    return col, KiersteadPath((0, 1, 2, 3, 4))


def planted_class1_host():
    """Class 1 host whose root vertices share a missing color: the
    procedure completes a proper coloring instead of normalizing."""
    g = Graph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (1, 6), (1, 7)],
    )
    col = PartialEdgeColoring(g, 4)
    col.color_edge((1, 2), 1)  # bu
    col.color_edge((2, 3), 2)  # us
    col.color_edge((3, 4), 3)  # st
    col.color_edge((0, 5), 3)  # a misses {1,2,4}
    col.color_edge((1, 6), 3)
    col.color_edge((1, 7), 4)  # b misses {2}
    return col, KiersteadPath((0, 1, 2, 3, 4))


def test_already_normalized_is_fixed_point():
    col, path = already_normalized_host()
    out = normalize_k5(col, path)
    assert isinstance(out, Normalized)
    assert out.swap_count == 0 and len(out.trace) == 0
    assert out.coloring == col
    assert (out.alpha, out.beta, out.gamma) == (1, 2, 3)


def test_planted_class1_returns_proper_coloring():
    col, path = planted_class1_host()
    assert classify(col.graph) is GraphClass.CLASS1
    out = normalize_k5(col, path)
    assert isinstance(out, ProperColoring)
    assert out.coloring.is_full() and out.coloring.validate()
    assert out.coloring.k == col.graph.max_degree()


def test_hypothesis_error_on_small_overlap():
    col, path = already_normalized_host()
    # recolor the pendant at a from 2 to 4: the root pair then misses only
    # {1, 2, 3} while t misses {1, 2, 4}, an overlap of two
    col.uncolor_edge((0, 5))
    col.color_edge((0, 5), 4)
    with pytest.raises(HypothesisError):
        normalize_k5(col, path)


def random_overlap3_instances(count: int, start_seed: int = 0):
    """Colorings with a qualifying 5-vertex path mined from random hosts
    (no criticality assumed, so every outcome variant can appear)."""
    rng = random.Random(start_seed)
    found = []
    while len(found) < count:
        n = rng.randint(6, 10)
        p = rng.uniform(0.4, 0.9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        if not edges:
            continue
        g = Graph(n, edges)
        e = edges[rng.randrange(len(edges))]
        base = find_edge_coloring(g.without_edge(e), g.max_degree(), seed=n)
        if base is None:
            continue
        col = PartialEdgeColoring(g, g.max_degree())
        for f, c in base.colored_edges().items():
            col.color_edge(f, c)
        for kp in find_kierstead_paths(col, 4):
            a, b, _, _, t = kp.vertices
            overlap = col.missing(t) & (col.missing(a) | col.missing(b))
            if len(overlap) >= 3:
                found.append((col, kp))
                break
    return found


def test_normalize_outcomes_on_mined_hosts():
    normalized = completed = 0
    for col, kp in random_overlap3_instances(60):
        a, b, u, s, t = kp.vertices
        try:
            out = normalize_k5(col, kp)
        except NormalizeDiagnosticError:
            continue  # legal on hosts violating the ambient assumptions
        res = out.coloring
        assert res.validate()
        if isinstance(out, Normalized):
            normalized += 1
            assert res.color_of((b, u)) == out.alpha
            assert res.is_missing(a, out.alpha) and res.is_missing(t, out.alpha)
            assert res.color_of((u, s)) == out.beta
            assert res.is_missing(b, out.beta) and res.is_missing(t, out.beta)
            assert res.color_of((s, t)) == out.gamma
            assert res.is_missing(a, out.gamma)
            assert out.swap_count <= 24
            assert res.uncolored_edges() == col.uncolored_edges()
        else:
            completed += 1
            assert res.is_full()
    assert completed > 0  # the contradiction branch materializes


def test_normalize_does_not_mutate_input():
    col, path = planted_class1_host()
    snapshot = col.copy()
    normalize_k5(col, path)
    assert col == snapshot


# -- proof-script replay -------------------------------------------------------


def test_replay_worked_three_step_matrix():
    g = Graph(6, [(0, 1), (0, 2), (2, 3), (1, 3), (4, 5)])
    col = PartialEdgeColoring(g, 3)
    col.color_edge((0, 2), 2)
    col.color_edge((2, 3), 1)
    col.color_edge((1, 3), 2)
    col.color_edge((4, 5), 1)
    script = SwapScript(
        [
            SwapSubchain(0, 1, 1, 2),
            RecolorEdge((4, 5), 1, 3),
            AssignColor((0, 1), 2),
        ]
    )
    rep = replay_proof_script(col, script, expect="proper-full")
    assert rep.passed


def test_replay_empty_script_proper_partial():
    g = Graph(3, [(0, 1), (1, 2)])
    col = PartialEdgeColoring(g, 2)
    col.color_edge((1, 2), 1)
    rep = replay_proof_script(col, SwapScript(), expect="proper-partial")
    assert rep.passed


def test_replay_reports_failing_step():
    g = Graph(3, [(0, 1), (1, 2)])
    col = PartialEdgeColoring(g, 2)
    col.color_edge((1, 2), 1)
    script = SwapScript([AssignColor((0, 1), 1)])  # 1 present at vertex 1
    rep = replay_proof_script(col, script, expect="proper-full")
    assert not rep.passed
    assert rep.counterexample["step"] == 0


def kite_unwind_host():
    """The planted configuration for the kite unwind matrix: half-chain
    swap, recolor through a transient conflict, a second half-chain swap,
    an explicit two-edge path swap, then color the root edge."""
    # a=0 b=1 c=2 u=3 s1=4 s2=5 t1=6 t2=7 w=8
    edges = [
        (0, 1),  # ab uncolored
        (1, 3),  # bu: 1 (alpha)
        (0, 2),  # ac: 2 (beta)
        (2, 3),  # cu: 5 (tau)
        (3, 4),  # us1: 2
        (3, 5),  # us2: 4 (delta)
        (4, 6),  # s1t1: 3 (gamma)
        (5, 7),  # s2t2: 3
        (3, 8),  # uw: 3 (u's gamma edge)
        (8, 4),  # ws1: 1
        (4, 2),  # s1c: 4
    ]
    g = Graph(9, edges)
    col = PartialEdgeColoring(g, 5)
    for e, c in {
        (1, 3): 1,
        (0, 2): 2,
        (2, 3): 5,
        (3, 4): 2,
        (3, 5): 4,
        (4, 6): 3,
        (5, 7): 3,
        (3, 8): 3,
        (8, 4): 1,
        (2, 4): 4,
    }.items():
        col.color_edge(e, c)
    return g, col


def test_replay_kite_unwind_matrix_gives_full_coloring():
    g, col = kite_unwind_host()
    assert g.max_degree() == 5 and col.k == 5
    script = SwapScript(
        [
            SwapHalfChain(3, 1, 3, first=(3, 8)),   # (alpha,gamma) from u, avoiding bu
            RecolorEdge((1, 3), 1, 2),              # bu: alpha -> beta
            SwapHalfChain(3, 2, 4, first=(3, 4)),   # (beta,delta) from u, avoiding us2
            SwapPath((3, 5, 7), 4, 3),              # delta/gamma along u-s2-t2
            AssignColor((0, 1), 1),                 # color ab with alpha
        ]
    )
    rep = replay_proof_script(col, script, expect="proper-full")
    assert rep.passed, rep.counterexample
    from kempe.coloring import apply_script

    out, _ = apply_script(col, script)
    assert out.is_full() and out.validate() and out.k == 5
