from __future__ import annotations

import random
from itertools import permutations

import pytest

from kempe.classify import delta_coloring_of_minus_e, find_edge_coloring
from kempe.coloring import PartialEdgeColoring
from kempe.graph import Graph, builtin_fixture, cycle_graph, star_graph
from kempe.structures import (
    AmbiguityError,
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
    alpha_sequences,
)


def triangle_minus_ab() -> PartialEdgeColoring:
    col = PartialEdgeColoring(builtin_fixture("triangle"), 2)
    col.color_edge((0, 2), 1)
    col.color_edge((1, 2), 2)
    return col


# -- multifans ---------------------------------------------------------------


def test_grow_multifan_triangle():
    col = triangle_minus_ab()
    fan = grow_multifan(col, 0, 1)
    assert fan.center == 0 and fan.leaves == (1, 2)
    fan.validate(col)


def test_grow_multifan_base_case():
    g = Graph(3, [(0, 1), (0, 2)])
    col = PartialEdgeColoring(g, 2)
    col.color_edge((0, 2), 1)
    # spoke color 1 is not missing at leaf 1 only if 1 is present there;
    # leaf 1 has no colored edge, so the fan grows; use a color outside
    # the leaf's missing set instead
    col2 = PartialEdgeColoring(g, 1)
    col2.color_edge((0, 2), 1)
    fan = grow_multifan(col2, 0, 1)
    assert fan.leaves == (1, 2)
    lone = PartialEdgeColoring(Graph(2, [(0, 1)]), 1)
    fan = grow_multifan(lone, 0, 1)
    assert fan.leaves == (1,)


def test_multifan_elementary_on_pstar(pstar):
    for e in pstar.edges()[:4]:
        for seed in range(2):
            col = delta_coloring_of_minus_e(pstar, e, seed=seed)
            for r, s1 in (e, e[::-1]):
                fan = grow_multifan(col, r, s1)
                assert col.is_elementary(fan.vertices)
                rep = check_fan_lemmas(col, fan)
                assert rep.passed


def test_alpha_sequences_triangle():
    col = triangle_minus_ab()
    fan = grow_multifan(col, 0, 1)
    seqs, prec = alpha_sequences(col, fan)
    assert len(seqs) == 1
    assert seqs[0].anchor == 1 and seqs[0].vertices == (2,)
    assert prec == set()


def test_alpha_sequences_trivial_fan():
    p3 = Graph(3, [(0, 1), (1, 2)])
    col = PartialEdgeColoring(p3, 1)
    col.color_edge((1, 2), 1)
    fan = grow_multifan(col, 0, 1)
    assert fan.leaves == (1,)
    seqs, prec = alpha_sequences(col, fan)
    assert seqs == [] and prec == set()


def test_alpha_sequences_disjoint_anchors(pstar):
    """Sequences of different anchors never share vertices or colors."""
    seen_multi = 0
    for e in pstar.edges():
        for seed in range(4):
            col = delta_coloring_of_minus_e(pstar, e, seed=seed)
            for r, s1 in (e, e[::-1]):
                fan = grow_multifan(col, r, s1)
                seqs, _ = alpha_sequences(col, fan)
                if len(seqs) >= 2:
                    seen_multi += 1
                    vsets = [set(s.vertices) for s in seqs]
                    for i in range(len(vsets)):
                        for j in range(i + 1, len(vsets)):
                            assert not vsets[i] & vsets[j]
    assert seen_multi > 0


def test_alpha_sequences_ambiguity_error():
    col = PartialEdgeColoring(builtin_fixture("triangle"), 3)
    col.color_edge((0, 2), 1)
    col.color_edge((1, 2), 2)
    fan = grow_multifan(col, 0, 1)
    # k=3 gives both endpoints the shared missing color 3
    with pytest.raises(AmbiguityError):
        alpha_sequences(col, fan)


def test_fan_lemmas_negative_control():
    col = PartialEdgeColoring(builtin_fixture("triangle"), 3)
    col.color_edge((0, 2), 1)
    col.color_edge((1, 2), 2)
    fan = grow_multifan(col, 0, 1)
    rep = check_fan_lemmas(col, fan)
    assert not rep.passed
    assert rep.counterexample["clause"] == "elementary"


def test_fan_lemmas_triangle_linkage():
    col = triangle_minus_ab()
    fan = grow_multifan(col, 0, 1)
    rep = check_fan_lemmas(col, fan)
    assert rep.passed


# -- Kierstead paths ---------------------------------------------------------


def c5_setup() -> PartialEdgeColoring:
    col = PartialEdgeColoring(cycle_graph(5), 2)
    for e, c in {(1, 2): 1, (2, 3): 2, (3, 4): 1, (0, 4): 2}.items():
        col.color_edge(e, c)
    return col


def test_find_kierstead_paths_c5():
    col = c5_setup()
    quads = {kp.vertices for kp in find_kierstead_paths(col, 3)}
    assert (0, 1, 2, 3) in quads
    singles = {kp.vertices for kp in find_kierstead_paths(col, 1)}
    assert singles == {(0, 1), (1, 0)}


def naive_kierstead_paths(col: PartialEdgeColoring, p: int) -> set[tuple[int, ...]]:
    g = col.graph
    (e,) = col.uncolored_edges()
    out = set()
    for tup in permutations(range(g.n), p + 1):
        if {tup[0], tup[1]} != set(e):
            continue
        if any(not g.has_edge(tup[i], tup[i + 1]) for i in range(p)):
            continue
        ok = True
        for i in range(2, p + 1):
            c = col.color_of((tup[i - 1], tup[i]))
            if c is None or not any(
                col.is_missing(tup[j], c) for j in range(i)
            ):
                ok = False
                break
        if ok:
            out.add(tup)
    return out


def test_kierstead_paths_match_naive(pstar):
    rng = random.Random(3)
    hosts = [delta_coloring_of_minus_e(pstar, pstar.edges()[2], seed=1)]
    for _ in range(6):
        n = rng.randint(5, 7)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.6
        ]
        g = Graph(n, edges)
        if not edges:
            continue
        e = edges[rng.randrange(len(edges))]
        base = find_edge_coloring(g.without_edge(e), g.max_degree(), seed=1)
        if base is None:
            continue
        col = PartialEdgeColoring(g, g.max_degree())
        for f, c in base.colored_edges().items():
            col.color_edge(f, c)
        hosts.append(col)
    for col in hosts:
        for p in (2, 3, 4):
            mine = {kp.vertices for kp in find_kierstead_paths(col, p)}
            assert mine == naive_kierstead_paths(col, p)


def test_check_kierstead4_c5():
    col = c5_setup()
    kp = KiersteadPath((0, 1, 2, 3))
    rep = check_kierstead4(col, kp)
    assert rep.passed


def test_kierstead4_bound_on_pstar(pstar):
    for e in pstar.edges():
        col = delta_coloring_of_minus_e(pstar, e, seed=0)
        for kp in find_kierstead_paths(col, 3):
            v0, v1, _, v3 = kp.vertices
            overlap = col.missing(v3) & (col.missing(v0) | col.missing(v1))
            assert len(overlap) <= 1
            assert check_kierstead4(col, kp).passed


def random_host_with_paths(seed: int, p: int):
    """(coloring, paths) on a random graph; no criticality assumed."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(6, 9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.6
        ]
        g = Graph(n, edges)
        if not edges:
            continue
        e = edges[rng.randrange(len(edges))]
        base = find_edge_coloring(g.without_edge(e), g.max_degree(), seed=seed)
        if base is None:
            continue
        col = PartialEdgeColoring(g, g.max_degree())
        for f, c in base.colored_edges().items():
            col.color_edge(f, c)
        paths = find_kierstead_paths(col, p)
        if paths:
            return col, paths


def test_kierstead4_negative_control():
    """On hosts without criticality the overlap bound can break; the check
    must report it rather than pass."""
    found = False
    for seed in range(200):
        col, paths = random_host_with_paths(seed, 3)
        for kp in paths:
            v0, v1, _, v3 = kp.vertices
            overlap = col.missing(v3) & (col.missing(v0) | col.missing(v1))
            if len(overlap) > 1:
                rep = check_kierstead4(col, kp)
                assert not rep.passed
                assert rep.counterexample["clause"] in (
                    "overlap-bound",
                    "elementary",
                )
                found = True
                break
        if found:
            break
    assert found


def test_k5_claims_vacuous_when_overlap_small():
    col = c5_setup()
    for kp in find_kierstead_paths(col, 4):
        rep = check_k5_claims(col, kp)
        assert rep.passed and rep.vacuous == 1


def test_k5_claims_negative_control():
    """Random hosts violating the inner-degree conclusion must fail."""
    found = False
    for seed in range(400):
        col, paths = random_host_with_paths(seed, 4)
        g = col.graph
        delta = g.max_degree()
        for kp in paths:
            a, b, u, _, t = kp.vertices
            overlap = col.missing(t) & (col.missing(a) | col.missing(b))
            if len(overlap) >= 3 and (
                g.degree(b) != delta or g.degree(u) != delta
            ):
                rep = check_k5_claims(col, kp)
                assert not rep.passed
                assert rep.counterexample["clause"] == "inner-degrees"
                found = True
                break
        if found:
            break
    assert found


# -- short-kites, kites, forks ------------------------------------------------


def naive_shortkites(col) -> set[tuple]:
    g = col.graph
    (e,) = col.uncolored_edges()

    def kier_ok(seq):
        missing = col.missing(seq[0]) | col.missing(seq[1])
        for i in range(2, len(seq)):
            c = col.color_of((seq[i - 1], seq[i]))
            if c is None or c not in missing:
                return False
            missing |= col.missing(seq[i])
        return True

    raw = set()
    for a, b in (e, e[::-1]):
        for c, u, x, y in permutations(
            [v for v in range(g.n) if v not in (a, b)], 4
        ):
            if not (
                g.has_edge(a, c)
                and g.has_edge(b, u)
                and g.has_edge(c, u)
                and g.has_edge(u, x)
                and g.has_edge(u, y)
            ):
                continue
            if kier_ok((a, b, u, x)) and kier_ok((b, a, c, u, y)):
                raw.add((a, b, c, u, x, y))
    out = set()
    for a, b, c, u, x, y in raw:
        if (a, b, c, u, y, x) in raw and y < x:
            continue
        out.add((a, b, c, u, x, y))
    return out


def naive_forks(col) -> set[tuple]:
    g = col.graph
    (e,) = col.uncolored_edges()
    out = set()
    for a, b in (e, e[::-1]):
        root = col.missing(a) | col.missing(b)
        for u, s1, t1, s2, t2 in permutations(
            [v for v in range(g.n) if v not in (a, b)], 5
        ):
            if (s1, t1) > (s2, t2):
                continue
            if not (
                g.has_edge(b, u)
                and g.has_edge(u, s1)
                and g.has_edge(u, s2)
                and g.has_edge(s1, t1)
                and g.has_edge(s2, t2)
            ):
                continue
            cbu = col.color_of((b, u))
            c1, c2 = col.color_of((u, s1)), col.color_of((u, s2))
            d1, d2 = col.color_of((s1, t1)), col.color_of((s2, t2))
            if None in (cbu, c1, c2, d1, d2):
                continue
            if (
                cbu in col.missing(a)
                and c1 in root
                and c2 in root
                and d1 in root
                and d1 in col.missing(t2)
                and d2 in root
                and d2 in col.missing(t1)
            ):
                out.add((a, b, u, s1, s2, t1, t2))
    return out


def test_no_shortkites_below_six_vertices():
    col = c5_setup()
    assert find_structure_witnesses(col, "shortkite") == []


def test_shortkite_finder_matches_naive(splitk4, pstar):
    hosts = []
    for g in (splitk4, pstar):
        for e in g.edges()[:5]:
            hosts.append(delta_coloring_of_minus_e(g, e, seed=0))
    rng = random.Random(9)
    for seed in range(30):
        col, _ = random_host_with_paths(seed, 2)
        hosts.append(col)
    for col in hosts:
        mine = {
            w.role_tuple("a", "b", "c", "u", "x", "y")
            for w in find_structure_witnesses(col, "shortkite")
        }
        assert mine == naive_shortkites(col)


def test_fork_finder_matches_naive(pstar):
    hosts = [delta_coloring_of_minus_e(pstar, pstar.edges()[0], seed=0)]
    for seed in range(30):
        col, _ = random_host_with_paths(seed, 2)
        hosts.append(col)
    for col in hosts:
        mine = {
            w.role_tuple("a", "b", "u", "s1", "s2", "t1", "t2")
            for w in find_structure_witnesses(col, "fork")
        }
        assert mine == naive_forks(col)


def kite_violation_host():
    """A hand-built kite whose far tips share far too many missing colors
    (possible only because the host breaks the ambient assumptions)."""
    edges = [
        (0, 1),  # ab, uncolored
        (0, 2),  # ac
        (1, 3),  # bu
        (2, 3),  # cu
        (3, 4),  # us1
        (3, 5),  # us2
        (4, 6),  # s1t1
        (5, 7),  # s2t2
    ]
    g = Graph(8, edges)
    col = PartialEdgeColoring(g, 8)
    col.color_edge((0, 2), 2)
    col.color_edge((1, 3), 1)
    col.color_edge((2, 3), 5)
    col.color_edge((3, 4), 2)
    col.color_edge((3, 5), 4)
    col.color_edge((4, 6), 3)
    col.color_edge((5, 7), 3)
    return col


def test_kite_finder_and_negative_control():
    col = kite_violation_host()
    wits = find_structure_witnesses(col, "kite")
    assert any(
        w.roles == {"a": 0, "b": 1, "c": 2, "u": 3, "s1": 4, "s2": 5, "t1": 6, "t2": 7}
        for w in wits
    )
    wit = [w for w in wits if w.roles["a"] == 0][0]
    rep = check_kite(col, wit)
    assert not rep.passed
    assert len(rep.counterexample["shared"]) >= 5


def shortkite_violation_host():
    edges = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]
    g = Graph(6, edges)
    col = PartialEdgeColoring(g, 6)
    col.color_edge((0, 2), 2)  # ac
    col.color_edge((1, 3), 1)  # bu
    col.color_edge((2, 3), 4)  # cu
    col.color_edge((3, 4), 3)  # ux
    col.color_edge((3, 5), 5)  # uy
    return col


def test_shortkite_negative_control():
    col = shortkite_violation_host()
    wits = find_structure_witnesses(col, "shortkite")
    target = [w for w in wits if w.roles["x"] in (4, 5)]
    assert target
    rep = check_shortkite(col, target[0])
    assert not rep.passed


def fork_violation_host():
    edges = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6), (2, 7)]
    g = Graph(8, edges)
    col = PartialEdgeColoring(g, 6)
    col.color_edge((1, 2), 1)  # bu
    col.color_edge((2, 3), 2)  # us1
    col.color_edge((2, 4), 3)  # us2
    col.color_edge((3, 5), 4)  # s1t1
    col.color_edge((4, 6), 5)  # s2t2
    col.color_edge((2, 7), 6)  # pad u's degree to Delta=4
    return col


def test_fork_absence_negative_control():
    col = fork_violation_host()
    rep = check_fork_absence(col)
    assert not rep.passed
    assert rep.counterexample["witness"]["a"] == 0


def test_fork_absence_vacuous_without_candidates():
    col = triangle_minus_ab()
    rep = check_fork_absence(col)
    assert rep.passed and rep.vacuous == 1


# -- degree lemmas -------------------------------------------------------------


def test_val_triangle_and_pstar(triangle, pstar):
    for e in triangle.edges():
        assert check_val(triangle, e).passed
    for x, y in pstar.edges():
        rep = check_val(pstar, (x, y))
        assert rep.passed
        if pstar.degree(y) == 2:
            have = sum(
                1
                for z in pstar.neighbors(x) - {y}
                if pstar.degree(z) == 3
            )
            assert have >= 2


def test_val_negative_control():
    g = star_graph(3)
    rep = check_val(g, (0, 1))
    assert not rep.passed


def test_parity_examples():
    p3 = Graph(3, [(0, 1), (1, 2)])
    col = PartialEdgeColoring(p3, 2)
    col.color_edge((0, 1), 1)
    col.color_edge((1, 2), 2)
    assert check_parity(col).passed

    c4 = cycle_graph(4)
    col = PartialEdgeColoring(c4, 2)
    for e, c in {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2}.items():
        col.color_edge(e, c)
    assert check_parity(col).passed

    col.uncolor_edge((0, 1))
    with pytest.raises(ValueError):
        check_parity(col)


def test_fulldpair_triangle_and_splitk4(triangle, splitk4):
    rep = check_fulldpair_lemma(triangle, 0, 1)
    assert rep.passed and rep.fired
    for a, b in [(0, 1), (0, 4)]:
        rep = check_fulldpair_lemma(splitk4, a, b)
        assert rep.passed and rep.fired
        assert rep.details.get("corollary_met") == 1


def test_fulldpair_hypothesis_unmet(k4):
    rep = check_fulldpair_lemma(k4, 0, 1)
    assert rep.passed and rep.vacuous == 1
