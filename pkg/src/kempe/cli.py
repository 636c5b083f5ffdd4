"""Command-line surface: classify, color, criticality, structure search,
and the verification suite. Graphs are read as graph6, one per line, from
arguments, files, or standard input; --json switches machine output.

Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import (
    GraphClass,
    delta_coloring_of_minus_e,
    exact_chromatic_index,
    find_edge_coloring,
    is_critical_edge,
    is_delta_critical,
    vizing_plus_one_coloring,
)
from .graph import (
    Graph,
    Graph6Error,
    SplitSpec,
    builtin_fixture,
    fixture_names,
    from_graph6,
    full_deficiency_pairs,
    is_overfull,
    split_vertex,
    to_graph6,
)
from .harness import SuiteConfig, enumerate_graphs, run_suite
from .structures import find_kierstead_paths, find_structure_witnesses, grow_multifan


def _graph_sources(args) -> list[str]:
    """graph6 lines from positional arguments, a file, or stdin."""
    if getattr(args, "graph", None):
        return [args.graph]
    if getattr(args, "file", None):
        with open(args.file) as fh:
            return [ln.strip() for ln in fh if ln.strip()]
    return [ln.strip() for ln in sys.stdin if ln.strip()]


def _parse_edge(text: str) -> tuple[int, int]:
    u, v = text.split(",")
    return int(u), int(v)


def _emit(args, payload: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def _load(line: str) -> Graph:
    if line in fixture_names():
        return builtin_fixture(line)
    return from_graph6(line)


def cmd_classify(args) -> int:
    for line in _graph_sources(args):
        g = _load(line)
        chi = exact_chromatic_index(g)
        cls = GraphClass.CLASS1 if chi == g.max_degree() else GraphClass.CLASS2
        _emit(
            args,
            {
                "graph6": to_graph6(g),
                "class": cls.value,
                "chromatic_index": chi,
                "max_degree": g.max_degree(),
            },
            f"{cls} (chi'={chi}, Delta={g.max_degree()})",
        )
    return 0


def cmd_color(args) -> int:
    for line in _graph_sources(args):
        g = _load(line)
        if args.exact:
            delta = g.max_degree()
            col = find_edge_coloring(g, delta)
            if col is None:
                col = vizing_plus_one_coloring(g)
        else:
            col = vizing_plus_one_coloring(g)
        text = col.serialize()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        elif args.json:
            print(
                json.dumps(
                    {
                        "graph6": to_graph6(g),
                        "k": col.k,
                        "colors": {
                            f"{u},{v}": c
                            for (u, v), c in sorted(col.colored_edges().items())
                        },
                    },
                    sort_keys=True,
                )
            )
        else:
            sys.stdout.write(text)
    return 0


def cmd_overfull(args) -> int:
    for line in _graph_sources(args):
        g = _load(line)
        m, bound = g.edge_count(), g.max_degree() * (g.n // 2)
        flag = is_overfull(g)
        _emit(
            args,
            {"graph6": to_graph6(g), "overfull": flag, "edges": m, "bound": bound},
            f"overfull: {'true' if flag else 'false'} (|E|={m} "
            f"{'>' if flag else '<='} {bound})",
        )
    return 0


def cmd_pairs(args) -> int:
    for line in _graph_sources(args):
        g = _load(line)
        pairs = full_deficiency_pairs(g)
        _emit(
            args,
            {"graph6": to_graph6(g), "pairs": [list(p) for p in pairs]},
            f"full-deficiency pairs: {pairs if pairs else 'none'}",
        )
    return 0


def cmd_critical(args) -> int:
    status = 0
    for line in _graph_sources(args):
        g = _load(line)
        if args.edge:
            e = _parse_edge(args.edge)
            flag = is_critical_edge(g, e)
            _emit(
                args,
                {"graph6": to_graph6(g), "edge": list(e), "critical": flag},
                f"edge {e}: {'critical' if flag else 'not critical'}",
            )
        else:
            flag = is_delta_critical(g)
            _emit(
                args,
                {"graph6": to_graph6(g), "delta_critical": flag},
                f"Delta-critical: {'true' if flag else 'false'}",
            )
    return status


def cmd_split(args) -> int:
    for line in _graph_sources(args):
        g = _load(line)
        part = frozenset(int(x) for x in args.part.split(","))
        h = split_vertex(g, SplitSpec(args.vertex, part))
        _emit(
            args,
            {"graph6": to_graph6(h), "n": h.n, "edges": h.edge_count()},
            to_graph6(h),
        )
    return 0


def cmd_structures(args) -> int:
    for line in _graph_sources(args):
        g = _load(line)
        e = _parse_edge(args.edge)
        col = delta_coloring_of_minus_e(g, e, seed=args.seed)
        if args.kind == "multifan":
            items = []
            for r, s1 in (e, e[::-1]):
                fan = grow_multifan(col, r, s1)
                items.append({"center": fan.center, "leaves": list(fan.leaves)})
        elif args.kind == "kierstead":
            items = [
                {"vertices": list(kp.vertices)}
                for p in (1, 2, 3, 4)
                for kp in find_kierstead_paths(col, p)
            ]
        else:
            items = [
                {"kind": w.kind, "roles": w.roles}
                for w in find_structure_witnesses(col, args.kind)
            ]
        if args.json:
            print(
                json.dumps(
                    {"graph6": to_graph6(g), "kind": args.kind, "found": items},
                    sort_keys=True,
                )
            )
        else:
            print(f"{args.kind}: {len(items)} found")
            for item in items:
                print(f"  {item}")
    return 0


def cmd_enumerate(args) -> int:
    for entry in enumerate_graphs(args.n):
        print(to_graph6(entry.graph))
    return 0


def cmd_verify(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        n_max=args.n_max,
        seeds=args.seeds,
        out_dir=args.out,
    )
    result = run_suite(config)
    if args.json:
        print(
            json.dumps(
                {
                    "checks": [rep.to_dict() for rep in result.reports],
                    "not_instantiated": result.not_instantiated,
                    "exit_code": result.exit_code,
                },
                sort_keys=True,
            )
        )
    else:
        print(result.summary())
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kempe",
        description="Edge-coloring toolkit: chromatic index, critical graphs, "
        "Kempe-chain structures, and the empirical verification suite.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", nargs="?", help="graph6 string or fixture name")
        p.add_argument("--file", help="file with one graph6 per line")
        p.set_defaults(func=func)
        return p

    add_graph_cmd("classify", cmd_classify, "Class 1/2 and exact chromatic index")
    p = add_graph_cmd("color", cmd_color, "produce a proper edge coloring")
    p.add_argument("--exact", action="store_true", help="minimum colors")
    p.add_argument("--vizing", action="store_true", help="Delta+1 fan coloring")
    p.add_argument("--out", help="write the coloring to a file")
    add_graph_cmd("overfull", cmd_overfull, "edge-count overfullness test")
    add_graph_cmd("pairs", cmd_pairs, "full-deficiency pairs")
    p = add_graph_cmd("critical", cmd_critical, "critical edges / Delta-criticality")
    p.add_argument("--edge", help="single edge 'u,v'")
    p.add_argument("--all", action="store_true", help="whole-graph test (default)")
    p = add_graph_cmd("split", cmd_split, "vertex splitting")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--part", required=True, help="comma-separated neighbor subset")
    p = add_graph_cmd("structures", cmd_structures, "locate colored structures")
    p.add_argument(
        "--kind",
        required=True,
        choices=["multifan", "kierstead", "shortkite", "kite", "fork"],
    )
    p.add_argument("--edge", required=True, help="uncolored edge 'u,v'")
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("enumerate", help="all graphs on n vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        default="default",
        choices=["default", "theorem1", "theorem2", "lemmas"],
    )
    p.add_argument("--n-max", type=int, default=8, dest="n_max")
    p.add_argument("--seeds", type=int, default=8)
    p.add_argument("--out", help="report directory")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
