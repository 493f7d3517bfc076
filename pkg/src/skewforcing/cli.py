"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import graphs as gr
from .forcing import all_minimum_szfs, skew_closure, zminus
from .graphs import Graph, GraphError
from .harness import SUITES
from .matching import matching_number, maximum_matching, maximum_ur_matching
from .matroid import verify_zero_forcing_matroid
from .skewrank import (
    BudgetExceeded,
    SkewRankError,
    is_prime,
    max_skew_rank_sampled,
    min_skew_rank_exhaustive,
    mr_formula,
    rank_bounds,
)


class UsageError(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(v) for v in sorted(s)) + "}"


def _fmt_edges(m) -> str:
    return " ".join(f"({u},{v})" for u, v in sorted(m)) or "(none)"


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def load_graph(args) -> Graph:
    if (args.graph6 is None) == (args.edges is None):
        raise UsageError("give exactly one of --graph6 or --edges")
    try:
        if args.graph6 is not None:
            text = _read("-") if args.graph6 == "-" else args.graph6
            return gr.parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
        return gr.parse_edge_list(_read(args.edges))
    except GraphError as exc:
        raise UsageError(f"cannot parse graph: {exc}") from None


def _parse_vertex_set(text: str, g: Graph) -> list[int]:
    text = text.strip().strip("{}")
    try:
        verts = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}") from None
    for v in verts:
        if not 0 <= v < g.order:
            raise UsageError(f"vertex {v} out of range for order {g.order}")
    return verts


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_zminus(args) -> int:
    g = load_graph(args)
    k, witness = zminus(g)
    data = {"zminus": k, "witness": sorted(witness)}
    lines = [f"Z- = {k}", f"witness: {_fmt_set(witness)}"]
    if args.all:
        sets = all_minimum_szfs(g)
        data["sets"] = [sorted(s) for s in sets]
        lines.append("sets: " + " ".join(_fmt_set(s) for s in sets))
    _emit(args, data, lines)
    return 0


def cmd_closure(args) -> int:
    g = load_graph(args)
    z = _parse_vertex_set(args.set, g)
    trace = skew_closure(g, z)
    done = trace.all_black(g)
    data = {
        "initial": sorted(trace.initial),
        "black": sorted(trace.black),
        "forces": [list(f) for f in trace.forces],
        "all_black": done,
    }
    lines = [f"{u} -> {v}" for u, v in trace.forces]
    lines.append("all black" if done else f"stalled: {_fmt_set(trace.black)}")
    _emit(args, data, lines)
    return 0


def cmd_match(args) -> int:
    g = load_graph(args)
    m = maximum_matching(g)
    data = {"match": len(m), "matching": sorted(list(e) for e in m)}
    lines = [f"match = {len(m)}", f"matching: {_fmt_edges(m)}"]
    if args.ur:
        u = maximum_ur_matching(g)
        data["ur_match"] = len(u)
        data["ur_matching"] = sorted(list(e) for e in u)
        lines += [f"max uniquely restricted = {len(u)}", f"ur matching: {_fmt_edges(u)}"]
    _emit(args, data, lines)
    return 0


def _formula_label(g: Graph) -> str:
    if gr.is_connected(g) and g.order >= 2 and gr.is_complete_multipartite(g) is not None:
        return "complete multipartite"
    if gr.is_tree(g):
        return "2*match"
    if gr.is_unicyclic(g):
        return "unicyclic"
    return "components"


def cmd_mr(args) -> int:
    g = load_graph(args)
    p = args.p
    if args.mode in ("exhaustive", "sampled", "bounds") and p is not None:
        if p == 2 or not is_prime(p):
            raise UsageError(f"--p must be an odd prime, got {p}")
    if args.mode == "formula":
        mr = mr_formula(g)
        data = {"mode": "formula", "mr": mr}
        if mr is None:
            lines = ["mr- = ? (no closed form for this graph)"]
        else:
            label = _formula_label(g)
            if label == "2*match":
                lines = [f"mr- = 2*match = {mr}"]
            else:
                lines = [f"mr- = {mr} ({label})"]
        _emit(args, data, lines)
        return 0
    if args.mode == "exhaustive":
        p = 3 if p is None else p
        mr = min_skew_rank_exhaustive(g, p)
        _emit(args, {"mode": "exhaustive", "p": p, "mr": mr}, [f"mr-_GF({p}) = {mr}"])
        return 0
    if args.mode == "sampled":
        p = 11 if p is None else p
        got = max_skew_rank_sampled(g, p, args.trials, args.seed)
        target = 2 * matching_number(g)
        _emit(args, {"mode": "sampled", "p": p, "trials": args.trials, "MR": got,
                     "two_match": target},
              [f"MR-_GF({p}) >= {got} (sampled, {args.trials} trials); 2*match = {target}"])
        return 0
    b = rank_bounds(g, p)
    data = {"mode": "bounds", "lower": b.lower, "upper": b.upper, "p": b.p,
            "exact_gfp": b.exact_gfp}
    lines = [f"{b.lower} <= mr- <= {b.upper}"]
    if p is not None:
        shown = "over budget" if b.exact_gfp is None else b.exact_gfp
        lines.append(f"mr-_GF({p}) = {shown}")
    _emit(args, data, lines)
    return 0


def cmd_matroid(args) -> int:
    g = load_graph(args)
    r = verify_zero_forcing_matroid(g)
    data = {"status": r.status, "reason": r.reason, **r.details}
    if r.forcing_family is not None:
        data["forcing_sets"] = r.forcing_family.sorted_members()
        data["dual_bases"] = r.dual_family.sorted_members()
    if r.status == "precondition_failed":
        _emit(args, data, [f"precondition failed: {r.reason}"])
        return 2
    lines = [
        f"status: {r.status}" + (f" ({r.reason})" if r.reason else ""),
        "minimum forcing sets: " + " ".join(_fmt_set(s) for s in data["forcing_sets"]),
        "dual matching-matroid bases: " + " ".join(_fmt_set(s) for s in data["dual_bases"]),
    ]
    _emit(args, data, lines)
    return 0 if r.ok else 1


def _coerce(value: str):
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return value


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[args.suite]
    accepted = inspect.signature(fn).parameters
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        key = key.replace("-", "_")
        if not sep or key not in accepted:
            raise UsageError(f"bad --param {item!r}; {args.suite} accepts {list(accepted)}")
        params[key] = _coerce(value)
    if args.p is not None and "p" in accepted:
        params["p"] = args.p
    if args.seed is not None and "seed" in accepted:
        params["seed"] = args.seed
    if args.trials is not None and "trials" in accepted:
        params["trials"] = args.trials
    report = fn(**params)
    if args.json:
        print(report.to_json_lines())
    else:
        print(report.to_text(verbose=args.verbose))
    return 0 if report.ok else 1


def cmd_generate(args) -> int:
    try:
        g = gr.generate(args.family, *args.params)
    except (GraphError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"graph6": gr.emit_graph6(g), "order": g.order,
                          "edges": [list(e) for e in g.edge_list]}))
    elif args.edge_list:
        sys.stdout.write(gr.emit_edge_list(g))
    else:
        print(gr.emit_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewforcing",
        description="Skew zero forcing, matchings and minimum skew rank over GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("--graph6", metavar="G6", help="graph6 string ('-' reads stdin)")
        p.add_argument("--edges", metavar="PATH",
                       help="edge-list file: 'n m' then m lines 'u v' ('-' reads stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("zminus", help="skew zero forcing number and a minimum set")
    graph_input(p)
    p.add_argument("--all", action="store_true", help="list every minimum forcing set")
    p.set_defaults(func=cmd_zminus)

    p = sub.add_parser("closure", help="apply the skew colour change rule")
    graph_input(p)
    p.add_argument("--set", default="", help="initial black vertices, e.g. '0,3'")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("match", help="maximum matching")
    graph_input(p)
    p.add_argument("--ur", action="store_true", help="also a maximum uniquely restricted matching")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("mr", help="minimum skew rank")
    graph_input(p)
    p.add_argument("--mode", choices=["bounds", "exhaustive", "formula", "sampled"],
                   default="bounds")
    p.add_argument("--p", type=int, default=None,
                   help="odd prime (default 3 for exhaustive, 11 for sampled)")
    p.add_argument("--trials", type=int, default=20, help="samples for --mode sampled")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mr)

    p = sub.add_parser("matroid", help="check the zero forcing matroid duality")
    graph_input(p)
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("verify", help="run a verification suite (exit 1 on failure)")
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="suite parameter, e.g. n_max=6 (repeatable)")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--json", action="store_true", help="JSON lines, one per instance")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing instances too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="print a named graph")
    p.add_argument("family", help="e.g. cycle, wheel, pineapple, complete_multipartite")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--edge-list", action="store_true", help="edge-list text instead of graph6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, SkewRankError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
