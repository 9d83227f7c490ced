"""Command-line entry point: ``strongdomatic <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import claims
from . import families as fam
from .domatic import (
    DEFAULT_NODE_BUDGET,
    BudgetExceeded,
    domatic_partition,
    oracle_gamma_st,
    oracle_strong_domatic,
    strong_domatic_number,
)
from .domination import (
    minimum_dominating_set,
    minimum_strong_dominating_set,
    minimum_weak_dominating_set,
)
from .enumeration import enumerate_regular
from .graph import Graph, GraphError, parse_graph6, read_edge_list, to_graph6


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "edges":
        return [read_edge_list(text)]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def _fmt_set(vertices) -> str:
    return " ".join(map(str, vertices))


def cmd_compute(args) -> int:
    graphs = _load_graphs(_read_input(args.input), args.format)
    for g in graphs:
        if args.what == "dst":
            res = strong_domatic_number(g, args.node_budget)
            print(f"dst {res.value}")
            for c in res.witness:
                print(f"class {_fmt_set(c)}")
        elif args.what == "domatic":
            part = domatic_partition(g, args.node_budget)
            print(f"domatic {len(part)}")
            if args.witness:
                for c in part:
                    print(f"class {_fmt_set(c)}")
        else:
            solver = {
                "gst": minimum_strong_dominating_set,
                "gamma": minimum_dominating_set,
                "gammaw": minimum_weak_dominating_set,
            }[args.what]
            witness = solver(g)
            print(f"{args.what} {len(witness)}")
            if args.witness:
                print(f"set {_fmt_set(witness)}")
    return 0


_FAMILY_HELP = ", ".join(
    f"{kind}" + (f"({arity} int)" if arity else "") for kind, arity in fam.FAMILY_ARITY.items()
)


def cmd_family(args) -> int:
    spec = fam.FamilySpec(args.kind, tuple(args.params))
    print(to_graph6(spec.build()))
    return 0


def cmd_enumerate(args) -> int:
    for g in enumerate_regular(args.order, args.degree, args.connected_only):
        print(to_graph6(g))
    return 0


def _emit(text: str, report: str | None) -> None:
    if report:
        Path(report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    results = claims.run_claims(args.max_n, args.seed, args.node_budget, args.timings)
    if args.json:
        text = claims.to_json(results)
    elif args.csv:
        text = claims.to_csv(results)
    else:
        text = claims.to_text(results)
    _emit(text, args.report)
    return 1 if claims.failed(results) else 0


def cmd_oracle_check(args) -> int:
    corpus = claims.random_corpus(args.seed, args.count, args.max_n)
    mismatches = 0
    for g in corpus:
        dst = strong_domatic_number(g, args.node_budget).value
        gst = len(minimum_strong_dominating_set(g))
        odst, ogst = oracle_strong_domatic(g), oracle_gamma_st(g)
        if (dst, gst) != (odst, ogst):
            mismatches += 1
            print(f"mismatch {to_graph6(g)} solver=({dst},{gst}) oracle=({odst},{ogst})")
    print(f"oracle-check {len(corpus)} graphs, {mismatches} mismatches")
    return 1 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongdomatic",
        description="Exact strong domination and strong domatic numbers of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute an invariant of graphs read from input")
    p.add_argument("--input", default="-", help="file path or '-' for stdin")
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--what", choices=["dst", "gst", "gamma", "gammaw", "domatic"],
                   default="dst")
    p.add_argument("--witness", action="store_true", help="also print a witness set/partition")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help=f"print a family graph as graph6: {_FAMILY_HELP}")
    p.add_argument("kind", choices=sorted(fam.FAMILY_ARITY))
    p.add_argument("params", nargs="*", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="list k-regular graphs up to isomorphism as graph6")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--connected-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-claims", help="check every registered theorem instance")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=claims.DEFAULT_SEED)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="fill the ms column")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-check", help="compare solvers with brute force on random graphs")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=claims.DEFAULT_SEED)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) < 0 or getattr(args, "seed", 0) >= 1 << 64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
