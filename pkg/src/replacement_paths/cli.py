"""``rsp`` command line front end.

Exit status: 0 success, 1 oracle mismatches (``check``), 2 bad input,
3 target unreachable, 4 internal invariant violated.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import List, Optional

from .generators import corpus, path_with_chords
from .graph import ID_BASE, FORMATS, Graph, GraphFormatError, parse_graph
from .oracle import ComparisonSummary, compare_all, oracle_edge, oracle_node, path_problems
from .pipeline import InvariantViolation, Solution, solve
from .report import format_number, render_json, render_tsv
from .spt import NoPathError

EXIT_MISMATCH, EXIT_PARSE, EXIT_UNREACHABLE, EXIT_INVARIANT = 1, 2, 3, 4

BENCH_COLUMNS = (
    "n", "m", "l", "phase2_seconds", "brute_seconds", "phase2_ops",
    "ops_per_m_plus_l2", "candidates", "sweep_insertions", "cpp_scan",
)


def _add_input(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--input", required=required, help="graph file ('-' for stdin)")
    p.add_argument("--input-format", choices=FORMATS, default="dimacs")
    p.add_argument("--source", type=int, help="source id in the input's numbering")
    p.add_argument("--target", type=int, help="target id in the input's numbering")


def _add_corpus(p: argparse.ArgumentParser) -> None:
    p.add_argument("--random", type=int, metavar="COUNT", help="use COUNT seeded random graphs")
    p.add_argument("--seed", type=int, default=0, help="corpus seed (RSP_SEED overrides)")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--weight-max", type=int, default=100)
    p.add_argument("--sparse-bias", type=float, default=2.0,
                   help="edge count drawn as n-1 + (max-n+1)*u**bias")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsp", description="Edge and node replacement shortest paths."
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode, help_ in (
        ("edges", "replacement path for every edge of the shortest path"),
        ("nodes", "replacement path for every internal vertex of the shortest path"),
        ("all", "edges and nodes in one pass"),
    ):
        p = sub.add_parser(mode, help=help_)
        _add_input(p, required=True)
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--paths", action="store_true", help="emit reconstructed paths")

    p = sub.add_parser("check", help="compare against the brute-force oracle")
    _add_input(p, required=False)
    _add_corpus(p)

    p = sub.add_parser("bench", help="operation counts and timings")
    _add_input(p, required=False)
    _add_corpus(p)
    p.add_argument("--k-min", type=int, default=8, help="smallest path-with-chords graph is 2**k-min")
    p.add_argument("--k-max", type=int, default=14)
    p.add_argument("--oracle-max-m", type=int, default=20000,
                   help="skip brute-force timing on graphs with more edges")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--plot", metavar="PATH", help="also write a figure of the rows")
    return parser


def _load(args) -> Graph:
    if args.source is None or args.target is None:
        raise GraphFormatError("--source and --target are required with --input")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.input}: {exc.strerror}") from None
    g, dropped = parse_graph(text, args.input_format, args.source, args.target)
    if dropped:
        print(f"warning: dropped {dropped} self-loop line(s)", file=sys.stderr)
    return g


def _seed(args) -> int:
    env = os.environ.get("RSP_SEED")
    if env is None:
        return args.seed
    try:
        return int(env)
    except ValueError:
        raise GraphFormatError(f"RSP_SEED must be an integer, got {env!r}") from None


def _corpus(args):
    if args.random is None or args.random < 1:
        raise GraphFormatError("--random COUNT must be positive")
    if args.n_min < 2 or args.n_max < args.n_min or args.weight_max < 1 or args.sparse_bias <= 0:
        raise GraphFormatError("corpus parameters must be positive with n-min >= 2")
    return corpus(args.random, _seed(args), (args.n_min, args.n_max), args.weight_max, args.sparse_bias)


def _check_paths(sol: Solution) -> None:
    lab = sol.labeling
    for rep in sol.reports:
        if rep.path is None:
            continue
        if rep.kind == "edge":
            bad = path_problems(sol.graph, rep.path, rep.distance, banned_edge=lab.path_edge_ids[rep.index - 1])
        else:
            bad = path_problems(sol.graph, rep.path, rep.distance, banned_vertex=lab.path[rep.index])
        if bad:
            raise InvariantViolation(f"{rep.kind} {rep.index}: {'; '.join(bad)}")


def run_report(args, out) -> int:
    g = _load(args)
    sol = solve(g, with_paths=args.paths)
    if args.paths:
        _check_paths(sol)
    reports = {"edges": sol.edge_reports, "nodes": sol.node_reports, "all": sol.reports}[args.mode]
    base = ID_BASE[args.input_format]
    render = render_json if args.format == "json" else render_tsv
    out.write(render(g, reports, base))
    return 0


def run_check(args, out) -> int:
    if args.input is not None:
        graphs = [_load(args)]
    else:
        graphs = _corpus(args)
    total = ComparisonSummary()
    count = 0
    for k, g in enumerate(graphs):
        summary = compare_all(g)
        for mm in summary.mismatches:
            out.write(f"graph {k}: {mm.kind} {mm.index}: fast {format_number(mm.fast)}"
                      f" oracle {format_number(mm.oracle)}: {mm.reason}\n")
        total.merge(summary)
        count += 1
    out.write(f"checked {count} graph(s): {total.edge_checks} edge reports, "
              f"{total.node_checks} node reports ({total.forest_wins} via forest)\n")
    out.write(f"{len(total.mismatches)} mismatches\n")
    return 0 if total.ok else EXIT_MISMATCH


def bench_row(g: Graph, time_oracle: bool = True) -> dict:
    sol = solve(g)
    brute = None
    if time_oracle:
        lab = sol.labeling
        start = time.perf_counter()
        for eid in lab.path_edge_ids:
            oracle_edge(g, eid, lab.path_edge_ids)
        for v in lab.path[1:-1]:
            oracle_node(g, v, lab.path)
        brute = time.perf_counter() - start
    c = sol.counters
    return {
        "n": g.n,
        "m": g.m,
        "l": sol.l,
        "phase2_seconds": sol.phase2_seconds,
        "brute_seconds": brute,
        "phase2_ops": sol.phase2_ops,
        "ops_per_m_plus_l2": sol.phase2_ops / (g.m + sol.l ** 2),
        "candidates": c["candidates"],
        "sweep_insertions": c["sweep_insertions"],
        "cpp_scan": c["cpp_scan"],
    }


def run_bench(args, out) -> int:
    if args.input is not None:
        graphs = [_load(args)]
    elif args.random is not None:
        graphs = _corpus(args)
    else:
        if not 1 <= args.k_min <= args.k_max:
            raise GraphFormatError("need 1 <= k-min <= k-max")
        seed = _seed(args)
        graphs = (path_with_chords(k, seed) for k in range(args.k_min, args.k_max + 1))
    rows = [bench_row(g, g.m <= args.oracle_max_m) for g in graphs]
    if args.format == "json":
        out.write(json.dumps({"rows": rows}, indent=2) + "\n")
    else:
        out.write("\t".join(BENCH_COLUMNS) + "\n")
        for r in rows:
            cells = []
            for col in BENCH_COLUMNS:
                v = r[col]
                cells.append("NA" if v is None else (f"{v:.6f}" if isinstance(v, float) else str(v)))
            out.write("\t".join(cells) + "\n")
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot)
    return 0


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    handler = {"check": run_check, "bench": run_bench}.get(args.mode, run_report)
    try:
        return handler(args, out)
    except GraphFormatError as exc:
        print(f"rsp: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoPathError as exc:
        print(f"rsp: no replacement paths: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except InvariantViolation as exc:
        print(f"rsp: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
