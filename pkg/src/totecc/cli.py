"""Command-line front end.

Subcommands: ``tau`` (indices of one graph), ``family`` (build a named
family member), ``rewrite`` (run one of the three tree rewrites), ``enumerate``
(extremal scans as CSV, optionally with witness dumps and a figure) and
``verify`` (the full brute-force battery).

Exit codes: 0 on success, 1 on usage or input errors, 2 when a verification
check or a rewrite invariant fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .edgelist import format_edge_list, read_edge_list, write_edge_list
from .enumeration import ExtremalReport, extremal_scan
from .families import FAMILY_IDS, construct
from .graphs import GraphError, eccentricity_profile
from .indices import closed_form, index_report, total_eccentricity
from .report import atomic_write_text, format_csv, render_figure, write_csv
from .rewrite import format_trace, rewrite_to_matched_star, rewrite_to_path, rewrite_to_star
from .verification import Bounds, run_checks

_CLASS_MIN_N = {"tree": 1, "unicyclic": 3, "bicyclic": 4, "conjugated-tree": 2}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _cmd_tau(args: argparse.Namespace) -> int:
    g = read_edge_list(args.input)
    r = index_report(g)
    p = eccentricity_profile(g)
    print(f"n={r.n} m={r.m} tau={r.tau} avec={r.avec} xi={r.xi} rad={p.rad} diam={p.diam}")
    if args.all:
        for v in range(g.n):
            print(f"ecc {v} {p.ecc[v]}")
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    g = construct(args.name, args.n, args.k)
    sys.stdout.write(format_edge_list(g))
    computed = total_eccentricity(g)
    try:
        cf = closed_form(args.name, args.n, args.k)
        paper, status = cf.paper_value, cf.status
    except GraphError:
        paper, status = "-", "out-of-formula-range"
    print(f"# tau_computed={computed} tau_paper={paper} status={status}")
    return 0


def _cmd_rewrite(args: argparse.Namespace) -> int:
    g = read_edge_list(args.input)
    runner = {1: rewrite_to_path, 2: rewrite_to_star, 3: rewrite_to_matched_star}[args.algorithm]
    trace = runner(g)
    if args.trace:
        atomic_write_text(format_trace(trace), args.trace)
    print(f"initial tau {trace.initial_tau} rad {trace.initial_rad}")
    print(f"final tau {trace.final_tau} rad {trace.final_rad} steps {len(trace.steps)}")
    return 0


def _scan_orders(graph_class: str, min_n: int, max_n: int) -> list[int]:
    lo = max(min_n, _CLASS_MIN_N[graph_class])
    orders = range(lo, max_n + 1)
    if graph_class == "conjugated-tree":
        return [n for n in orders if n % 2 == 0]
    return list(orders)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    classes = list(_CLASS_MIN_N) if args.graph_class == "all" else [args.graph_class]
    reports: list[ExtremalReport] = []
    for graph_class in classes:
        for n in _scan_orders(graph_class, args.min_n, args.max_n):
            reports.append(extremal_scan(graph_class, n, threads=args.threads))
    if args.out:
        write_csv(reports, args.out)
    else:
        sys.stdout.write(format_csv(reports))
    if args.witness_dir:
        directory = Path(args.witness_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for r in reports:
            for tag, graphs in (("min", r.min_witness_graphs), ("max", r.max_witness_graphs)):
                for i, g in enumerate(graphs):
                    write_edge_list(g, directory / f"{r.graph_class}_n{r.n}_{tag}{i}.edges")
    if args.plot:
        render_figure(reports, args.plot)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    bounds = Bounds(threads=args.threads)
    if args.max_n is not None:
        bounds = bounds.capped(args.max_n)
    results = run_checks(bounds)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        timing = f" [{r.elapsed:.2f}s]" if args.timings else ""
        print(f"{r.name:<{width}}  {status}{timing}  {r.detail}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 2 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="totecc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_tau = sub.add_parser("tau", help="indices of one edge-list graph")
    p_tau.add_argument("input", help="edge-list file")
    p_tau.add_argument("--all", action="store_true", help="also print per-vertex eccentricities")
    p_tau.set_defaults(func=_cmd_tau)

    p_family = sub.add_parser("family", help="construct a named family member")
    p_family.add_argument("--name", required=True, choices=FAMILY_IDS)
    p_family.add_argument("--n", required=True, type=int, help="order of the graph")
    p_family.add_argument("--k", type=int, help="part size, where the family takes one")
    p_family.set_defaults(func=_cmd_family)

    p_rw = sub.add_parser("rewrite", help="run a tree rewrite and report the trace")
    p_rw.add_argument("--algorithm", required=True, type=int, choices=(1, 2, 3))
    p_rw.add_argument("input", help="edge-list file")
    p_rw.add_argument("--trace", help="write the full step trace to this file")
    p_rw.set_defaults(func=_cmd_rewrite)

    p_enum = sub.add_parser("enumerate", help="extremal scan report as CSV")
    p_enum.add_argument(
        "--class", dest="graph_class", default="all",
        choices=("tree", "unicyclic", "bicyclic", "conjugated-tree", "all"),
    )
    p_enum.add_argument("--min-n", type=int, default=4)
    p_enum.add_argument("--max-n", type=int, default=8)
    p_enum.add_argument("--out", help="CSV file (default: stdout)")
    p_enum.add_argument("--witness-dir", help="dump witness edge lists into this directory")
    p_enum.add_argument("--plot", help="render the tau envelope figure to this file")
    p_enum.add_argument("--threads", type=int, default=1)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run the full verification battery")
    p_verify.add_argument("--max-n", type=int, help="cap every per-check order bound")
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--timings", action="store_true", help="include per-check times")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
