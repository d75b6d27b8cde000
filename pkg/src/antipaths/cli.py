"""Command-line front end.

Exit codes: 0 success/Found, 1 parse or usage errors, 2 NotGuaranteed,
3 HypothesisViolation, 4 oracle budget exhausted.  Stress modes exit 1 on
any property failure and write a replayable bundle per failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .alternating import Orientation
from .certificates import (
    CertificateError,
    certificate_for_outcome,
    format_certificate,
    load_certificate,
    verify_certificate,
)
from .driver import EmptyGraph, Found, NotGuaranteed, UnsupportedK, find_antipath, find_antipath_dense
from .generators import gen_cycle_blowup, gen_random, gen_tournament_union
from .graphio import GraphParseError, format_graph, load_graph, save_graph, to_dot
from .graphs import GraphError, degree_profile
from .oracle import DEFAULT_BUDGET, longest_antipath
from .report import render_figures, write_tsv
from .rotation import HypothesisViolation
from .stress import run_dense, run_exhaustive_n5, run_random_tournaments

ORIENTATION_FLAGS = [o.value for o in Orientation]


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def cmd_find(args) -> int:
    try:
        graph = load_graph(args.graph)
    except (GraphParseError, OSError) as exc:
        return _fail(str(exc))
    orient = Orientation.from_flag(args.orientation)
    try:
        if args.dense:
            outcome = find_antipath_dense(graph, args.k, orient)
        else:
            outcome = find_antipath(graph, args.k, orient)
    except (UnsupportedK, EmptyGraph, GraphError) as exc:
        return _fail(str(exc))
    cert = certificate_for_outcome(graph, args.k, orient, outcome)
    text = format_certificate(cert)
    sys.stdout.write(text)
    if args.output:
        Path(args.output).write_text(text)
    if isinstance(outcome, Found):
        return 0
    if isinstance(outcome, NotGuaranteed):
        return 2
    return 3


def cmd_verify(args) -> int:
    try:
        graph = load_graph(args.graph)
        cert = load_certificate(args.certificate)
    except (GraphParseError, CertificateError, OSError) as exc:
        return _fail(str(exc))
    try:
        verify_certificate(graph, cert)
    except CertificateError as exc:
        return _fail(str(exc))
    print(f"ok: {cert.kind} on {len(cert.vertices)} vertices verified")
    return 0


def cmd_oracle(args) -> int:
    try:
        graph = load_graph(args.graph)
    except (GraphParseError, OSError) as exc:
        return _fail(str(exc))
    result = longest_antipath(graph, budget=args.budget)
    prof = degree_profile(graph)
    print(f"vertices {graph.n}  edges {len(graph.edges)}")
    print(f"delta0 {prof.delta0}  pseudo_delta0 {prof.pseudo_delta0}")
    print(f"max_length {result.max_length}  exact {str(result.exact).lower()}")
    if result.witness is not None:
        print("witness " + " ".join(str(v) for v in result.witness.verts))
    for orient in Orientation:
        print(f"max_{orient.value} {result.per_orientation[orient]}")
    if args.report:
        rows = [
            {
                "orientation": orient.value,
                "max_length": result.per_orientation[orient],
                "exact": result.exact,
            }
            for orient in Orientation
        ]
        write_tsv(rows, ["orientation", "max_length", "exact"], args.report)
    if not result.exact:
        print(f"budget {args.budget} exhausted after {result.expansions} expansions", file=sys.stderr)
        return 4
    return 0


def cmd_gen(args) -> int:
    try:
        if args.kind == "tournament-union":
            graph = gen_tournament_union(args.k, args.copies)
        elif args.kind == "blowup":
            graph = gen_cycle_blowup(args.ell, args.class_size)
        elif args.kind == "random-tournament":
            graph = gen_random(args.n, "tournament", args.seed)
        else:
            graph = gen_random(args.n, "oriented", args.seed, p=args.p)
    except GraphError as exc:
        return _fail(str(exc))
    text = format_graph(graph)
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}: {graph.kind} {graph.n} {len(graph.edges)}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_dot(args) -> int:
    try:
        graph = load_graph(args.graph)
    except (GraphParseError, OSError) as exc:
        return _fail(str(exc))
    text = to_dot(graph)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _write_bundles(report, outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for idx, failure in enumerate(report.failures):
        bundle = outdir / f"{report.mode}-failure-{idx:03d}"
        bundle.mkdir(parents=True, exist_ok=True)
        save_graph(failure.graph, bundle / "graph.txt")
        k = failure.find_args.get("k", "?")
        orient = failure.find_args.get("orientation", Orientation.FORWARD_FIRST.value)
        dense = " --dense" if failure.find_args.get("dense") else ""
        (bundle / "repro.txt").write_text(
            f"{failure.description}\n"
            f"replay: antipaths find graph.txt -k {k} --orientation {orient}{dense}\n"
        )


def cmd_stress(args) -> int:
    if args.mode == "exhaustive-n5":
        report = run_exhaustive_n5(limit=args.limit)
    elif args.mode == "random-tournaments":
        report = run_random_tournaments(n=args.n, trials=args.trials, seed=args.seed)
    else:
        report = run_dense(n=args.n, k=args.k, trials=args.trials, seed=args.seed)
    for key, value in report.summary.items():
        print(f"{key} {value}")
    if args.report:
        path = write_tsv(report.rows, report.columns, args.report)
        print(f"rows {path}")
    if args.figures:
        for fig in render_figures(report, args.figures):
            print(f"figure {fig}")
    if report.failures:
        _write_bundles(report, Path(args.bundle_dir))
        print(
            f"FAIL: {len(report.failures)} failure(s); bundles under {args.bundle_dir}",
            file=sys.stderr,
        )
        return 1
    if report.violations_seen != report.violations_honest:
        print("FAIL: dishonest violation recorded", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antipaths",
        description="Find, verify, and stress-test alternating paths in oriented graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", help="search for an alternating path of length k")
    p.add_argument("graph", help="graph file")
    p.add_argument("-k", type=int, required=True, help="requested path length (edges)")
    p.add_argument(
        "--orientation",
        choices=ORIENTATION_FLAGS,
        default=Orientation.FORWARD_FIRST.value,
        help="whether the first edge leaves or enters the first vertex",
    )
    p.add_argument("--dense", action="store_true", help="use the edge-density route (peel first)")
    p.add_argument("-o", "--output", help="also write the certificate to this file")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive longest-alternating-path search")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node-expansion limit")
    p.add_argument("--report", help="write the per-orientation table as TSV")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate instance files")
    gsub = p.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("tournament-union", help="disjoint rotational regular tournaments")
    g.add_argument("--k", type=int, required=True, help="odd tournament size")
    g.add_argument("--copies", type=int, default=1)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("blowup", help="directed-cycle blow-up")
    g.add_argument("--ell", type=int, required=True, help="cycle length >= 3")
    g.add_argument("-s", "--class-size", type=int, required=True, dest="class_size")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("random-tournament")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("random-oriented")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("stress", help="property-check the guarantees at scale")
    ssub = p.add_subparsers(dest="mode", required=True)

    def add_common(sp):
        sp.add_argument("--report", help="write per-trial rows as TSV")
        sp.add_argument("--figures", help="directory for summary figures (PNG)")
        sp.add_argument("--bundle-dir", default="stress-bundles", help="failure bundle directory")
        sp.set_defaults(func=cmd_stress)

    s = ssub.add_parser("exhaustive-n5", help="sweep all oriented graphs on 5 vertices")
    s.add_argument("--limit", type=int, default=None, help="stop after this many graphs")
    add_common(s)
    s = ssub.add_parser("random-tournaments")
    s.add_argument("--n", type=int, default=21)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    add_common(s)
    s = ssub.add_parser("dense")
    s.add_argument("--n", type=int, default=40)
    s.add_argument("--k", type=int, default=8)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    add_common(s)

    p = sub.add_parser("dot", help="export a graph file as DOT")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
