"""Command-line entry point: constructions, isomorphism checks and verification suites."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .cayley import group_iso_small, read_cayley
from .graphs import encode_simple, graph_iso, multigraph_iso, read_graph, read_multigraph, write_graph, write_multigraph
from .group2graph import build_gamma
from .halgebra import build_graph_algebra, build_h_algebra, write_algebra
from .hgroup import HGroup, export_presentation
from .matrixwild import read_matrix_pair, simsim
from .modarith import check_prime
from .verify import SUITE_ORDER, run_suite, size_reports

EXIT_ISO = 0
EXIT_NOT_ISO = 1
EXIT_ERROR = 2


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _prime(text: str) -> int:
    try:
        return check_prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _format_map(forward: Sequence[int], names=None) -> str:
    name = names or (lambda i: str(i + 1))
    return " ".join(f"{name(i)}->{name(j)}" for i, j in enumerate(forward))


def cmd_graph2algebra(args) -> int:
    g = read_graph(_read(args.graph))
    build = build_h_algebra if args.kind == "lie" else build_graph_algebra
    sys.stdout.write(write_algebra(build(g, args.p)))
    return 0


def cmd_graph2group(args) -> int:
    g = read_graph(_read(args.graph))
    pres = export_presentation(HGroup(build_h_algebra(g, args.p)))
    sys.stdout.write(pres.to_gap())
    return 0


def cmd_group2graph(args) -> int:
    gamma = build_gamma(read_cayley(_read(args.table)))
    if args.simple:
        sys.stdout.write(write_graph(encode_simple(gamma)))
    else:
        sys.stdout.write(write_multigraph(gamma))
    return 0


def cmd_check_iso(args) -> int:
    a, b = _read(args.file1), _read(args.file2)
    if args.kind == "graph":
        x, y = read_graph(a), read_graph(b)
        witness = graph_iso(x, y)
        names = None
    elif args.kind == "multigraph":
        x, y = read_multigraph(a), read_multigraph(b)
        witness = multigraph_iso(x, y)
        names = x.name
    else:
        x, y = read_cayley(a), read_cayley(b)
        witness = group_iso_small(x, y)
        names = None
    if witness is None:
        print("not isomorphic")
        return EXIT_NOT_ISO
    print("isomorphic")
    print(_format_map(witness.forward, names))
    return EXIT_ISO


def cmd_simsim(args) -> int:
    x, y = read_matrix_pair(_read(args.file1)), read_matrix_pair(_read(args.file2))
    S = simsim(x, y)
    if S is None:
        print("not simultaneously similar")
        return EXIT_NOT_ISO
    print("simultaneously similar via")
    for row in S:
        print(" ".join(map(str, row)))
    return EXIT_ISO


def cmd_verify(args) -> int:
    if args.suite in ("sizes", "all"):
        for report in size_reports(max(args.max_n, 1), args.p):
            print(report.line())
    results = run_suite(args.suite, args)
    for r in results:
        print(r.line(), flush=True)
    passed = sum(r.ok for r in results)
    failed = len(results) - passed
    print(f"RESULT pass={passed} fail={failed}")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilgraph",
        description="Graphs, H-algebras, nilpotent p-groups and the reductions between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph2algebra", help="dump the algebra of a graph")
    p.add_argument("graph", help="graph file ('-' for stdin)")
    p.add_argument("--p", type=_prime, default=3, help="odd prime (default 3)")
    p.add_argument("--kind", choices=["lie", "commutative"], default="lie")
    p.set_defaults(func=cmd_graph2algebra)

    p = sub.add_parser("graph2group", help="print a presentation of the H-group of a graph")
    p.add_argument("graph")
    p.add_argument("--p", type=_prime, default=3)
    p.set_defaults(func=cmd_graph2group)

    p = sub.add_parser("group2graph", help="build the multigraph of a Cayley table")
    p.add_argument("table")
    p.add_argument("--simple", action="store_true", help="emit the simple-graph encoding instead")
    p.set_defaults(func=cmd_group2graph)

    p = sub.add_parser("check-iso", help="exit 0 if isomorphic (witness printed), 1 if not, 2 on error")
    p.add_argument("kind", choices=["graph", "multigraph", "group-small"])
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_check_iso)

    p = sub.add_parser("simsim", help="simultaneous similarity of two matrix pairs (n, p <= 3)")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_simsim)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=["all", *SUITE_ORDER])
    p.add_argument("--suite", dest="suite_flag", choices=["all", *SUITE_ORDER])
    p.add_argument("--p", type=_prime, default=3)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    if getattr(args, "suite_flag", None):
        args.suite = args.suite_flag
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
