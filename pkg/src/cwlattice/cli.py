"""Command-line front end.

Subcommands: census, enumerate, verify, bounds, realize, recognize, ideal.
Exit codes: 0 success, 1 failed census/verification records, 2 argument or
input errors, 3 unsupported realization, 4 graph over the search cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .census import FAMILY_SETS, check_cross_projection, check_disjointness, run_census
from .errors import (
    ArityMismatchError,
    DomainError,
    EdgeListParseError,
    GraphTooLargeError,
)
from .formulas import ratio_report, sandwich_bounds_cwdd, size_cwdd
from .graphs import (
    RealizationKind,
    build_graph,
    edge_ideal_generators,
    format_edge_list,
    induced_matching_number,
    is_cameron_walker,
    is_connected,
    is_star,
    is_star_triangle,
    matching_number,
    parse_edge_list,
    realize,
    structure_vertex_names,
)
from .sets import NamedSet, enumerate_set

DEFAULT_CENSUS_CAP = 300
THREADS_ENV_VAR = "CW_CENSUS_THREADS"


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _frac_json(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def _census_workers() -> int | None:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return None
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        raise DomainError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    return workers


def cmd_census(args: argparse.Namespace) -> int:
    if args.n_lo < 3 or args.n_lo > args.n_hi:
        raise DomainError(f"need 3 <= FROM <= TO, got {args.n_lo}..{args.n_hi}")
    if args.n_hi > DEFAULT_CENSUS_CAP and not args.force:
        raise DomainError(
            f"census above n = {DEFAULT_CENSUS_CAP} is cubic-cost; pass --force to run it"
        )
    report = run_census(args.n_lo, args.n_hi, args.family, workers=_census_workers())
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    return 0 if report.all_pass else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    set_id = NamedSet(args.set)
    points = enumerate_set(set_id, args.n)
    if args.format == "csv":
        text = "".join(",".join(str(c) for c in p) + "\n" for p in points)
    else:
        import json

        text = json.dumps(
            {"set": set_id.value, "n": args.n, "points": [list(p) for p in points]},
            indent=2,
        ) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    n = args.n
    report = run_census(n, n, "all")
    record = report.records[0]
    print(f"n = {n} (k = {record.k}, i = {record.i})")
    ok = True
    for tag, (enum_count, closed_count) in record.counts.items():
        if enum_count is None:
            print(f"{tag}: undefined at n = {n}")
            continue
        mark = "ok" if enum_count == closed_count else "MISMATCH"
        ok &= enum_count == closed_count
        print(f"{tag}: enumerated {enum_count}, closed form {closed_count} [{mark}]")
    print(f"disjointness: {'ok' if record.disjointness_ok else 'FAIL'}")
    print(f"sandwich: {'ok' if record.sandwich_ok else 'FAIL'}")
    print(f"containment: {'ok' if record.containment_ok else 'FAIL'}")
    cross = check_cross_projection(n)
    print(f"cross-projection: {'ok' if cross else 'FAIL'}")
    if n >= 5:
        print(f"component overlaps: {'ok' if check_disjointness(n).ok else 'FAIL'}")
    verdict = record.passed and cross
    print(f"verdict: {'pass' if verdict else 'FAIL'}")
    return 0 if verdict else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    n = args.n
    lower, upper = sandwich_bounds_cwdd(n)
    ratios = ratio_report(n)
    if args.format == "json":
        import json

        print(json.dumps({
            "n": n,
            "size_cwdd": size_cwdd(n),
            "sandwich_lower": _frac_json(lower),
            "sandwich_upper": _frac_json(upper),
            "cwdd_over_cplus": _frac_json(ratios.cwdd_over_cplus),
            "cwdd_over_cminus": _frac_json(ratios.cwdd_over_cminus),
            "cwdd_over_nsq": _frac_json(ratios.cwdd_over_nsq),
        }, indent=2))
    else:
        print(f"n = {n}")
        print(f"size_cwdd = {size_cwdd(n)}")
        print(f"sandwich_lower = {lower}")
        print(f"sandwich_upper = {upper}")
        print(f"cwdd_over_cplus = {ratios.cwdd_over_cplus}")
        print(f"cwdd_over_cminus = {ratios.cwdd_over_cminus}")
        print(f"cwdd_over_nsq = {ratios.cwdd_over_nsq}")
    return 0


def cmd_realize(args: argparse.Namespace) -> int:
    result = realize(args.n, (args.depth, args.dim))
    if result.kind is RealizationKind.UNSUPPORTED:
        print(
            f"no supported realization of (depth, dim) = ({args.depth}, {args.dim}) "
            f"on {args.n} vertices",
            file=sys.stderr,
        )
        return 3
    cw = result.structure
    if args.format == "json":
        import json

        payload = {
            "kind": result.kind.value,
            "n": cw.vertex_count,
            "m": cw.m,
            "p": cw.p,
            "s": list(cw.s),
            "t": list(cw.t),
        }
        if args.emit_graph:
            graph = build_graph(cw)
            names = structure_vertex_names(cw)
            payload["edges"] = [
                [a, b] for a, b in
                sorted(tuple(sorted((names[u], names[v]))) for u, v in graph.edges)
            ]
        print(json.dumps(payload, indent=2))
    else:
        s_txt = ",".join(str(x) for x in cw.s)
        t_txt = ",".join(str(x) for x in cw.t)
        print(f"m={cw.m} p={cw.p} s={s_txt} t={t_txt}")
        if args.emit_graph:
            sys.stdout.write(format_edge_list(build_graph(cw), structure_vertex_names(cw)))
    return 0


def _not_cw_reason(graph) -> str:
    if not is_connected(graph):
        return "disconnected"
    if matching_number(graph) != induced_matching_number(graph):
        return "m≠im"
    if is_star(graph):
        return "star"
    if is_star_triangle(graph):
        return "star triangle"
    return ""


def cmd_recognize(args: argparse.Namespace) -> int:
    with open(args.input, encoding="utf-8") as handle:
        graph, _ = parse_edge_list(handle.read())
    m = matching_number(graph)
    im = induced_matching_number(graph)
    verdict = is_cameron_walker(graph)
    if args.format == "json":
        import json

        print(json.dumps({
            "cameron_walker": verdict,
            "matching_number": m,
            "induced_matching_number": im,
            "reason": None if verdict else _not_cw_reason(graph),
        }, indent=2))
    else:
        if verdict:
            print(f"CW: m={m} im={im}")
        else:
            print(f"not CW: m={m} im={im} ({_not_cw_reason(graph)})")
    return 0


def cmd_ideal(args: argparse.Namespace) -> int:
    with open(args.input, encoding="utf-8") as handle:
        graph, names = parse_edge_list(handle.read())
    generators = edge_ideal_generators(graph, names)
    if args.format == "json":
        import json

        print(json.dumps({"generators": [list(g) for g in generators]}, indent=2))
    else:
        for a, b in generators:
            print(f"{a}{b}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwlattice",
        description="Exact lattice-point censuses for Cameron-Walker edge ideals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="cross-verify enumerations against closed forms")
    p.add_argument("--from", dest="n_lo", type=int, required=True, metavar="N")
    p.add_argument("--to", dest="n_hi", type=int, required=True, metavar="M")
    p.add_argument("--family", choices=sorted(FAMILY_SETS), default="all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--force", action="store_true",
                   help=f"allow ranges past n = {DEFAULT_CENSUS_CAP}")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("enumerate", help="list the points of one lattice set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, choices=[s.value for s in NamedSet])
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run every check at a single n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="sandwich envelope and census ratios at n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("realize", help="realize a (depth, dim) point as a skeleton")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--emit-graph", action="store_true",
                   help="also print the built graph's edge list")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("recognize", help="decide the Cameron-Walker property")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("ideal", help="emit edge-ideal generators of a graph")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_ideal)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except GraphTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (DomainError, ArityMismatchError, EdgeListParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
