"""Command-line front end.

Exit status: 0 on success, 1 when a check or verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .core import ParkplaneError, label_to_str
from .factory import from_multigraph, g_shi, k_shi, parse_edge_list
from .parking import enumerate_g_parking, violating_subset
from .plot import plot_svg
from .regions import enumerate_regions
from .verify import verify_bijectivity_kshi, verify_surjectivity
from .walk import NotGParking, find_region


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text, path=None):
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _subset_str(subset):
    return "{" + ",".join(map(str, subset)) + "}"


def cmd_regions(args):
    arr = io.parse_arrangement(_read(args.file))
    _emit(io.write_regions(enumerate_regions(arr), args.format))
    return 0


def cmd_labels(args):
    arr = io.parse_arrangement(_read(args.file))
    for label, count in io.label_table(enumerate_regions(arr)):
        print(f"{label_to_str(label)}\t{count}")
    return 0


def cmd_gpf(args):
    G = io.parse_multigraph(_read(args.file))
    for f in enumerate_g_parking(G):
        print(label_to_str(f))
    return 0


def cmd_check(args):
    G = io.parse_multigraph(_read(args.file))
    f = io.parse_parkvec(args.f)
    bad = violating_subset(G, f)
    if bad is None:
        print(f"{label_to_str(f)} is G-parking")
        return 0
    print(f"NOT G-parking, violating I={_subset_str(bad)}")
    return 1


def cmd_find(args):
    arr = io.parse_arrangement(_read(args.file))
    f = io.parse_parkvec(args.f)
    try:
        region, trace = find_region(arr, f)
    except NotGParking as exc:
        print(f"NOT G-parking, violating I={_subset_str(exc.subset)}")
        return 1
    _emit(io.write_regions([region], args.format))
    for step, h in enumerate(trace, 1):
        print(f"step {step}\t{h}")
    return 0


def cmd_shi(args):
    _emit(io.write_arrangement(k_shi(args.n, args.k)), args.output)
    return 0


def cmd_gshi(args):
    _emit(io.write_arrangement(g_shi(args.n, parse_edge_list(args.edges))), args.output)
    return 0


def cmd_graph2arr(args):
    G = io.parse_multigraph(_read(args.file))
    _emit(io.write_arrangement(from_multigraph(G)), args.output)
    return 0


def cmd_verify(args):
    arr = io.parse_arrangement(_read(args.file))
    report = verify_surjectivity(arr)
    if args.format == "json":
        _emit(io.write_report(report, "json"))
    else:
        print(report.summary())
    return 0 if report.ok else 1


def cmd_verify_shi(args):
    report = verify_bijectivity_kshi(args.n, args.k)
    if args.format == "json":
        _emit(io.write_report(report, "json"))
    else:
        print(report.summary())
    return 0 if report.ok else 1


def cmd_plot(args):
    arr = io.parse_arrangement(_read(args.file))
    _emit(plot_svg(arr, with_labels=args.labels), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="parkplane",
        description="Regions, Pak-Stanley labels and G-parking functions of difference arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["tsv", "json"], default="tsv")

    p = sub.add_parser("regions", help="list every region with its label and a witness point")
    p.add_argument("file")
    fmt(p)
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("labels", help="label -> number of regions")
    p.add_argument("file")
    p.set_defaults(func=cmd_labels)

    p = sub.add_parser("gpf", help="enumerate G-parking functions of a multigraph")
    p.add_argument("file")
    p.set_defaults(func=cmd_gpf)

    p = sub.add_parser("check", help="test one function against a multigraph")
    p.add_argument("file")
    p.add_argument("-f", required=True, help="comma-separated values, e.g. 2,1,0")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("find", help="walk to a region with the given label")
    p.add_argument("file")
    p.add_argument("-f", required=True)
    fmt(p)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("shi", help="write the shifted k-Shi arrangement")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_shi)

    p = sub.add_parser("gshi", help="write the shifted G-Shi arrangement")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-e", "--edges", required=True, help="edges like 1-2,2-3")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gshi)

    p = sub.add_parser("graph2arr", help="default arrangement for a multigraph")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph2arr)

    p = sub.add_parser("verify", help="check the labeling is onto the G-parking functions")
    p.add_argument("file")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-shi", help="check the k-Shi labeling is a bijection")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_verify_shi)

    p = sub.add_parser("plot", help="SVG drawing (n = 3 only)")
    p.add_argument("file")
    p.add_argument("--labels", action="store_true")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParkplaneError, OSError, ValueError) as exc:
        print(f"parkplane: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
