"""Command-line front end: ``torusfill {classify,canopy,phenomena,line,survey}``.

Exit codes: 0 success, 2 invalid input, 3 inadmissible knot without ``--force``.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .canopy import build_canopy, canopy_for_exterior
from .phenomena import report, survey
from .slope import enumerate_line, parse_slope
from .torus_knot import InadmissibleKnot, TorusKnot, admissibility, moser_classify

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INADMISSIBLE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _slope_arg(text):
    try:
        return parse_slope(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def _non_negative(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torusfill", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def knot_args(p, slope_required=True):
        p.add_argument("-p", type=int, required=True)
        p.add_argument("-q", type=int, required=True)
        if slope_required:
            p.add_argument("--slope", type=_slope_arg, required=True, help="filling slope r/s")
        p.add_argument("--force", action="store_true", help="proceed for inadmissible knots")
        p.add_argument("--json", action="store_true")

    knot_args(sub.add_parser("classify", help="identify the filled manifold"))

    p = sub.add_parser("canopy", help="canopy of the oriented Heegaard tree")
    knot_args(p, slope_required=False)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--slope", type=_slope_arg, help="filling slope r/s")
    where.add_argument("--exterior", action="store_true", help="canopy of the knot exterior")
    p.add_argument("--dot", type=Path, metavar="PATH", help="write DOT to PATH")
    p.add_argument("--expand-chain", action="store_true")

    knot_args(sub.add_parser("phenomena", help="per-slope phenomena report"))

    p = sub.add_parser("line", help="slopes meeting ALPHA exactly once")
    p.add_argument("--alpha", type=_slope_arg, required=True)
    p.add_argument("--height", type=_positive, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("survey", help="tabulate all slopes in a box")
    knot_args(p, slope_required=False)
    p.add_argument("--rmax", type=_positive, required=True)
    p.add_argument("--smax", type=_non_negative, required=True)
    p.add_argument("--csv", type=Path, metavar="PATH", help="write the table to PATH")
    return parser


def _knot(args, out_err, check=True):
    K = TorusKnot(args.p, args.q)
    adm = admissibility(K)
    if check and not adm.ok and not args.force:
        raise InadmissibleKnot(K, adm)
    return K


def _classify(args, out, err):
    K = TorusKnot(args.p, args.q)
    M = moser_classify(K, args.slope)
    out.write((M.to_json() if args.json else str(M)) + "\n")
    adm = admissibility(K)
    if not adm.ok and not args.force:
        # the classification itself holds for every torus knot
        raise InadmissibleKnot(K, adm)
    return EXIT_OK


def _canopy(args, out, err):
    K = _knot(args, err)
    if args.exterior:
        g = canopy_for_exterior(K, force=True)
    else:
        g = build_canopy(K, args.slope, force=True, expand_chain=args.expand_chain)
    if args.dot is not None:
        args.dot.write_text(g.to_dot())
    if args.json:
        out.write(g.to_json())
    elif args.dot is None:
        out.write(g.to_dot())
    else:
        out.write(f"{g.case.value if g.case else 'exterior'}: "
                  f"{len(g.vertices)} vertices, {len(g.edges)} edges -> {args.dot}\n")
    return EXIT_OK


def _phenomena(args, out, err):
    K = _knot(args, err)
    rep = report(K, args.slope, force=True)
    out.write((rep.to_json() if args.json else str(rep)) + "\n")
    return EXIT_OK


def _line(args, out, err):
    slopes = enumerate_line(args.alpha, args.height)
    if args.json:
        out.write(json.dumps([str(b) for b in slopes]) + "\n")
    else:
        out.write("".join(f"{b}\n" for b in slopes))
    return EXIT_OK


def _survey(args, out, err):
    K = _knot(args, err)
    sv = survey(K, args.rmax, args.smax, force=True)
    if args.csv is not None:
        args.csv.write_text(sv.to_csv())
    if args.json:
        out.write(sv.to_jsonl())
        out.write(json.dumps({"histogram": sv.histogram}) + "\n")
        return EXIT_OK
    if args.csv is None:
        out.write(sv.to_csv())
    out.write(sv.histogram_text())
    return EXIT_OK


_COMMANDS = {
    "classify": _classify,
    "canopy": _canopy,
    "phenomena": _phenomena,
    "line": _line,
    "survey": _survey,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out, err)
    except _UsageError as exc:
        err.write(f"torusfill: error: {exc}\n")
        return EXIT_INVALID
    except InadmissibleKnot as exc:
        err.write(f"torusfill: {exc}; pass --force to proceed\n")
        return EXIT_INADMISSIBLE
    except ValueError as exc:
        err.write(f"torusfill: invalid input: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
