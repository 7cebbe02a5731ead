"""Command-line interface.

Subcommands: count, map, classify, enumerate, verify, render. Matchings are
read from stdin (or --in FILE) in any of the supported formats; counts print
as bare decimal integers. Exit codes: 0 success, 1 domain errors (not L & P,
not a representative, enumeration cap), 2 usage or input-parse errors.
"""

import argparse
import sys
from typing import Optional

from .core import InvalidMatchingError, crossings, is_noncrossing, lr_sequence, stats
from .lp import enumerate_lp, is_lp, lp_count_formula
from .bijections import (
    NotLPError,
    NotRepresentativeError,
    phi,
    phi_inv,
    sigma,
    sigma_inv,
    tau,
    tau_inv,
)
from .similarity import census, ns_stream
from .enumeration import (
    EnumerationCapError,
    all_matchings,
    catalan,
    double_factorial,
    ncn_elements,
    noncrossing_matchings,
)
from .formats import (
    FORMATS,
    ParseError,
    emit_matching,
    emit_ncn,
    parse_input,
    parse_ncn,
)
from .render import RenderSpec, render
from .verify import SUITES, run_suite

__all__ = ["build_parser", "run", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchbij",
        description="Complete matchings: statistics, L & P recognition, and "
        "the bijections to nesting-class representatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print an exact count")
    p.add_argument("what", choices=["matchings", "noncrossing", "lp", "classes", "ncn"])
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--brute", action="store_true",
                   help="count by exhaustive enumeration instead of the closed form")

    p = sub.add_parser("map", help="apply a bijection to stdin")
    p.add_argument("which", choices=["phi", "phi-inv", "tau", "tau-inv",
                                     "sigma", "sigma-inv"])
    p.add_argument("--in", dest="infile", metavar="FILE")
    p.add_argument("--format", choices=FORMATS, default="pairs",
                   help="output format for plain matchings (default pairs)")

    p = sub.add_parser("classify", help="report the statistics of a matching")
    p.add_argument("--in", dest="infile", metavar="FILE")

    p = sub.add_parser("enumerate", help="stream a whole family")
    p.add_argument("family", choices=["all", "noncrossing", "lp", "ns"])
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--format", choices=FORMATS, default="partner")

    p = sub.add_parser("verify", help="run exhaustive invariant suites")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")

    p = sub.add_parser("render", help="draw an arc diagram")
    p.add_argument("--in", dest="infile", metavar="FILE")
    p.add_argument("--format", choices=["text", "svg"], default="text")
    p.add_argument("--labels", action="store_true", help="draw edge labels")
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)

    return parser


def _read_input(infile: Optional[str]) -> str:
    if infile:
        with open(infile, "r", encoding="utf-8") as handle:
            return handle.read()
    return sys.stdin.read()


def _cmd_count(args) -> int:
    n = args.n
    if args.what == "matchings":
        value = (sum(1 for _ in all_matchings(n)) if args.brute
                 else double_factorial(2 * n - 1))
    elif args.what == "noncrossing":
        value = (sum(1 for _ in noncrossing_matchings(n)) if args.brute
                 else catalan(n))
    elif args.what == "lp":
        value = (sum(1 for _ in enumerate_lp(n)) if args.brute
                 else lp_count_formula(n))
    elif args.what == "classes":
        value = census(n)[0] if args.brute else lp_count_formula(n)
    else:  # ncn has no separate closed form; it is always enumerated
        value = sum(1 for _ in ncn_elements(n))
    sys.stdout.write(f"{value}\n")
    return 0


def _cmd_map(args) -> int:
    text = _read_input(args.infile)
    which = args.which
    if which in ("phi-inv", "tau"):
        triple = parse_ncn(text)
        result = phi_inv(triple) if which == "phi-inv" else tau(triple)
        sys.stdout.write(emit_matching(result, args.format))
        return 0
    m = parse_input(text)
    if which == "phi":
        sys.stdout.write(emit_ncn(phi(m)))
    elif which == "tau-inv":
        sys.stdout.write(emit_ncn(tau_inv(m)))
    elif which == "sigma":
        sys.stdout.write(emit_matching(sigma(m), args.format))
    else:
        sys.stdout.write(emit_matching(sigma_inv(m), args.format))
    return 0


def _cmd_classify(args) -> int:
    m = parse_input(_read_input(args.infile))
    st = stats(m)
    lines = [
        f"noncrossing: {str(is_noncrossing(m)).lower()}",
        f"lp: {str(is_lp(m)).lower()}",
        f"ne: {st.ne}",
        f"cr: {st.cr}",
        f"lr: {lr_sequence(m)}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_enumerate(args) -> int:
    streams = {
        "all": all_matchings,
        "noncrossing": noncrossing_matchings,
        "lp": enumerate_lp,
        "ns": ns_stream,
    }
    first = True
    for m in streams[args.family](args.n):
        if args.format == "pairs" and not first:
            sys.stdout.write("\n")
        sys.stdout.write(emit_matching(m, args.format))
        first = False
    return 0


def _cmd_verify(args) -> int:
    failures = 0
    for name, ok, detail in run_suite(args.n, args.suite):
        if ok:
            sys.stdout.write(f"PASS {name}: {detail}\n")
        else:
            sys.stdout.write(f"FAIL {name}: {detail}\n")
            failures += 1
    return 1 if failures else 0


def _cmd_render(args) -> int:
    m = parse_input(_read_input(args.infile))
    spec = RenderSpec(format=args.format, width=args.width, height=args.height,
                      labels=args.labels)
    sys.stdout.write(render(m, spec))
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "map": _cmd_map,
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def run(argv: Optional[list[str]] = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BrokenPipeError:
        return 0
    except (NotLPError, NotRepresentativeError, EnumerationCapError,
            InvalidMatchingError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
