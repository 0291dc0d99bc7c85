"""Command-line interface: ``qsphere normalize | projector | pair | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .bundles import PairingNotIntegerError, Side, build, chern_pairing
from .exactq import render_ratq
from .ncalg import render_ncpoly
from .parsing import ParseError, parse_expr
from .verify import ALL_CHECKS, UsageError, VerifyConfig, render_text, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _mu_range(text: str):
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational P/Q, got {text!r}")


def _checks(text: str):
    items = [c.strip() for c in text.split(",") if c.strip()]
    if items == ["all"]:
        return ALL_CHECKS
    bad = [c for c in items if c not in ALL_CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {', '.join(ALL_CHECKS)}")
    return tuple(items)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qsphere", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"qsphere {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    n = sub.add_parser("normalize", help="print the PBW normal form of an expression")
    n.add_argument("expr")

    for name, help_ in (("projector", "print e_mu (left) or f_mu (right)"), ("pair", "Chern-Connes pairing of a projector")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--mu", type=int, required=True)
        s.add_argument("--side", choices=[x.value for x in Side], default="left")
        s.add_argument("--format", choices=["text", "json"], default="text")
        s.add_argument("--output", help="write to this file instead of stdout")

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--mu-range", type=_mu_range, default=(-4, 4), metavar="A..B")
    v.add_argument("--checks", type=_checks, default=ALL_CHECKS, metavar="LIST", help=f"comma list from {','.join(ALL_CHECKS)} (default all)")
    v.add_argument("--q-numeric", type=_fraction, default=None, metavar="P/Q")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=500, help="random cases per rewriting suite")
    v.add_argument("--timing", action="store_true", help="include per-suite timings (makes output non-reproducible)")
    v.add_argument("--output", help="write the report to this file instead of stdout")
    return p


def _fix_negative_values(argv: Sequence[str]) -> List[str]:
    # argparse reads "-4..4" as an option; glue it to its flag
    out, it = [], iter(argv)
    for a in it:
        if a == "--mu-range":
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_normalize(expr: str) -> str:
    return render_ncpoly(parse_expr(expr)) + "\n"


def cmd_projector(mu: int, side: str, fmt: str) -> str:
    x = build(mu, Side(side))
    cells = [[render_ncpoly(v) for v in row] for row in x.entries]
    if fmt == "json":
        return json.dumps({"mu": mu, "side": side, "size": x.size, "entries": cells}, indent=2) + "\n"
    lines = [f"{'e' if x.side is Side.LEFT else 'f'}_{mu} ({side}, {x.size}x{x.size})"]
    for i, row in enumerate(cells):
        for j, c in enumerate(row):
            lines.append(f"[{i},{j}] {c}")
    return "\n".join(lines) + "\n"


def cmd_pair(mu: int, side: str, fmt: str) -> str:
    rep = chern_pairing(build(mu, Side(side)))
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2) + "\n"
    lines = [f"mu={mu} side={side}", f"rank  (tau0): {rep.rank}", f"chern (tau1): {rep.chern}"]
    for m, v in rep.terms.items():
        lines.append(f"  zeta-degree {m}: {render_ratq(v)}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = _fix_negative_values(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "normalize":
        try:
            _emit(cmd_normalize(args.expr), None)
        except ParseError as e:
            print(f"qsphere: syntax error: {e}", file=sys.stderr)
            print(f"  {args.expr}\n  {' ' * e.pos}^", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK

    if args.command == "projector":
        _emit(cmd_projector(args.mu, args.side, args.format), args.output)
        return EXIT_OK

    if args.command == "pair":
        try:
            _emit(cmd_pair(args.mu, args.side, args.format), args.output)
        except PairingNotIntegerError as e:
            print(f"qsphere: {e}", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK

    lo, hi = args.mu_range
    try:
        cfg = VerifyConfig(
            mu_min=lo,
            mu_max=hi,
            checks=args.checks,
            q_numeric=args.q_numeric,
            format=args.format,
            seed=args.seed,
            random_cases=args.cases,
            timing=args.timing,
        )
    except UsageError as e:
        print(f"qsphere: {e}", file=sys.stderr)
        return EXIT_USAGE
    report = run_verify(cfg)
    _emit(report.dumps() if cfg.format == "json" else render_text(report), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
