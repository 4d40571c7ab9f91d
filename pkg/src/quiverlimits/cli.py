"""Command-line interface: ``quiverlimits {limit,bps,lattice,verify}``.

Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 method disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog, verify
from .bps import bps_table
from .closedform import RegularizationFailure, closed_limit
from .exact import rational_to_str
from .lattice import count_paths, weighted_count
from .series import QuiverSpec, SpecError, classical_limit_oracle

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_DISAGREE = 3


class BadInput(Exception):
    pass


def _load_spec(args) -> QuiverSpec:
    if args.case:
        try:
            return catalog.get_entry(args.case).spec
        except catalog.UnknownEntry as exc:
            raise BadInput(str(exc.args[0])) from None
    if not args.spec:
        raise BadInput("give a spec file or --case NAME")
    try:
        return QuiverSpec.load(args.spec)
    except OSError as exc:
        raise BadInput(f"cannot read spec: {exc}") from None
    except SpecError as exc:
        raise BadInput(f"malformed spec: {exc}") from None


def _caps(spec: QuiverSpec, cap):
    if any(n == 0 for n in spec.levels):
        if cap is None:
            raise BadInput("spec has a level-0 vertex; pass --vertex-cap")
        if cap < 0:
            raise BadInput("--vertex-cap must be nonnegative")
        return [cap if n == 0 else None for n in spec.levels]
    return None


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _render_series(series, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(series.to_json(), indent=2)
    terms = series.nonzero_terms()
    if fmt == "csv":
        header = [f"l{i + 1}" for i in range(series.m)] + ["value"]
        return _csv([header] + [list(l) + [rational_to_str(c)] for l, c in terms])
    lines = []
    for l, c in terms:
        mono = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(l) if e) or "1"
        lines.append(f"{mono}: {c}")
    return "\n".join(lines) + "\n"


def cmd_limit(args) -> tuple:
    spec = _load_spec(args)
    if args.max_degree < 0:
        raise BadInput("--max-degree must be nonnegative")
    caps = _caps(spec, args.vertex_cap)
    D = args.max_degree
    if args.method == "oracle":
        return _render_series(classical_limit_oracle(spec, D, caps), args.format), EXIT_OK
    try:
        closed = closed_limit(spec, D, caps)
    except RegularizationFailure as exc:
        raise BadInput(f"closed form failed: {exc}") from None
    if args.method == "closed":
        return _render_series(closed, args.format), EXIT_OK
    oracle = classical_limit_oracle(spec, D, caps)
    diffs = [(l, closed[l], oracle[l]) for l in oracle.window() if closed[l] != oracle[l]]
    for l, c, o in diffs:
        print(f"mismatch at {list(l)}: closed={c} oracle={o}", file=sys.stderr)
    return _render_series(oracle, args.format), EXIT_DISAGREE if diffs else EXIT_OK


def cmd_bps(args) -> tuple:
    spec = _load_spec(args)
    if args.max_order < 1:
        raise BadInput("--max-order must be positive")
    if any(n == 0 for n in spec.levels):
        raise BadInput("BPS numbers need every level to be positive")
    table = bps_table(spec, args.max_order)
    if args.format == "json":
        return json.dumps([rec.to_json() for rec in table], indent=2), EXIT_OK
    if args.format == "csv":
        rows = [["r", "a", "N", "integral"]]
        rows += [[rec.r, rational_to_str(rec.a), rational_to_str(rec.N), str(rec.integral).lower()] for rec in table]
        return _csv(rows), EXIT_OK
    lines = [f"{'r':>3} {'a_r':>14} {'N_r':>12}"]
    lines += [f"{rec.r:>3} {str(rec.a):>14} {str(rec.N):>12}" for rec in table]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_lattice(args) -> tuple:
    if min(args.a, args.b, args.n) < 0:
        raise BadInput("a, b and n must be nonnegative")
    if args.weighted:
        poly = weighted_count(args.a, args.b, args.n)
        if args.format == "json":
            out = {"a": args.a, "b": args.b, "n": args.n, "variable": "t=q^(1/2)", "weighted": poly.to_json()}
            return json.dumps(out), EXIT_OK
        if args.format == "csv":
            return _csv([["t_exponent", "coefficient"]] + [[e, rational_to_str(c)] for e, c in poly.items()]), EXIT_OK
        return f"{poly}\n", EXIT_OK
    count = count_paths(args.a, args.b, args.n)
    if args.format == "json":
        return json.dumps({"a": args.a, "b": args.b, "n": args.n, "count": count}), EXIT_OK
    if args.format == "csv":
        return _csv([["a", "b", "n", "count"], [args.a, args.b, args.n, count]]), EXIT_OK
    return f"{count}\n", EXIT_OK


def cmd_verify(args) -> tuple:
    if args.all:
        results = verify.run_all()
    elif args.case in catalog.NAMES:
        results = [verify.check_knot(args.case)]
    elif args.case in verify.SUITE:
        results = verify.SUITE[args.case]()
    else:
        known = ", ".join(list(catalog.NAMES) + list(verify.SUITE))
        raise BadInput(f"UnknownEntry: {args.case!r}; known: {known}")
    report = verify.summarize(results)
    code = EXIT_OK if report["passed"] else EXIT_FAIL
    if args.format == "json":
        return json.dumps(report, indent=2), code
    if args.format == "csv":
        rows = [["name", "status", "detail"]] + [[c["name"], c["status"], c["detail"]] for c in report["checks"]]
        return _csv(rows), code
    lines = [f"{c['status'].upper():4}  {c['name']}  ({c['detail']})" for c in report["checks"]]
    return "\n".join(lines) + "\n", code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="quiverlimits",
        description="Classical limits of quiver generating series, BPS-like numbers and lattice paths.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_args(p):
        p.add_argument("spec", nargs="?", help="quiver spec JSON file")
        p.add_argument("--case", help="use a catalog entry instead of a file")

    p = sub.add_parser("limit", parents=[common], help="coefficients of the classical limit y")
    spec_args(p)
    p.add_argument("--max-degree", type=int, default=4, help="weighted-degree bound D")
    p.add_argument("--method", choices=["closed", "oracle", "both"], default="both")
    p.add_argument("--vertex-cap", type=int, help="index cap for level-0 vertices")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("bps", parents=[common], help="log-derivative coefficients and BPS-like numbers")
    spec_args(p)
    p.add_argument("--max-order", type=int, default=4, help="largest x-degree R")
    p.set_defaults(func=cmd_bps)

    p = sub.add_parser("lattice", parents=[common], help="lattice paths under y = a x + b")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weighted", action="store_true", help="area-weighted count in t = q^(1/2)")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify", parents=[common], help="run regression checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--case", help="catalog knot or check-suite name")
    group.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "json")
    args.output = getattr(args, "output", None)
    try:
        text, code = args.func(args)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
