"""Command line: ``modvoa verify | dims | classify``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .report import Report
from .scalars import Prime
from .suites import SUITES, RunConfig, classify_table, dims_table, run_suites


def _chi(text: str) -> dict:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise argparse.ArgumentTypeError(f"expected name=value, got {item!r}")
        out[name.strip()] = int(value)
    return out


def _prime(text: str) -> Prime:
    try:
        return Prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_prime, default=Prime(3), help="odd prime (default 3)")
    common.add_argument("--algebra", choices=["virasoro", "sl2", "custom"], default="virasoro")
    common.add_argument("--c", type=int, default=0, help="Virasoro central charge")
    common.add_argument("--level", type=int, default=0, help="affine level")
    common.add_argument("--mu", type=int, default=0, help="p-character value for I_mu")
    common.add_argument("--chi", type=_chi, default={}, help="p-character for J_chi, e.g. e=1,h=2")
    common.add_argument("--max-degree", type=int, default=9)
    common.add_argument("--output", choices=["text", "json", "csv"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--structure-file", default=None, help="JSON structure constants")

    parser = argparse.ArgumentParser(prog="modvoa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    sub.add_parser("dims", parents=[common], help="graded dimensions of V, the ideal, V0, J and L")
    sub.add_parser("classify", parents=[common], help="irreducible modules of the p-center quotient")
    return parser


def _config(args) -> RunConfig:
    algebra = args.algebra
    if args.structure_file and algebra == "virasoro":
        raise ValueError("--structure-file needs --algebra sl2 or custom")
    return RunConfig(p=args.p, algebra=algebra, c=args.c, level=args.level, mu=args.mu,
                     chi=args.chi, max_degree=args.max_degree,
                     suite=getattr(args, "suite", "all"), output=args.output, seed=args.seed,
                     structure_file=args.structure_file)


def render_reports(reports: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"reports": [r.to_dict() for r in reports]}, indent=2, ensure_ascii=False)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "status", "check", "params"])
        for r in reports:
            for c in r.checks:
                writer.writerow([r.suite, c.status, c.name, json.dumps(c.params, ensure_ascii=False)])
        return buf.getvalue().rstrip("\n")
    return "\n\n".join(r.to_text() for r in reports)


def parse_reports(text: str) -> list:
    return [Report.from_dict(d) for d in json.loads(text)["reports"]]


def render_table(table: dict, fmt: str) -> str:
    cols = table["columns"]
    if fmt == "json":
        return json.dumps(table, indent=2, ensure_ascii=False)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in table["rows"]:
            writer.writerow([json.dumps(row[c]) if isinstance(row[c], list) else row[c] for c in cols])
        return buf.getvalue().rstrip("\n")
    cells = [[str(row[c]) for c in cols] for row in table["rows"]]
    widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    lines.append(f"params: {json.dumps(table['params'], ensure_ascii=False)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"modvoa: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "verify":
        reports = run_suites(cfg)
        print(render_reports(reports, cfg.output))
        return 0 if all(r.ok for r in reports) else 1
    try:
        table = dims_table(cfg) if args.command == "dims" else classify_table(cfg)
    except ValueError as exc:
        print(f"modvoa: error: {exc}", file=sys.stderr)
        return 2
    if args.command == "dims" and not table["ideal_graded"] and cfg.output == "text":
        print("note: the ideal is not graded; its column counts the top-degree filtration",
              file=sys.stderr)
    print(render_table(table, cfg.output))
    return 0


if __name__ == "__main__":
    sys.exit(main())
