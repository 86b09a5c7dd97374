"""Command line: ``jacobikit check``, ``jacobikit print`` and ``jacobikit fixtures``."""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import JacobikitError
from .load import FIXTURES, StructureFile, bundled_fixtures, load, loads
from .run import OPS, run

EXIT_OK, EXIT_FAIL, EXIT_LOAD = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_LOAD, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jacobikit", description="Check Jacobi, Poisson and Nijenhuis structures exactly.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = sub.add_parser("check", help="run the checks of a structure file")
    c.add_argument("file")
    c.add_argument("--out", help="write the JSON report here instead of stdout")
    c.add_argument("--kmax", type=int, default=3, help="default k_max for checks that take one (default 3)")
    c.add_argument("--jobs", type=int, default=1, help="worker threads (report order is unaffected)")
    c.add_argument("--no-timing", action="store_true", help="omit the timing_ms section")
    pr = sub.add_parser("print", help="echo the canonical form of every named object")
    pr.add_argument("file")
    f = sub.add_parser("fixtures", help="list bundled fixtures")
    f.add_argument("--path", action="store_true", help="print the fixture directory")
    return p


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _print_objects(sf: StructureFile) -> str:
    lines = [f"chart: ({', '.join(sf.chart.names)})"]
    for name, obj in sf.objects.items():
        lines.append(f"{sf.kinds[name]} {name} = {obj}")
    for c in sf.checks:
        lines.append(f"check {c.name}: {c.op} {json.dumps(c.args, ensure_ascii=False, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixtures":
        sys.stdout.write(f"{FIXTURES}\n" if args.path else "".join(f"{n}\n" for n in bundled_fixtures()))
        return EXIT_OK
    try:
        sf = load(args.file)
    except (JacobikitError, ValueError) as exc:
        sys.stderr.write(f"jacobikit: {type(exc).__name__}: {exc}\n")
        return EXIT_LOAD
    if args.command == "print":
        sys.stdout.write(_print_objects(sf))
        return EXIT_OK
    if args.jobs < 1 or args.kmax < 1:
        sys.stderr.write("jacobikit: --jobs and --kmax must be positive\n")
        return EXIT_LOAD
    report = run(sf, jobs=args.jobs, kmax=args.kmax, timing=not args.no_timing)
    text = dumps(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report["summary"]
    return EXIT_OK if s["fail"] == 0 and s["error"] == 0 else EXIT_FAIL


__all__ = ["OPS", "StructureFile", "bundled_fixtures", "dumps", "load", "loads", "main", "run"]
