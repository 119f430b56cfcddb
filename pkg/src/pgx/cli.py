"""Command line entry point: ``pgx count|lattice|verify|checks|goursat``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .group_core import GroupError
from .verifier.checks import UnknownCheckError, list_checks, run_check
from .verifier.commands import count_command, export_lattice, goursat_command
from .verifier.store import LatticeStore

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message short
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"pgx: error: {message}\n")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pgx", description="Subgroup counts of finite p-groups and checks over a group catalog.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="print s_k, c_k, delta_k of a group")
    c.add_argument("spec")
    c.add_argument("--json", action="store_true")

    lat = sub.add_parser("lattice", help="export the subgroup lattice as JSON")
    lat.add_argument("spec")
    lat.add_argument("--export", required=True, metavar="PATH")

    v = sub.add_parser("verify", help="run a registered check")
    v.add_argument("check_id")
    v.add_argument("--p", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--min-n", type=int)
    v.add_argument("--json", action="store_true")
    v.add_argument("--cache", metavar="DIR", help="directory for the on-disk lattice cache")
    v.add_argument("--experimental-p2", action="store_true")

    sub.add_parser("checks", help="list registered checks")

    g = sub.add_parser("goursat", help="list the Goursat quintuples of A x B")
    g.add_argument("spec_a")
    g.add_argument("spec_b")
    return ap


def _verify(args) -> int:
    store = LatticeStore(args.cache)
    report = run_check(
        args.check_id,
        p=args.p,
        max_n=args.max_n,
        min_n=args.min_n,
        experimental_p2=args.experimental_p2,
        store=store,
    )
    if args.json:
        _emit(report.to_dict())
    else:
        print(f"{report.check_id}: {report.status}  ({len(report.rows)} rows, {report.elapsed:.2f}s)")
        print(f"domain: {report.domain}")
        for note in report.notes:
            print(f"note: {note}")
        for row in report.rows:
            if not row.ok:
                print(f"FAIL {row.spec}: {row.quantity}: {row.lhs} vs {row.rhs} {row.note}".rstrip())
        for d in report.extra.get("discrepancies", []):
            print(f"discrepancy {d['spec']} m={d['m']}: displayed {d['paper_displayed']}, true {d['true']}")
        if report.witnesses:
            print("witnesses: " + ", ".join(report.witnesses))
    return report.exit_code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        if args.command == "count":
            obj, table = count_command(args.spec)
            if args.json:
                _emit(obj)
            else:
                print(table)
        elif args.command == "lattice":
            data = export_lattice(args.spec, args.export)
            print(f"wrote {len(data['subgroups'])} subgroups to {args.export}")
        elif args.command == "verify":
            return _verify(args)
        elif args.command == "checks":
            for check_id, desc, defaults in list_checks():
                extra = ", ".join(f"{k}={v}" for k, v in defaults.items())
                print(f"{check_id:<15} {desc}" + (f"  [{extra}]" if extra else ""))
        elif args.command == "goursat":
            _emit(goursat_command(args.spec_a, args.spec_b))
    except UnknownCheckError as exc:
        print(f"pgx: unknown check {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, OSError) as exc:
        print(f"pgx: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
