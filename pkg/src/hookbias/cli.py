"""``hookbias`` command line.

Exit codes: 0 success (including verified and evidence-only reports),
1 a violated report, 2 usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import genfuncs
from .census import census_refined, census_total, weighted_census
from .errors import DomainError, ExactnessError
from .partitions import hook_lengths, parse_partition, render_young
from .sylvester import PairPartition, phi, psi, sigma
from .verify import CONJECTURES, TARGETS, scan_conjecture, verify, verify_all


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _parse_L(text: str):
    if text.lower() in ("inf", "infinity", "none"):
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("L must be a positive integer or 'inf'")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(prog="hookbias", description="Hooks of length t in odd and distinct partitions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="coefficients of a named generating function")
    p.add_argument("name", help=", ".join(genfuncs.GF_NAMES))
    p.add_argument("--L", type=_parse_L)
    p.add_argument("--N", type=_nonneg, required=True)

    p = sub.add_parser("census", parents=[common], help="brute-force hook census")
    p.add_argument("side", choices=("odd", "distinct"))
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--L", type=_parse_L, default=None, help="bound, or 'inf' (default)")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--refined", action="store_true", help="count partitions by number m of 2-hooks")
    p.add_argument("--weight", choices=("m", "binom2"), help="collapse a refined table with this weight")

    p = sub.add_parser("sylvester", parents=[common], help="Sylvester's bijection")
    p.add_argument("direction", choices=("psi", "sigma"))
    p.add_argument("partition")

    p = sub.add_parser("phi", parents=[common], help="injection on pair partitions")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("pair", help='"pi1|pi2", e.g. "6,5|2"; "-" is the empty partition')

    p = sub.add_parser("hooks", parents=[common], help="hook lengths of a partition")
    p.add_argument("partition")
    p.add_argument("--render", action="store_true", help="draw the labelled Young diagram")

    p = sub.add_parser("verify", parents=[common], help="run a named check, or 'all'")
    p.add_argument("target", help=", ".join(list(TARGETS) + ["NO-z<k>", "all"]))
    for flag in ("--L-max", "--N", "--n-max", "--t-min", "--t-max", "--z-min", "--z-max"):
        p.add_argument(flag, type=int)
    p.add_argument("--form", choices=("quotient", "pair-sum"))
    p.add_argument("--threads", type=int, help="processes for 'all' (default: HOOKBIAS_THREADS or cores)")

    p = sub.add_parser("scan", parents=[common], help="scan a conjectured inequality")
    p.add_argument("target", choices=list(CONJECTURES))
    p.add_argument("--L-max", type=int, default=10)
    p.add_argument("--n-max", type=_nonneg, default=120)
    return parser


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_series(series, fmt) -> str:
    if fmt == "json":
        return json.dumps(series.to_dict())
    if fmt == "csv":
        return _csv(enumerate(series.to_dict()["coeffs"]), ["n", "value"])
    return "\n".join(f"{n:>4}  {c}" for n, c in enumerate(series.to_dict()["coeffs"]))


def _emit_report(report, fmt) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "csv":
        v = report.first_violation or {}
        return _csv([[report.target, report.status, v.get("L", ""), v.get("n", ""),
                      v.get("lhs", ""), v.get("rhs", "")]],
                     ["target", "status", "L", "n", "lhs", "rhs"])
    return report.summary()


def _emit_census(table, fmt, weight=None) -> str:
    if weight:
        values = weighted_census(table, weight)
        if fmt == "json":
            return json.dumps({"side": table.side, "L": table.L, "weight": weight, "values": values})
        rows = list(enumerate(values))
        if fmt == "csv":
            return _csv(rows, ["n", "value"])
        return "\n".join(f"{n:>4}  {v}" for n, v in rows)
    if fmt == "json":
        return json.dumps(table.to_dict())
    if fmt == "csv":
        return table.to_csv()
    if table.refined:
        return "\n".join(f"m={m:<3} n={n:<4} {v}" for m, n, v in table.rows())
    return "\n".join(f"{n:>4}  {v}" for n, v in table.rows())


def _run(args) -> tuple[str, int]:
    fmt = args.format
    if args.command == "expand":
        series = genfuncs.expand(args.name, args.L, args.N)
        return _emit_series(series, fmt), 0

    if args.command == "census":
        if args.weight and not args.refined:
            raise UsageError("--weight needs --refined")
        if args.refined:
            return _emit_census(census_refined(args.side, args.L, args.n_max), fmt, args.weight), 0
        return _emit_census(census_total(args.side, args.t, args.L, args.n_max), fmt), 0

    if args.command == "sylvester":
        pi = parse_partition(args.partition)
        out = psi(pi) if args.direction == "psi" else sigma(pi)
        if fmt == "json":
            return json.dumps({"input": list(pi), "output": list(out)}), 0
        return str(out), 0

    if args.command == "phi":
        if args.pair.count("|") != 1:
            raise UsageError('pair must look like "pi1|pi2"')
        left, right = args.pair.split("|")
        image = phi(args.L, PairPartition(parse_partition(left), parse_partition(right)))
        if fmt == "json":
            return json.dumps({"pi1": list(image.pi1), "pi2": list(image.pi2)}), 0
        return str(image), 0

    if args.command == "hooks":
        pi = parse_partition(args.partition)
        if fmt == "json":
            return json.dumps({"partition": list(pi), "hooks": hook_lengths(pi)}), 0
        if args.render:
            return render_young(pi, labels="hooks"), 0
        return "\n".join(" ".join(map(str, row)) for row in hook_lengths(pi)), 0

    if args.command == "verify":
        if args.target == "all":
            reports = verify_all(threads=args.threads)
            code = 1 if any(not r.ok for r in reports) else 0
            if fmt == "json":
                return json.dumps([r.to_dict() for r in reports]), code
            if fmt == "csv":
                return "".join(_emit_report(r, "csv").split("\n", 1)[1] if i else _emit_report(r, "csv")
                               for i, r in enumerate(reports)), code
            return "\n".join(r.summary() for r in reports), code
        names = {"L_max": args.L_max, "N": args.N, "n_max": args.n_max, "t_min": args.t_min,
                 "t_max": args.t_max, "z_min": args.z_min, "z_max": args.z_max, "form": args.form}
        params = {k: v for k, v in names.items() if v is not None}
        report = verify(args.target, **params)
        return _emit_report(report, fmt), 0 if report.ok else 1

    if args.command == "scan":
        report = scan_conjecture(args.target, args.L_max, args.n_max)
        return _emit_report(report, fmt), 0 if report.ok else 1

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _run(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, DomainError, ExactnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + ("" if text.endswith("\n") else "\n"))
    else:
        print(text.rstrip("\n"))
    return code


if __name__ == "__main__":
    sys.exit(main())
