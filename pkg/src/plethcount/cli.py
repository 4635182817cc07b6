"""Command-line entry point: ``plethcount <subcommand> ...``.

Exit status: 0 on success, 1 when the paper-suite has a failing check,
2 when a guard is exceeded, a fit fails or the arguments are invalid,
3 when ``--verify`` finds a mismatch between the matrix count and the
plethysm oracle.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import ehrhart, matrices, orbits, oracle, suite
from .characters import character_table_csv, inner_product, irreducible_character
from .errors import ConsistencyError, FitError, GuardExceeded
from .partitions import Partition, partitions_of

EXIT_SUITE = 1
EXIT_GUARD = 2
EXIT_MISMATCH = 3
JSON_INT_LIMIT = 2**53


def parse_partition(text: str) -> Partition:
    """``"3,1,1"`` or the one-row shorthand ``"3"``."""
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
        return Partition(sorted(parts, reverse=True)) if parts else Partition([])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from exc


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def encode(x):
    """JSON-safe form: big ints as strings, non-integral rationals as ``"num/den"``."""
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return f"{x.numerator}/{x.denominator}"
        x = x.numerator
    if isinstance(x, bool) or not isinstance(x, int):
        return x
    return x if abs(x) < JSON_INT_LIMIT else str(x)


def key(p: Partition) -> str:
    return ",".join(map(str, p))


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _lambda_and_m(args) -> tuple[Partition, int]:
    if args.lam.size < 1:
        args.parser.error("lambda must be non-empty")
    return args.lam, args.m


# -- subcommands -------------------------------------------------------------


def cmd_sum(args) -> int:
    lam, m = _lambda_and_m(args)
    value = matrices.plethysm_sum(lam, m)
    print(value)
    if args.verify:
        expected = oracle.oracle_sum(lam, m)
        if expected != value:
            print(f"mismatch: oracle gives {expected}", file=sys.stderr)
            return EXIT_MISMATCH
    return 0


def cmd_oracle(args) -> int:
    lam, m = _lambda_and_m(args)
    res = oracle.plethysm_schur(lam, m)
    if args.sum_only:
        print(res.total)
        return 0
    if args.format == "csv":
        print(dump_csv(["nu", "multiplicity"], [[key(nu), a] for nu, a in res.items()]))
    elif args.format == "pretty":
        for nu, a in res.items():
            print(f"s_[{key(nu)}]  {a}")
        print(f"sum  {res.total}")
    else:
        print(dump_json({
            "lambda": list(lam),
            "m": m,
            "coefficients": {key(nu): encode(a) for nu, a in res.items()},
            "sum": encode(res.total),
        }))
    return 0


def cmd_nchar(args) -> int:
    f = matrices.n_class_function(args.n, args.m, threads=args.threads)
    if args.format == "csv":
        print(dump_csv(["rho", "count"], [[key(rho), v.numerator] for rho, v in f.items()]))
    elif args.format == "pretty":
        for rho, v in f.items():
            print(f"[{key(rho)}]  {v}")
    else:
        print(dump_json({key(rho): encode(v) for rho, v in f.items()}))
    return 0


def cmd_quasipoly(args) -> int:
    if (args.rho is None) == (args.lam is None):
        args.parser.error("give exactly one of --rho and --lambda")
    opts = dict(max_period=args.max_period, validation_points=args.validation_points)
    if args.rho is not None:
        q = ehrhart.fit(args.rho, **opts)
    else:
        fits = {rho: ehrhart.fit(rho, **opts) for rho in partitions_of(args.lam.size)}
        q = ehrhart.sum_quasipolynomial(args.lam, fits).reduced()
    if args.format == "pretty":
        for r, row in enumerate(q.coeffs):
            terms = " + ".join(f"({c})*m^{k}" for k, c in enumerate(row) if c) or "0"
            print(f"m = {r} mod {q.period}:  {terms}")
    else:
        print(dump_json(q.to_json()))
    return 0


def cmd_classes(args) -> int:
    n, m = args.n, args.m
    classes = orbits.orbit_classes(n, m, max_matrices=args.max_matrices)
    lams = partitions_of(n)
    out = []
    for c in classes:
        f = orbits.n_c_by_stabilizer(c)
        entry = {
            "canonical_rep": [x for row in c.canonical_rep for x in row],
            "orbit_size": encode(c.orbit_size),
            "stabilizer_size": encode(c.stabilizer_size),
            "transpose_fixed": c.transpose_fixed,
        }
        if m == 2:
            entry["lambda_C"] = list(orbits.m2_lambda(c))
        entry["inner_products"] = {key(lam): encode(inner_product(irreducible_character(lam), f)) for lam in lams}
        out.append(entry)
    if args.format == "csv":
        header = ["canonical_rep", "orbit_size", "stabilizer_size", "transpose_fixed"] + [key(l) for l in lams]
        rows = [
            [" ".join(map(str, e["canonical_rep"])), e["orbit_size"], e["stabilizer_size"], int(e["transpose_fixed"])]
            + [e["inner_products"][key(l)] for l in lams]
            for e in out
        ]
        print(dump_csv(header, rows))
    elif args.format == "pretty":
        fixed = sum(1 for e in out if e["transpose_fixed"])
        print(f"M({n},{m}): {len(out)} orbits, {fixed} transpose-fixed")
        for c, e in zip(classes, out):
            tag = "T" if c.transpose_fixed else " "
            print(f"{tag} {c.canonical_rep}  orbit={c.orbit_size}  stab={c.stabilizer_size}")
    else:
        print(dump_json(out))
    return 0


def cmd_foulkes(args) -> int:
    table = orbits.foulkes_table(args.n_max, args.m_max)
    cells = [c for _, c in sorted(table.items())]
    violations = orbits.foulkes_violations(table)
    if args.format == "csv":
        print(dump_csv(
            ["n", "m", "orbit_count", "character_count"],
            [[c.n, c.m, "" if c.orbit_count is None else c.orbit_count,
              "" if c.character_count is None else c.character_count] for c in cells],
        ))
    elif args.format == "pretty":
        for c in cells:
            value = "-" if not c.present else str(c.orbit_count)
            print(f"T({c.n},{c.m})/~ = {value}")
        print(f"n <= m with T(n,m) > T(m,n): {violations or 'none'}")
    else:
        print(dump_json({
            "cells": [
                {"n": c.n, "m": c.m, "orbit_count": c.orbit_count, "character_count": c.character_count}
                for c in cells
            ],
            "violations": [list(v) for v in violations],
        }))
    return 0 if all(c.routes_agree for c in cells if c.present) else EXIT_MISMATCH


def cmd_chartable(args) -> int:
    print(character_table_csv(args.n).rstrip("\n"))
    return 0


def cmd_paper_suite(args) -> int:
    opts = suite.SuiteOptions()
    if args.n_max is not None:
        opts.n_max = args.n_max
        opts.m2_n_max = args.n_max
        opts.counts_n_max = max(args.n_max, 1)
    if args.nm_max is not None:
        opts.nm_max = args.nm_max
    if args.extended:
        opts.theta_k = 8
    ok = suite.run(args.only, opts)
    print("ALL PASS" if ok else "FAILURES PRESENT")
    return 0 if ok else EXIT_SUITE


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethcount", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--threads", type=positive_int, default=1, help="worker processes")
    common.add_argument("--max-matrices", type=positive_int, default=matrices.DEFAULT_MAX_MATRICES)
    common.add_argument("--max-period", type=positive_int, default=ehrhart.DEFAULT_MAX_PERIOD)
    common.add_argument("--validation-points", type=positive_int, default=ehrhart.DEFAULT_VALIDATION_POINTS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", parents=[common], help="<chi^lambda, N^m>")
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--m", type=nonnegative_int, required=True)
    p.add_argument("--verify", action="store_true", help="compare with the plethysm oracle")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("oracle", parents=[common], help="Schur expansion of s_lambda[s_m]")
    p.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    p.add_argument("--m", type=positive_int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--full", action="store_true", help="all multiplicities and their sum (default)")
    g.add_argument("--sum-only", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("nchar", parents=[common], help="the class function N^m on S_n")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--m", type=nonnegative_int, required=True)
    p.set_defaults(func=cmd_nchar)

    p = sub.add_parser("quasipoly", parents=[common], help="fitted quasipolynomial in m")
    p.add_argument("--rho", type=parse_partition)
    p.add_argument("--lambda", dest="lam", type=parse_partition)
    p.set_defaults(func=cmd_quasipoly)

    p = sub.add_parser("classes", parents=[common], help="orbits of M(n,m) under row/column permutations")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--m", type=nonnegative_int, required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("foulkes", parents=[common], help="#T(n,m)/~ table by two routes")
    p.add_argument("--n-max", type=positive_int, default=4)
    p.add_argument("--m-max", type=positive_int, default=4)
    p.set_defaults(func=cmd_foulkes)

    p = sub.add_parser("chartable", parents=[common], help="character table of S_n as CSV")
    p.add_argument("--n", type=positive_int, required=True)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("paper-suite", parents=[common], help="run the verification battery")
    p.add_argument("--only", action="append", choices=list(suite.CHECKS), help="repeatable")
    p.add_argument("--n-max", type=positive_int)
    p.add_argument("--nm-max", type=positive_int)
    p.add_argument("--extended", action="store_true", help="theta identity up to k = 8")
    p.set_defaults(func=cmd_paper_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser
    try:
        return args.func(args)
    except (GuardExceeded, FitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ConsistencyError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
