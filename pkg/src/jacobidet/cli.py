"""Deterministic command-line front end.

Subcommands:
  verify    run verification suites over all prime powers up to a bound
  det       one Jacobi-sum matrix determinant by one or all engines
  jacobi    one exact Jacobi sum plus its complex approximation
  table     exploration sweep over the open determinant problems
  selftest  module-level property suites

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
parameter error.  verify output on stdout is byte-deterministic for fixed
arguments (sorted case order, fixed key order, no timestamps); the human
summary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import explorer, selftest
from .detengine import det_bareiss, det_crt_integer, det_float_check
from .finite_field import field_for_order, prime_power_split
from .theorems import SUITES, build_Jqk, run_suites


def _err(msg: str) -> int:
    print(f"jacobidet: {msg}", file=sys.stderr)
    return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobidet",
        description="Exact Jacobi-sum matrix determinants and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--q-max", type=int, required=True,
                          help="largest prime power / scale to verify")
    p_verify.add_argument("--suite", default="all", choices=SUITES + ("all",))
    p_verify.add_argument("--format", default="json", choices=("json", "csv", "table"))
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="worker processes (output is identical for any value)")

    p_det = sub.add_parser("det", help="determinant of one Jacobi-sum matrix")
    p_det.add_argument("--q", type=int, required=True)
    p_det.add_argument("--k", type=int, required=True)
    p_det.add_argument("--method", default="all",
                       choices=("bareiss", "crt", "float", "all"))

    p_jac = sub.add_parser("jacobi", help="one exact Jacobi sum")
    p_jac.add_argument("--q", type=int, required=True)
    p_jac.add_argument("--i", type=int, required=True)
    p_jac.add_argument("--j", type=int, required=True)
    p_jac.add_argument("--field-info", action="store_true",
                       help="include the field's diagnostic dump in the output")

    p_tab = sub.add_parser("table", help="exploration sweep with cache and CSV export")
    p_tab.add_argument("--q-max", type=int, required=True)
    p_tab.add_argument("--k", type=int, default=None,
                       help="restrict the sweep to one k value")
    p_tab.add_argument("--greene", action="store_true",
                       help="also tabulate character-binomial determinants")
    p_tab.add_argument("--out", required=True, help="CSV output path")
    p_tab.add_argument("--cache", default=None,
                       help="cache path (default: $JACOBIDET_CACHE or ./jacobidet_cache.jsonl)")

    sub.add_parser("selftest", help="run the module property suites")
    return parser


def _validate_q(q: int) -> int | None:
    split = prime_power_split(q)
    if split is None:
        return None
    return q


def _cmd_verify(args) -> int:
    if args.q_max < 2:
        return _err(f"--q-max must be at least 2, got {args.q_max}")
    if args.jobs < 1:
        return _err("--jobs must be positive")
    reports = run_suites(args.suite, args.q_max, jobs=args.jobs)
    if args.format == "json":
        for report in reports:
            print(json.dumps(report.to_json()))
    elif args.format == "csv":
        print("check_id,params,expected,computed,status")
        for r in reports:
            params = json.dumps(r.params, sort_keys=True).replace('"', "'")
            print(f'{r.check_id},"{params}","{r.expected}","{r.computed}",{r.status}')
    else:
        for r in reports:
            params = json.dumps(r.params, sort_keys=True)
            print(f"{r.status.upper():7s} {r.check_id:24s} {params}")
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        counts[r.status] += 1
    print(f"verified: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['skipped']} skipped", file=sys.stderr)
    for r in reports:
        if r.status == "fail":
            print(f"FAIL {r.check_id} {json.dumps(r.params, sort_keys=True)}: "
                  f"expected {r.expected}, computed {r.computed}", file=sys.stderr)
    return 0 if counts["fail"] == 0 else 1


def _cmd_det(args) -> int:
    if _validate_q(args.q) is None:
        return _err(f"{args.q} is not a prime power")
    if args.q < 3:
        return _err("det needs q >= 3")
    if args.k < 1 or (args.q - 1) % args.k != 0:
        return _err(f"k={args.k} does not divide q-1={args.q - 1}")
    mat = build_Jqk(field_for_order(args.q), args.k)
    out: dict = {"q": args.q, "k": args.k}
    exit_code = 0
    if args.method in ("bareiss", "all"):
        det = det_bareiss(mat)
        value = det.as_int()
        out["bareiss"] = {"value": None if value is None else str(value),
                          "method": "bareiss",
                          "certificate": {} if value is not None
                          else {"nonrational": det.to_json()}}
    if args.method in ("crt", "all"):
        out["crt"] = det_crt_integer(mat).to_json()
    if args.method in ("float", "all"):
        out["float"] = det_float_check(mat).to_json()
    if args.method == "all":
        bare = out["bareiss"]["value"]
        crt = out["crt"]["value"]
        flo = out["float"]["value"]
        agree = bare is not None and bare == crt and (flo is None or flo == bare)
        out["agree"] = agree
        exit_code = 0 if agree else 1
    print(json.dumps(out))
    return exit_code


def _cmd_jacobi(args) -> int:
    if _validate_q(args.q) is None:
        return _err(f"{args.q} is not a prime power")
    if args.q < 3:
        return _err("jacobi needs q >= 3")
    from .characters import jacobi_sum
    from .cyclotomic import to_complex

    field = field_for_order(args.q)
    value = jacobi_sum(field, args.i, args.j)
    approx, radius = to_complex(value)
    out = {
        "q": args.q,
        "i": args.i % (args.q - 1),
        "j": args.j % (args.q - 1),
        "value": value.to_json(),
        "approx": {"re": approx.real, "im": approx.imag, "radius": radius},
    }
    if args.field_info:
        out["field"] = field.to_json()
    print(json.dumps(out))
    return 0


def _cmd_table(args) -> int:
    if args.q_max < 3:
        return _err("--q-max must be at least 3")
    if args.k is not None and args.k < 1:
        return _err("--k must be positive")
    k_filter = None if args.k is None else (args.k,)
    records = explorer.explore_Jqk(range(3, args.q_max + 1), k_filter,
                                   cache=args.cache)
    if args.greene:
        for q in range(3, args.q_max + 1):
            if prime_power_split(q) is None:
                continue
            records.append(explorer.explore_greene(q, explorer.GREENE_FULL,
                                                   cache=args.cache))
            if q % 2 == 1 and q >= 5:
                records.append(explorer.explore_greene(q, explorer.GREENE_EVEN,
                                                       cache=args.cache))
    explorer.export_csv(records, args.out)
    errors = 0
    for record, notes in explorer.match_closed_forms(records):
        if "error" in record:
            errors += 1
            print(f"q={record['q']} k={record['k']}: error {record['error']}")
        elif notes:
            det = record["det"]
            det_str = det if isinstance(det, str) else "cyclotomic"
            print(f"q={record['q']} k={record['k']}: det={det_str} [{', '.join(notes)}]")
        else:
            size = record["m"]
            status = "rational" if record.get("rational") else "irrational"
            inv = "galois-invariant" if record.get("galois_invariant") else "not invariant"
            print(f"q={record['q']} {record['k']}: size={size} {status}, {inv}")
    print(f"wrote {len(records)} records to {args.out}", file=sys.stderr)
    return 1 if errors else 0


def _cmd_selftest(_args) -> int:
    results = selftest.run_all()
    failed = False
    for name, failures in results:
        if failures:
            failed = True
            print(f"FAIL {name}: {len(failures)} failures")
            for f in failures[:10]:
                print(f"  {f}")
        else:
            print(f"ok {name}")
    return 1 if failed else 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "det":
            return _cmd_det(args)
        if args.command == "jacobi":
            return _cmd_jacobi(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "selftest":
            return _cmd_selftest(args)
    except ValueError as exc:
        return _err(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
