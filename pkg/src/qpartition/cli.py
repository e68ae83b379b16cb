"""Command-line interface.

Subcommands: pmn, ps, durfee, andrews, eval, pn, pnseq, hrr, db build,
db info, verify.  Exit codes: 0 success, 1 domain/usage error, 2
integrity/certification error (including checksum corruption).
All standard output is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .discover import (
    GLOBAL_FIT,
    PER_COMPONENT,
    STRATEGIES,
    discover_durfee,
    discover_pmn,
    discover_ps,
)
from .errors import (
    CertificationError,
    DatabaseChecksumError,
    DomainError,
    IntegrityError,
    QPartitionError,
)
from .hrr import hrr_certified, hrr_partial_sum
from .oracles import denumerant_table, euler_partition_series
from .quasipoly import (
    eval_floor_form,
    format_floor_expression,
    format_quasipolynomial_sum,
    qps_values,
    to_floor_form,
)
from .store import (
    FormulaDatabase,
    build_database,
    eval_from_db,
    load_database,
    parse_count,
    save_database,
    _formula_to_obj,
    _record_to_obj,
)

DB_ENV_VAR = "QPARTITION_DB"


def _strategy_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--strategy",
        choices=STRATEGIES,
        default=PER_COMPONENT,
        help="fitting strategy (default: per_component)",
    )


def _format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )


def _db_arg(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument(
        "--db",
        default=os.environ.get(DB_ENV_VAR),
        required=required and DB_ENV_VAR not in os.environ,
        help=f"formula database path (default: ${DB_ENV_VAR})",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpartition",
        description="Discover, prove, store and evaluate quasi-polynomial "
        "formulas for restricted partition counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pmn", help="formula for partitions into at most m parts")
    p.add_argument("--m", type=int, required=True)
    _strategy_arg(p)
    _format_arg(p)

    p = sub.add_parser("ps", help="formula for partitions with parts from a multiset")
    p.add_argument("--parts", required=True, help="comma-separated parts, e.g. 1,2,2,5")
    _strategy_arg(p)
    _format_arg(p)

    p = sub.add_parser("durfee", help="formula for partitions with Durfee square size k")
    p.add_argument("--k", type=int, required=True)
    _strategy_arg(p)
    _format_arg(p)

    p = sub.add_parser("andrews", help="integer-part (floor) form of the p_m formula")
    p.add_argument("--m", type=int, required=True)
    _strategy_arg(p)
    _format_arg(p)

    p = sub.add_parser("eval", help="evaluate a stored formula at a huge argument")
    _db_arg(p, required=True)
    p.add_argument("--kind", choices=("pmn", "durfee"), required=True)
    p.add_argument("--m", type=int, help="parameter for kind pmn")
    p.add_argument("--k", type=int, help="parameter for kind durfee")
    p.add_argument("--n", required=True, help="argument: digits or 10^K")
    p.add_argument(
        "--digits-only",
        action="store_true",
        help="print only the number of decimal digits of the value",
    )

    p = sub.add_parser("pn", help="p(n) by the pentagonal recurrence")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("pnseq", help="p(0..n), one value per line")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("hrr", help="p(n) by the Hardy-Ramanujan-Rademacher series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--terms", type=int, help="partial sum with this many terms")
    p.add_argument("--digits", type=int, help="working precision for the partial sum")

    p = sub.add_parser("db", help="formula database management")
    db_sub = p.add_subparsers(dest="db_command", required=True)

    b = db_sub.add_parser("build", help="discover and store formulas for 1..max")
    b.add_argument("--kind", choices=("pmn", "durfee"), required=True)
    b.add_argument("--max", type=int, required=True)
    b.add_argument("--out", required=True, help="database path (resumable)")
    _strategy_arg(b)
    b.add_argument("--jobs", type=int, default=1, help="parallel discovery workers")

    i = db_sub.add_parser("info", help="summarize a database file")
    _db_arg(i, required=True)

    p = sub.add_parser("verify", help="check formulas against the counting oracle")
    _db_arg(p)
    p.add_argument("--kind", choices=("pmn", "durfee"), required=True)
    p.add_argument("--max-param", type=int, required=True)
    p.add_argument("--max-n", type=int, default=500)
    return parser


def _emit_formula(record, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_record_to_obj(record), sort_keys=True, indent=2))
    else:
        print(format_quasipolynomial_sum(record.formula))


def _parse_parts(text: str) -> list[int]:
    try:
        parts = [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise DomainError(f"cannot parse parts list {text!r}")
    if not parts:
        raise DomainError("the parts list is empty")
    return parts


def _require_db(path: str | None) -> FormulaDatabase:
    if not path:
        raise DomainError(f"no database path given (flag --db or ${DB_ENV_VAR})")
    return load_database(path)


def _cmd_eval(args) -> int:
    db = _require_db(args.db)
    if args.kind == "pmn":
        if args.m is None:
            raise DomainError("eval --kind pmn requires --m")
        parameter = args.m
    else:
        if args.k is None:
            raise DomainError("eval --kind durfee requires --k")
        parameter = args.k
    value = eval_from_db(db, args.kind, parameter, args.n)
    if args.digits_only:
        print(len(str(value)) if value != 0 else 1)
    else:
        print(value)
    return 0


def _cmd_verify(args) -> int:
    if args.max_param < 1:
        raise DomainError("--max-param must be >= 1")
    db = load_database(args.db) if args.db else None
    failures = 0
    for parameter in range(1, args.max_param + 1):
        record = db.get(args.kind, parameter) if db is not None else None
        if record is None:
            record = (
                discover_pmn(parameter)
                if args.kind == "pmn"
                else discover_durfee(parameter)
            )
        if args.kind == "pmn":
            expected = denumerant_table(range(1, parameter + 1), args.max_n)
        else:
            parts = [i for i in range(1, parameter + 1) for _ in range(2)]
            block = denumerant_table(parts, max(args.max_n - parameter**2, 0))
            expected = [
                block[n - parameter**2] if n >= parameter**2 else 0
                for n in range(args.max_n + 1)
            ]
        got = qps_values(record.formula, args.max_n + 1)
        bad = [n for n, (a, b) in enumerate(zip(got, expected)) if a != b]
        label = f"{args.kind} {parameter}"
        if bad:
            failures += 1
            print(f"{label}: MISMATCH at n={bad[0]} (and {len(bad) - 1} more)")
        else:
            print(f"{label}: OK for n <= {args.max_n}")
    if failures:
        raise IntegrityError(f"{failures} formula(s) disagree with the oracle")
    return 0


def _run(args) -> int:
    if args.command == "pmn":
        _emit_formula(discover_pmn(args.m, args.strategy), args.format)
    elif args.command == "ps":
        _emit_formula(discover_ps(_parse_parts(args.parts), args.strategy), args.format)
    elif args.command == "durfee":
        _emit_formula(discover_durfee(args.k, args.strategy), args.format)
    elif args.command == "andrews":
        record = discover_pmn(args.m, args.strategy)
        floor_form = to_floor_form(record.formula)
        if args.format == "json":
            obj = {
                "kind": "pmn-floor",
                "parameters": args.m,
                "terms": [
                    {
                        "period": r,
                        "rho_polys": [
                            [f"{c.numerator}/{c.denominator}" for c in poly.coeffs]
                            for poly in rho_polys
                        ],
                    }
                    for r, rho_polys in floor_form.terms
                ],
            }
            print(json.dumps(obj, sort_keys=True, indent=2))
        else:
            print(format_floor_expression(floor_form))
    elif args.command == "eval":
        return _cmd_eval(args)
    elif args.command == "pn":
        if args.n < 0:
            raise DomainError("n must be >= 0")
        print(euler_partition_series(args.n)[args.n])
    elif args.command == "pnseq":
        if args.n < 0:
            raise DomainError("n must be >= 0")
        for value in euler_partition_series(args.n):
            print(value)
    elif args.command == "hrr":
        if args.terms is not None or args.digits is not None:
            if args.terms is None or args.digits is None:
                raise DomainError("give both --terms and --digits, or neither")
            print(str(hrr_partial_sum(args.n, args.terms, args.digits)))
        else:
            print(hrr_certified(args.n))
    elif args.command == "db":
        if args.db_command == "build":
            db = build_database(
                args.kind,
                args.max,
                strategy=args.strategy,
                path=args.out,
                progress=lambda i: print(f"{args.kind} {i} done", file=sys.stderr),
                jobs=args.jobs,
            )
            print(f"{args.out}: {len(db.records)} records")
        elif args.db_command == "info":
            db = _require_db(args.db)
            print(f"format version: {db.version}")
            print(f"records: {len(db.records)}")
            for kind in ("pmn", "durfee", "pS"):
                params = db.parameters_for(kind)
                if params:
                    rendered = ", ".join(str(p) for p in params)
                    print(f"{kind}: {rendered}")
    elif args.command == "verify":
        return _cmd_verify(args)
    return 0


def main(argv: list[str] | None = None) -> int:
    # Stored formulas evaluate to integers with thousands of digits; lift
    # CPython's int-to-str conversion cap so they can be printed.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(2_000_000)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; the contract reserves 2 for
        # integrity failures, so usage problems map to 1.
        return 0 if exc.code in (0, None) else 1
    try:
        return _run(args)
    except (IntegrityError, CertificationError, DatabaseChecksumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QPartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
