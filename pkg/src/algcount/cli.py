"""Command-line front end.

Usage:
  algcount count --p 2 --e 1 --n 2
  algcount count --p 2 --n 2 --filter commutative --format text
  algcount fixdim-table --p 3 --n 2 --format csv
  algcount verify --p 2 --n 2 --all-filters
  algcount transversal --p 2 --n 2 --out reps.json

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments,
3 budget exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import report as rp
from .burnside import DEFAULT_FILTER_BUDGET, count_algebras, count_filtered
from .errors import AlgCountError, BudgetExceeded, InvariantViolation
from .field import make_field
from .group import DEFAULT_GROUP_BUDGET, GroupSpec
from .oracle import DEFAULT_ORACLE_BUDGET, DEFAULT_WORK_BUDGET, oracle_count_orbits, oracle_transversal
from .tensor import PREDICATES, TRIVIAL_PREDICATES

EXIT_OK, EXIT_MISMATCH, EXIT_ARGS, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _fraction(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"expected a fraction in [0, 1], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="field characteristic")
    common.add_argument("--e", type=_positive, default=1, help="extension degree (q = p^e)")
    common.add_argument("--n", type=_positive, required=True, help="algebra dimension")
    common.add_argument("--filter", choices=sorted(PREDICATES) + sorted(TRIVIAL_PREDICATES),
                        help="count only algebras with this property")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--shards", type=_positive, default=1)
    common.add_argument("--budget-group", type=_positive, default=DEFAULT_GROUP_BUDGET,
                        help="max q^(n^2) candidate matrices")
    common.add_argument("--budget-oracle", type=_positive, default=DEFAULT_ORACLE_BUDGET,
                        help="max q^(n^3) tensors for the brute-force oracle")
    common.add_argument("--budget-work", type=_positive, default=DEFAULT_WORK_BUDGET,
                        help="max tensors x group elements for the oracle")
    common.add_argument("--budget-filter", type=_positive, default=DEFAULT_FILTER_BUDGET,
                        help="max fixed tensors enumerated per class when filtering")
    common.add_argument("--validate", type=_fraction, default=0.0,
                        help="fraction of group elements whose fix_dim is recomputed directly")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="algcount",
        description="Count isomorphism classes of n-dimensional algebras over F_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[common], help="orbit count via Burnside")
    sub.add_parser("fixdim-table", parents=[common], help="per-class fixpoint dimensions")
    verify = sub.add_parser("verify", parents=[common], help="Burnside vs brute-force oracle")
    verify.add_argument("--all-filters", action="store_true",
                        help="also compare every registered predicate")
    sub.add_parser("transversal", parents=[common], help="one algebra per isomorphism class")
    return parser


def _compute_report(args, spec: GroupSpec):
    if args.filter:
        return count_filtered(spec, args.filter, shards=args.shards, budget=args.budget_filter)
    return count_algebras(spec, shards=args.shards, validate_fraction=args.validate)


def _render_report(args, report) -> str:
    if args.format == "json":
        return rp.report_to_json(report)
    if args.format == "csv":
        return rp.classes_to_csv(report)
    return rp.report_to_text(report)


def _render_table(args, report) -> str:
    if args.format == "json":
        return rp.dumps(rp.fixdim_table_to_dict(report))
    if args.format == "csv":
        return rp.classes_to_csv(report)
    return rp.fixdim_table_to_text(report)


def _verify(args, ctx, spec):
    names = [args.filter] if args.filter else [None]
    if args.all_filters:
        names = [None] + sorted(PREDICATES)
    oracle_kw = dict(shards=args.shards, budget=args.budget_oracle, work_budget=args.budget_work)
    checks = []
    for name in names:
        if name is None:
            burnside = count_algebras(spec, shards=args.shards,
                                      validate_fraction=args.validate).orbit_count
        else:
            burnside = count_filtered(spec, name, shards=args.shards,
                                      budget=args.budget_filter).orbit_count
        oracle = oracle_count_orbits(ctx, spec.n, name, **oracle_kw)
        checks.append({"filter": name, "burnside": str(burnside), "oracle": str(oracle),
                       "agree": burnside == oracle})
    ok = all(c["agree"] for c in checks)
    result = {"p": ctx.p, "e": ctx.e, "q": ctx.q, "n": spec.n, "agree": ok, "checks": checks}
    if args.format == "json":
        text = rp.dumps(result)
    elif args.format == "csv":
        text = "filter,burnside,oracle,agree\n" + "".join(
            f"{c['filter'] or ''},{c['burnside']},{c['oracle']},{c['agree']}\n" for c in checks)
    else:
        text = "".join(
            f"{c['filter'] or 'all algebras':<20} burnside={c['burnside']} "
            f"oracle={c['oracle']} {'agree' if c['agree'] else 'MISMATCH'}\n"
            for c in checks)
    return text, (EXIT_OK if ok else EXIT_MISMATCH)


def _transversal(args, ctx, spec):
    reps = oracle_transversal(ctx, spec.n, shards=args.shards,
                              budget=args.budget_oracle, work_budget=args.budget_work)
    if args.format == "json":
        return rp.dumps(rp.transversal_to_dict(ctx, spec.n, reps))
    if args.format == "csv":
        return rp.transversal_to_csv(ctx, spec.n, reps)
    return rp.transversal_to_text(ctx, spec.n, reps)


def write_output(text: str, path: str | None):
    """Write to stdout, or atomically to ``path`` via a temp file and rename."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".algcount-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(args) -> int:
    ctx = make_field(args.p, args.e)
    spec = GroupSpec(ctx, args.n, budget=args.budget_group)
    code = EXIT_OK
    if args.command == "count":
        text = _render_report(args, _compute_report(args, spec))
    elif args.command == "fixdim-table":
        text = _render_table(args, _compute_report(args, spec))
    elif args.command == "verify":
        text, code = _verify(args, ctx, spec)
    else:
        text = _transversal(args, ctx, spec)
    write_output(text, args.out)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except BudgetExceeded as exc:
        print(f"algcount: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"algcount: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (AlgCountError, ValueError) as exc:
        print(f"algcount: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
