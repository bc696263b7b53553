"""Command-line interface.

Subcommands mirror the library layers: ``digits``/``runs`` expose the
streams, ``count``/``casecount`` the window counters, ``weight`` the
weighting function, and ``verify``/``converge``/``probe-pure`` the
experiment suites.  All configuration is via flags; exit code 0 means every
requested check passed.
"""

from __future__ import annotations

import argparse
import sys

from .counting import count_abelian, count_c10_only, count_d10_only, count_exact
from .digitstream import ChampernowneStream, SigmaChampernowneStream, binary_runs, get_stream
from .experiments import (
    CSV_HEADER,
    convergence_table,
    pure_abelian_probe,
    records_to_csv,
    verify_boundary_sorting,
    verify_examples,
    verify_identity,
)
from .weighting import pure_weight, weight


def _grid(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError("grid entries must be integers")
    if not values:
        raise argparse.ArgumentTypeError("grid must not be empty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise argparse.ArgumentTypeError("grid must be strictly increasing")
    return values


def _patterns(text: str) -> list[str]:
    values = [part for part in text.split(",") if part]
    if not values:
        raise argparse.ArgumentTypeError("need at least one pattern")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelnorm",
        description="Champernowne digit streams, abelian counting, and "
        "abelian-normality experiments for the run-sorted variant d10.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", help="print a digit window of a stream")
    p.add_argument("--source", choices=("c10", "d10"), required=True)
    p.add_argument("--start", type=int, required=True, help="1-indexed start position")
    p.add_argument("--len", dest="length", type=int, required=True)

    p = sub.add_parser("runs", help="print maximal binary runs as CSV lines")
    p.add_argument("--source", choices=("c10", "d10"), default="c10")
    p.add_argument("--n", type=int, required=True, help="report runs intersecting 1..n")

    p = sub.add_parser("count", help="count pattern windows in a stream prefix")
    p.add_argument("--source", choices=("c10", "d10"), required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "abelian"), required=True)

    p = sub.add_parser(
        "casecount",
        help="count run-sorting correction windows over c10 "
        "(c: kept in c10 only, d: gained in d10 only)",
    )
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--which", choices=("c", "d"), required=True)
    p.add_argument(
        "--literal-inequality",
        action="store_true",
        help="read the d-side 'differs from the pattern' condition as string "
        "inequality instead of multiset inequality",
    )

    p = sub.add_parser("weight", help="evaluate the weighting function for a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument(
        "--estimate-n",
        type=int,
        default=100_000,
        help="cutoff used to estimate the mixed-pattern correction term",
    )

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("examples", "boundary", "identity"), required=True)
    p.add_argument("--pattern", default="4501140", help="pattern for the identity suite")
    p.add_argument("--n", type=int, default=50_000, help="cutoff for the identity suite")
    p.add_argument("--samples", type=int, default=10_000, help="boundary suite sample count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--literal-inequality", action="store_true")
    p.add_argument(
        "--no-snap",
        action="store_true",
        help="do not move identity cutoffs to the nearest non-binary digit",
    )

    p = sub.add_parser("converge", help="weighted abelian frequency table")
    p.add_argument("--source", choices=("c10", "d10"), required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--grid", type=_grid, required=True, help="comma-separated cutoffs")
    p.add_argument("--weight", choices=("auto", "pure"), default="auto")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out", help="CSV output path (stdout when omitted)")

    p = sub.add_parser(
        "probe-pure",
        help="d10 frequencies under the permutation-count weight (evidence only)",
    )
    p.add_argument("--patterns", type=_patterns, required=True)
    p.add_argument("--grid", type=_grid, required=True)
    p.add_argument("--out", help="CSV output path (stdout when omitted)")

    return parser


def _write_records(records, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            records_to_csv(records, fh)
    else:
        records_to_csv(records, sys.stdout)


def _cmd_verify(args) -> int:
    c10 = ChampernowneStream()
    d10 = SigmaChampernowneStream(c10)
    if args.suite == "examples":
        report = verify_examples(c10=c10, d10=d10)
        for check in report.checks:
            tag = "PASS" if check.passed else "FAIL"
            print(f"{tag}: {check.name}: expected {check.expected!r}, got {check.actual!r}")
        for note in report.notes:
            print(f"note: {note}")
        return 0 if report.passed else 1
    if args.suite == "boundary":
        report = verify_boundary_sorting(args.samples, seed=args.seed, c10=c10, d10=d10)
        if report.passed:
            print(f"PASS: {report.checked} sampled windows satisfy all four "
                  "boundary-sorting count relations")
            return 0
        for line in report.violations:
            print(f"FAIL: {line}")
        return 1
    reports = verify_identity(
        args.pattern,
        [args.n],
        literal_inequality=args.literal_inequality,
        snap=not args.no_snap,
        c10=c10,
        d10=d10,
    )
    ok = True
    for r in reports:
        tag = "PASS" if r.mismatch == 0 else "FAIL"
        ok = ok and r.mismatch == 0
        print(
            f"{tag}: identity for {r.pattern} at n={r.n} (requested {args.n}): "
            f"lhs={r.lhs} rhs={r.rhs} mismatch={r.mismatch}"
        )
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "digits":
        if args.start < 1 or args.length < 1:
            print("start and len must be positive", file=sys.stderr)
            return 2
        stream = get_stream(args.source)
        print(stream.prefix(args.start + args.length - 1)[args.start - 1 :])
        return 0

    if args.command == "runs":
        stream = get_stream(args.source)
        for run in binary_runs(stream, args.n):
            print(f"{run.start},{run.length},{run.zeros},{run.ones}")
        return 0

    if args.command == "count":
        stream = get_stream(args.source)
        counter = count_exact if args.mode == "exact" else count_abelian
        print(counter(stream, args.pattern, args.n))
        return 0

    if args.command == "casecount":
        if args.which == "c":
            print(count_c10_only(args.pattern, args.n))
        else:
            print(
                count_d10_only(
                    args.pattern, args.n, literal_inequality=args.literal_inequality
                )
            )
        return 0

    if args.command == "weight":
        value = weight(args.pattern, tol=args.tol, estimate_n=args.estimate_n)
        err = "" if value.abs_error is None else repr(value.abs_error)
        est = "" if value.estimator_n is None else value.estimator_n
        print(f"{value.value},{err},{value.case_tag},{est}")
        return 0

    if args.command == "verify":
        return _cmd_verify(args)

    if args.command == "converge":
        stream = get_stream(args.source)
        c10 = stream.source if isinstance(stream, SigmaChampernowneStream) else stream
        weight_value = pure_weight(args.pattern) if args.weight == "pure" else None
        records = convergence_table(
            stream, args.pattern, args.grid, weight_value, tol=args.tol, c10=c10
        )
        _write_records(records, args.out)
        return 0

    if args.command == "probe-pure":
        records = pure_abelian_probe(args.patterns, args.grid)
        _write_records(records, args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main_entry() -> None:
    try:
        sys.exit(main())
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)
