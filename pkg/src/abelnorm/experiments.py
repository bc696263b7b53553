"""Reproduction checks, convergence studies, and CSV reports.

Everything here orchestrates the counting and weighting layers: it
re-derives the reference counts exactly, samples windows to confirm the
boundary-sorting count relations, checks the count decomposition identity
between the plain and run-sorted streams, and tabulates normalized abelian
frequencies whose target is 1.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .counting import (
    _case_counts_text,
    _context_in_text,
    _overlapping_count,
    abelian_counts_at,
    count_abelian,
    count_c10_only,
    count_d10_only,
    count_exact,
    distinct_permutations,
    first_case_hit,
    is_mixed,
    parikh,
)
from .digitstream import ChampernowneStream, DigitStream, SigmaChampernowneStream, sort_binary_runs
from .weighting import WeightValue, pure_weight, weight

D10_PREFIX_50 = "12345678901111213141516171819202122232425262728293"
REFERENCE_PATTERN = "4501140"


def _default_streams(
    c10: ChampernowneStream | None, d10: SigmaChampernowneStream | None
) -> tuple[ChampernowneStream, SigmaChampernowneStream]:
    if c10 is None:
        c10 = d10.source if d10 is not None else ChampernowneStream()
    if d10 is None:
        d10 = SigmaChampernowneStream(c10)
    return c10, d10


def normality_ratio(stream: DigitStream, pattern: str, n: int) -> float:
    """Exact-count frequency scaled so the normal-number target is 1."""
    if n < len(pattern):
        raise ValueError("cutoff shorter than the pattern")
    return count_exact(stream, pattern, n) * 10 ** len(pattern) / n


def _ratio(count: int, weight_value: float, n: int, length: int) -> float:
    return count * 10**length / (weight_value * n)


@dataclass(frozen=True)
class ConvergenceRecord:
    """One cutoff of a weighted abelian frequency study (target ratio: 1)."""

    n: int
    pattern: str
    count_b: int
    weight: WeightValue
    ratio: float
    deviation: float


def abelian_ratio(
    stream: DigitStream, pattern: str, n: int, weight_value: WeightValue
) -> ConvergenceRecord:
    """Weighted abelian frequency of ``pattern`` at cutoff ``n``."""
    if n < len(pattern):
        raise ValueError("cutoff shorter than the pattern")
    count = count_abelian(stream, pattern, n)
    ratio = _ratio(count, weight_value.value, n, len(pattern))
    return ConvergenceRecord(n, pattern, count, weight_value, ratio, abs(ratio - 1.0))


def convergence_table(
    stream: DigitStream,
    pattern: str,
    n_grid: Sequence[int],
    weight_value: WeightValue | None = None,
    *,
    tol: float = 1e-12,
    estimate_n: int | None = None,
    c10: ChampernowneStream | None = None,
) -> list[ConvergenceRecord]:
    """One record per cutoff, all counts taken from a single stream pass."""
    grid = list(n_grid)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("the cutoff grid must be strictly increasing")
    if grid and grid[0] < len(pattern):
        raise ValueError("cutoffs must be at least the pattern length")
    if weight_value is None:
        weight_value = weight(
            pattern, tol=tol, estimate_n=estimate_n or grid[-1], stream=c10
        )
    counts = abelian_counts_at(stream, pattern, grid)
    records = []
    for n, count in zip(grid, counts):
        ratio = _ratio(count, weight_value.value, n, len(pattern))
        records.append(
            ConvergenceRecord(n, pattern, count, weight_value, ratio, abs(ratio - 1.0))
        )
    return records


CSV_HEADER = "n,pattern,count_b,weight_value,weight_err,case_tag,ratio,deviation"


def records_to_csv(records: Iterable[ConvergenceRecord], out: TextIO) -> None:
    """Write convergence records under the fixed CSV header."""
    writer = csv.writer(out)
    writer.writerow(CSV_HEADER.split(","))
    for r in records:
        err = "" if r.weight.abs_error is None else repr(r.weight.abs_error)
        writer.writerow(
            [
                r.n,
                r.pattern,
                r.count_b,
                repr(r.weight.value) if isinstance(r.weight.value, float) else r.weight.value,
                err,
                r.weight.case_tag,
                repr(r.ratio),
                repr(r.deviation),
            ]
        )


@dataclass(frozen=True)
class Check:
    """One exact reproduction check."""

    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ExampleReport:
    checks: tuple[Check, ...]
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_examples(
    *,
    c10: ChampernowneStream | None = None,
    d10: SigmaChampernowneStream | None = None,
    search_limit: int = 60_000,
) -> ExampleReport:
    """Re-derive every reference count exactly and report pass/fail.

    Also locates the first c10-only and d10-only windows for the reference
    pattern and prints the surrounding digits of both streams for human
    inspection (reported, not asserted).
    """
    c10, d10 = _default_streams(c10, d10)
    checks = (
        Check("exact count of 12 in the first 50 digits of c10", 3, count_exact(c10, "12", 50)),
        Check("abelian count of 12 in the first 50 digits of c10", 5, count_abelian(c10, "12", 50)),
        Check("first 50 digits of d10", D10_PREFIX_50, d10.prefix(50)),
        Check(
            "run-sorting of 24911010010772",
            "24900001111772",
            sort_binary_runs("24911010010772"),
        ),
        Check(
            f"c10-only count for {REFERENCE_PATTERN} at cutoff 40972",
            1,
            count_c10_only(REFERENCE_PATTERN, 40972, stream=c10),
        ),
        Check(
            f"d10-only count for {REFERENCE_PATTERN} at cutoff 39123",
            1,
            count_d10_only(REFERENCE_PATTERN, 39123, stream=c10),
        ),
    )
    notes = []
    for which, label in (("c", "c10-only"), ("d", "d10-only")):
        end = first_case_hit(REFERENCE_PATTERN, which, search_limit, stream=c10)
        if end is None:
            notes.append(
                f"no {label} window for {REFERENCE_PATTERN} ends within {search_limit} digits"
            )
            continue
        start = end - len(REFERENCE_PATTERN) + 1
        lo = max(1, start - 12)
        hi = end + 12
        notes.append(f"first {label} window ends at position {end} (starts at {start})")
        notes.append(f"  c10[{lo}..{hi}] = {c10.prefix(hi)[lo - 1:]}")
        notes.append(f"  d10[{lo}..{hi}] = {d10.prefix(hi)[lo - 1:]}")
    return ExampleReport(checks, tuple(notes))


@dataclass(frozen=True)
class BoundaryReport:
    checked: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_boundary_sorting(
    samples: int,
    *,
    max_end: int = 10**6,
    min_len: int = 2,
    max_len: int = 20,
    seed: int = 0,
    c10: ChampernowneStream | None = None,
    d10: SigmaChampernowneStream | None = None,
    max_reported: int = 5,
) -> BoundaryReport:
    """Sample windows of c10 and confirm the four boundary-sorting relations.

    Windows are drawn uniformly over start positions and lengths in
    [min_len, max_len] with ends at most ``max_end``; all-binary windows are
    skipped.  For each window the binary prefix/suffix pieces and their
    enclosing runs are read from c10, the sorted pieces from d10 at the same
    positions, and the four count relations are checked exactly.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    c10, d10 = _default_streams(c10, d10)
    ctext = c10._closed_prefix(max_end + max_len + 2)
    dtext = d10.prefix(len(ctext))
    rng = random.Random(seed)
    checked = 0
    violations: list[str] = []
    while checked < samples:
        length = rng.randint(min_len, max_len)
        start = rng.randint(1, max_end - length + 1)
        try:
            ctx = _context_in_text(ctext, start, length)
        except ValueError:
            continue  # all-binary window
        checked += 1
        i0 = start - 1
        i1 = i0 + length
        sc1 = dtext[i0 : i0 + len(ctx.c1)]
        sc2 = dtext[i1 - len(ctx.c2) : i1]
        keep1 = min(ctx.d1.ones if ctx.d1 else 0, len(ctx.c1))
        keep0 = min(ctx.d2.zeros if ctx.d2 else 0, len(ctx.c2))
        ok = (
            sc1.count("0") == len(ctx.c1) - keep1
            and sc1.count("1") == keep1
            and sc2.count("0") == keep0
            and sc2.count("1") == len(ctx.c2) - keep0
        )
        if not ok and len(violations) < max_reported:
            violations.append(
                f"window [{start}..{start + length - 1}] "
                f"c10={ctext[i0:i1]!r} d10={dtext[i0:i1]!r} "
                f"c1={ctx.c1!r} c2={ctx.c2!r} d1={ctx.d1} d2={ctx.d2}"
            )
    return BoundaryReport(checked, tuple(violations))


@dataclass(frozen=True)
class IdentityReport:
    """Count decomposition at one cutoff: abelian windows of the sorted
    stream versus plain-stream permutation occurrences plus corrections."""

    pattern: str
    n: int
    lhs: int
    rhs: int
    mismatch: int


def _snap_to_nonbinary(c10: ChampernowneStream, n: int) -> int:
    d = 0
    while True:
        if n - d >= 1 and c10.digit(n - d) > 1:
            return n - d
        if c10.digit(n + d) > 1:
            return n + d
        d += 1


def verify_identity(
    pattern: str,
    n_list: Sequence[int],
    *,
    literal_inequality: bool = False,
    snap: bool = True,
    c10: ChampernowneStream | None = None,
    d10: SigmaChampernowneStream | None = None,
) -> list[IdentityReport]:
    """Check, exactly, that abelian counts over d10 decompose into plain
    permutation counts over c10 plus the d10-only minus c10-only corrections.

    With ``snap`` each cutoff is moved to the nearest position holding a
    non-binary digit (ties resolved downward).  Mismatches are reported,
    never suppressed.
    """
    if not is_mixed(pattern):
        raise ValueError("pattern must contain binary and non-binary digits")
    c10, d10 = _default_streams(c10, d10)
    perms = distinct_permutations(pattern)
    reports = []
    for n_req in n_list:
        n = _snap_to_nonbinary(c10, n_req) if snap else n_req
        ctext = c10.prefix(n)
        lhs = count_abelian(d10, pattern, n)
        perm_sum = sum(_overlapping_count(ctext, p) for p in perms)
        closed = c10._closed_prefix(n + 1)
        c_counts, d_counts = _case_counts_text(closed, pattern, [n], literal_inequality)
        rhs = perm_sum + d_counts[0] - c_counts[0]
        reports.append(IdentityReport(pattern, n, lhs, rhs, lhs - rhs))
    return reports


def pure_abelian_probe(
    patterns: Sequence[str],
    n_grid: Sequence[int],
    *,
    c10: ChampernowneStream | None = None,
    d10: SigmaChampernowneStream | None = None,
) -> list[ConvergenceRecord]:
    """Tabulate d10 abelian frequencies normalized by the permutation-count
    weight.  Output is evidence for eyeballing convergence; no verdict is
    attached."""
    c10, d10 = _default_streams(c10, d10)
    records = []
    for pattern in patterns:
        records.extend(
            convergence_table(d10, pattern, n_grid, pure_weight(pattern))
        )
    return records
