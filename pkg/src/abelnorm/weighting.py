"""Per-pattern weights that normalize abelian window frequencies.

Three regimes, routed by the pattern's digit content:

* no binary digits: an exact multinomial over the non-binary digit counts;
* all binary digits: 1 for a single digit; for length >= 2 a convergent
  series evaluated in exact rational arithmetic with a certified truncation
  bound (the tail of the series is dominated by a geometric series);
* mixed: the full multinomial plus a correction term proportional to the
  difference between the d10-only and c10-only window frequencies, which is
  estimated empirically on a Champernowne prefix.  Estimates carry no
  certified error bound and are tagged as such.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import case_counts_at, is_mixed, parikh
from .digitstream import ChampernowneStream

CASE_PURE = "pure"
CASE_NONBINARY = "nonbinary"
CASE_SINGLE_BINARY = "single-binary"
CASE_BINARY_SERIES = "binary-series"
CASE_MIXED = "mixed-estimated"


@dataclass(frozen=True)
class WeightValue:
    """A weight with its certification status.

    ``abs_error`` is 0 for exact closed forms, a certified bound for the
    truncated binary series, and None for empirical mixed-pattern estimates
    (no bound exists by construction; never reported as 0).
    """

    value: int | float
    abs_error: float | None
    case_tag: str
    estimator_n: int | None = None

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("weights are non-negative")
        if self.abs_error is not None and self.abs_error < 0:
            raise ValueError("error bounds are non-negative")


def _factorial_ratio(length: int, counts) -> int:
    den = 1
    for c in counts:
        den *= math.factorial(c)
    return math.factorial(length) // den


def pure_weight(pattern: str) -> WeightValue:
    """Number of distinct rearrangements of ``pattern``, exactly."""
    counts = parikh(pattern)
    return WeightValue(_factorial_ratio(len(pattern), counts), 0.0, CASE_PURE)


def weight_nonbinary(pattern: str) -> WeightValue:
    """Weight of a pattern with no binary digits: the multinomial over the
    counts of digits 2..9, exactly."""
    counts = parikh(pattern)
    if counts[0] or counts[1]:
        raise ValueError("pattern must not contain binary digits")
    return WeightValue(_factorial_ratio(len(pattern), counts[2:]), 0.0, CASE_NONBINARY)


def _binary_tail_bound(scale: int, k: int) -> Fraction:
    # sum_{i >= k} 2^i / 10^(i+2) = (1/5)^k / 80, times the outer scale.
    return Fraction(scale, 80 * 5**k)


def weight_binary(pattern: str, tol: float = 1e-12) -> WeightValue:
    """Weight of an all-binary pattern.

    A single digit weighs exactly 1.  For length >= 2 the weight is
    64 * 10^len * sum_{k>=len} 10^-(k+2) * (number of binary words of
    length k with at least zeros(pattern) 0s and at least ones(pattern)
    1s); the inner tallies are exact partial binomial sums.  The series is
    truncated once the geometric tail bound drops below ``tol`` and the
    reported ``abs_error`` dominates both the truncation and the final
    float conversion.
    """
    counts = parikh(pattern)
    if sum(counts[2:]):
        raise ValueError("pattern must consist of binary digits only")
    if tol <= 0:
        raise ValueError("tol must be positive")
    length = len(pattern)
    if length == 1:
        return WeightValue(1, 0.0, CASE_SINGLE_BINARY)
    zeros, ones = counts[0], counts[1]
    scale = 64 * 10**length
    tol_exact = Fraction(tol)
    cutoff = length
    while _binary_tail_bound(scale, cutoff) >= tol_exact:
        cutoff += 1
    total = Fraction(0)
    for k in range(length, cutoff):
        assert zeros <= k - ones  # k >= length keeps the inner sum nonempty
        inner = sum(math.comb(k, j) for j in range(zeros, k - ones + 1))
        total += Fraction(inner, 10 ** (k + 2))
    exact = scale * total
    value = float(exact)
    err = _binary_tail_bound(scale, cutoff) + abs(Fraction(value) - exact)
    abs_error = float(err)
    if Fraction(abs_error) < err:
        abs_error = math.nextafter(abs_error, math.inf)
    return WeightValue(value, abs_error, CASE_BINARY_SERIES)


def weight_mixed(
    pattern: str,
    estimate_n: int,
    *,
    stream: ChampernowneStream | None = None,
    literal_inequality: bool = False,
) -> WeightValue:
    """Weight of a mixed pattern, with the correction term estimated at a
    finite cutoff: multinomial + 10^len * (d10_only - c10_only) / n.

    The result is an estimate; ``abs_error`` is None because no rate is
    available for the correction frequencies.
    """
    if not is_mixed(pattern):
        raise ValueError("pattern must contain binary and non-binary digits")
    if estimate_n < len(pattern):
        raise ValueError("the estimation cutoff must be at least the pattern length")
    base = _factorial_ratio(len(pattern), parikh(pattern))
    c_counts, d_counts = case_counts_at(
        pattern, [estimate_n], stream=stream, literal_inequality=literal_inequality
    )
    value = base + 10 ** len(pattern) * (d_counts[0] - c_counts[0]) / estimate_n
    return WeightValue(value, None, CASE_MIXED, estimator_n=estimate_n)


def weight(
    pattern: str,
    tol: float = 1e-12,
    estimate_n: int = 100_000,
    *,
    stream: ChampernowneStream | None = None,
) -> WeightValue:
    """Route a pattern to its weighting regime by inspecting its digits."""
    counts = parikh(pattern)
    binary = counts[0] + counts[1]
    if binary == 0:
        return weight_nonbinary(pattern)
    if binary == len(pattern):
        return weight_binary(pattern, tol)
    return weight_mixed(pattern, estimate_n, stream=stream)
