"""Window counting over digit streams: exact, abelian, and sorting corrections.

Conventions
-----------
A window of length L lies "in the first n digits" when its end position is
at most n; overlapping windows all count.  The exact count tallies windows
spelling a pattern verbatim; the abelian count tallies windows whose digit
multiset (Parikh vector) equals the pattern's, i.e. windows spelling any
permutation of the pattern.

Corrections for the run-sorted stream
-------------------------------------
Sorting each maximal binary run moves digits only inside the run.  A window
therefore keeps its non-binary digits and its fully interior binary runs
intact; only the window's binary prefix ``c1`` and binary suffix ``c2`` can
trade 0s and 1s with the parts of their runs ``d1`` and ``d2`` that lie
outside the window.  Because ``c1`` is the tail piece of ``d1`` and ``c2``
the head piece of ``d2``, after sorting the ``c1`` positions hold exactly
``min(ones(d1), len(c1))`` 1s and the ``c2`` positions exactly
``min(zeros(d2), len(c2))`` 0s.

Comparing the boundary 0/1 budget a window would need in order to spell a
permutation of the pattern after sorting against the budget the sorted
boundary actually delivers gives two exact counters over the plain stream:

* ``count_c10_only``: windows that spell a permutation of the pattern but
  stop doing so once runs are sorted (counted in c10, lost in d10);
* ``count_d10_only``: windows that do not spell a permutation but start
  doing so once runs are sorted (absent in c10, gained in d10).

Both counters scan with O(1)-per-step sliding multiset updates and evaluate
the boundary predicate only on candidate windows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .digitstream import (
    _BINARY_RUN,
    BinaryRun,
    ChampernowneStream,
    DigitStream,
)

_DIGITS = "0123456789"


def _check_word(word: str) -> None:
    if not isinstance(word, str) or not word or not word.isdigit():
        raise ValueError("a word is a nonempty string of base-10 digits")


def parikh(word: str) -> tuple[int, ...]:
    """Ten per-digit occurrence counts of ``word`` (index = digit value)."""
    _check_word(word)
    return tuple(word.count(d) for d in _DIGITS)


def is_mixed(word: str) -> bool:
    """True when ``word`` has at least one binary and one non-binary digit."""
    _check_word(word)
    has_binary = "0" in word or "1" in word
    has_other = any(d in word for d in "23456789")
    return has_binary and has_other


def distinct_permutations(word: str) -> list[str]:
    """All distinct rearrangements of ``word``, sorted.

    Enumerates via itertools.permutations, so keep word lengths modest
    (<= 8 or so); that covers every pattern used here.
    """
    _check_word(word)
    return sorted({"".join(p) for p in permutations(word)})


def _overlapping_count(text: str, pattern: str) -> int:
    count = 0
    start = 0
    while True:
        i = text.find(pattern, start)
        if i < 0:
            return count
        count += 1
        start = i + 1


def count_exact(stream: DigitStream, pattern: str, n: int) -> int:
    """Occurrences of ``pattern`` ending at or before position n, overlaps allowed."""
    _check_word(pattern)
    if n < 1:
        raise ValueError("n must be at least 1")
    if n < len(pattern):
        return 0
    return _overlapping_count(stream.prefix(n), pattern)


def _abelian_counts_text(text: str, pattern: str, ends: list[int]) -> list[int]:
    # Sliding multiset scan; `ends` must be strictly increasing, max <= len(text).
    length = len(pattern)
    target = [0] * 256
    for ch in pattern:
        target[ord(ch)] += 1
    data = text.encode("ascii")
    window = [0] * 256
    bad = sum(1 for code in range(48, 58) if target[code])
    counts: list[int] = []
    gi = 0
    while gi < len(ends) and ends[gi] < length:
        counts.append(0)
        gi += 1
    if gi >= len(ends):
        return counts
    next_end = ends[gi]
    last = ends[-1]
    total = 0
    for j in range(length - 1):
        b = data[j]
        c = window[b] + 1
        window[b] = c
        if c == target[b]:
            bad -= 1
        elif c == target[b] + 1:
            bad += 1
    for e in range(length, last + 1):
        b = data[e - 1]
        c = window[b] + 1
        window[b] = c
        if c == target[b]:
            bad -= 1
        elif c == target[b] + 1:
            bad += 1
        if bad == 0:
            total += 1
        if e == next_end:
            counts.append(total)
            gi += 1
            next_end = ends[gi] if gi < len(ends) else 0
        b = data[e - length]
        c = window[b] - 1
        window[b] = c
        if c == target[b]:
            bad -= 1
        elif c == target[b] - 1:
            bad += 1
    return counts


def _check_ends(ends: list[int]) -> None:
    if not ends:
        raise ValueError("need at least one cutoff")
    if any(e < 1 for e in ends):
        raise ValueError("cutoffs are 1-indexed")
    if any(b <= a for a, b in zip(ends, ends[1:])):
        raise ValueError("cutoffs must be strictly increasing")


def abelian_counts_at(stream: DigitStream, pattern: str, ends: list[int]) -> list[int]:
    """Abelian counts at several cutoffs, computed in one stream pass."""
    _check_word(pattern)
    ends = list(ends)
    _check_ends(ends)
    text = stream.prefix(ends[-1])
    return _abelian_counts_text(text, pattern, ends)


def count_abelian(stream: DigitStream, pattern: str, n: int) -> int:
    """Windows ending at or before n whose Parikh vector equals the pattern's."""
    return abelian_counts_at(stream, pattern, [n])[0]


@dataclass(frozen=True)
class BoundaryContext:
    """Boundary pieces of a window occurrence and their enclosing runs.

    ``c1``/``c2`` are the window's longest binary prefix/suffix (possibly
    empty).  ``d1``/``d2`` are the maximal runs of the expansion containing
    them; for an empty piece the run of the adjacent outside digit is used
    when that digit is binary, otherwise None.
    """

    c1: str
    c2: str
    d1: BinaryRun | None
    d2: BinaryRun | None


def _run_from(text: str, lo: int, hi: int) -> BinaryRun:
    # [lo, hi) are 0-based text indices of a closed run.
    zeros = text.count("0", lo, hi)
    return BinaryRun(lo + 1, hi - lo, zeros, hi - lo - zeros)


def _context_in_text(text: str, start: int, length: int) -> BoundaryContext:
    """Boundary context of the window at 1-indexed [start, start+length-1].

    ``text`` must already close every run the window touches (use
    ``stream._closed_prefix`` or a whole literal word).
    """
    i0 = start - 1
    i1 = i0 + length
    window = text[i0:i1]
    if len(window) != length:
        raise ValueError("window extends past the available text")
    k = 0
    while k < length and window[k] in "01":
        k += 1
    if k == length:
        raise ValueError("window is all-binary; boundary pieces are undefined")
    c1 = window[:k]
    k2 = length
    while k2 > 0 and window[k2 - 1] in "01":
        k2 -= 1
    c2 = window[k2:]

    if c1:
        lo = i0
        while lo > 0 and text[lo - 1] in "01":
            lo -= 1
        d1 = _run_from(text, lo, i0 + len(c1))
    elif i0 > 0 and text[i0 - 1] in "01":
        hi = i0
        lo = i0 - 1
        while lo > 0 and text[lo - 1] in "01":
            lo -= 1
        d1 = _run_from(text, lo, hi)
    else:
        d1 = None

    if c2:
        hi = i1
        while hi < len(text) and text[hi] in "01":
            hi += 1
        d2 = _run_from(text, i1 - len(c2), hi)
    elif i1 < len(text) and text[i1] in "01":
        hi = i1 + 1
        while hi < len(text) and text[hi] in "01":
            hi += 1
        d2 = _run_from(text, i1, hi)
    else:
        d2 = None

    return BoundaryContext(c1, c2, d1, d2)


def boundary_context(stream: DigitStream, start: int, length: int) -> BoundaryContext:
    """Boundary context of the window at positions start..start+length-1.

    The window must contain at least one non-binary digit; all-binary
    windows are rejected (route those to the binary-word logic instead).
    Resolving ``d1``/``d2`` scans outside the window until the enclosing
    runs close, generating digits on demand.
    """
    if start < 1 or length < 1:
        raise ValueError("window positions are 1-indexed and nonempty")
    text = stream._closed_prefix(start + length)
    return _context_in_text(text, start, length)


def _sorted_boundary_budget(ctx: BoundaryContext) -> tuple[int, int]:
    # (zeros, ones) that the window's boundary positions hold after sorting.
    lc1 = len(ctx.c1)
    lc2 = len(ctx.c2)
    keep1 = min(ctx.d1.ones if ctx.d1 else 0, lc1)  # 1s landing in c1's slots
    keep0 = min(ctx.d2.zeros if ctx.d2 else 0, lc2)  # 0s landing in c2's slots
    return (lc1 - keep1) + keep0, keep1 + (lc2 - keep0)


def _boundary_changed(ctx: BoundaryContext) -> bool:
    if not ctx.c1 and not ctx.c2:
        return False
    have0 = ctx.c1.count("0") + ctx.c2.count("0")
    have1 = len(ctx.c1) + len(ctx.c2) - have0
    return (have0, have1) != _sorted_boundary_budget(ctx)


def _ctx_consistent(ctx: BoundaryContext, window: str) -> bool:
    k = 0
    while k < len(window) and window[k] in "01":
        k += 1
    if window[:k] != ctx.c1:
        return False
    k2 = len(window)
    while k2 > 0 and window[k2 - 1] in "01":
        k2 -= 1
    return window[k2:] == ctx.c2


def c10_only_occurrence(pattern: str, ctx: BoundaryContext, occurrence: str) -> bool:
    """True iff this occurrence of a permutation of ``pattern`` loses its
    permutation class under run sorting (counted in c10 but not in d10).

    ``occurrence`` must be a permutation of ``pattern`` and ``pattern`` must
    mix binary and non-binary digits; anything else is a caller bug.
    """
    _check_word(pattern)
    _check_word(occurrence)
    if not is_mixed(pattern):
        raise ValueError("pattern must contain binary and non-binary digits")
    if parikh(occurrence) != parikh(pattern):
        raise ValueError("occurrence is not a permutation of the pattern")
    if not _ctx_consistent(ctx, occurrence):
        raise ValueError("context does not describe this occurrence")
    return _boundary_changed(ctx)


def _gained_by_sorting(
    target: tuple[int, ...],
    window: str,
    ctx: BoundaryContext,
    literal_inequality: bool,
    pattern: str,
) -> bool:
    # Non-binary counts and length are assumed to match `target` already.
    wz = window.count("0")
    wo = window.count("1")
    if literal_inequality:
        if window == pattern:
            return False
    elif (wz, wo) == (target[0], target[1]):
        return False
    c1z = ctx.c1.count("0")
    c2z = ctx.c2.count("0")
    boundary_len = len(ctx.c1) + len(ctx.c2)
    need0 = target[0] - (wz - c1z - c2z)
    need1 = target[1] - (wo - (boundary_len - c1z - c2z))
    return (need0, need1) == _sorted_boundary_budget(ctx)


def d10_only_occurrence(
    pattern: str,
    window: str,
    ctx: BoundaryContext,
    *,
    literal_inequality: bool = False,
) -> bool:
    """True iff the window is not a permutation of ``pattern`` in c10 but run
    sorting turns it into one (counted in d10 but not in c10).

    With ``literal_inequality`` the "differs from the pattern" requirement is
    read as plain string inequality instead of multiset inequality.
    """
    _check_word(pattern)
    _check_word(window)
    if not is_mixed(pattern):
        raise ValueError("pattern must contain binary and non-binary digits")
    target = parikh(pattern)
    if len(window) != len(pattern):
        return False
    if parikh(window)[2:] != target[2:]:
        return False
    return _gained_by_sorting(target, window, ctx, literal_inequality, pattern)


def _case_counts_text(
    text: str,
    pattern: str,
    ends: list[int],
    literal_inequality: bool,
) -> tuple[list[int], list[int]]:
    # Requires len(text) > ends[-1] or text to be a whole literal word, so
    # that boundary runs close inside `text`.
    length = len(pattern)
    target = parikh(pattern)
    t256 = [0] * 256
    for ch in pattern:
        t256[ord(ch)] += 1
    data = text.encode("ascii")
    window = [0] * 256
    bad_all = sum(1 for code in range(48, 58) if t256[code])
    bad_nb = sum(1 for code in range(50, 58) if t256[code])
    c_counts: list[int] = []
    d_counts: list[int] = []
    gi = 0
    next_end = ends[gi]
    last = ends[-1]
    c_total = 0
    d_total = 0
    for j in range(length - 1):
        b = data[j]
        c = window[b] + 1
        window[b] = c
        if c == t256[b]:
            bad_all -= 1
            if b >= 50:
                bad_nb -= 1
        elif c == t256[b] + 1:
            bad_all += 1
            if b >= 50:
                bad_nb += 1
    for e in range(length, last + 1):
        b = data[e - 1]
        c = window[b] + 1
        window[b] = c
        if c == t256[b]:
            bad_all -= 1
            if b >= 50:
                bad_nb -= 1
        elif c == t256[b] + 1:
            bad_all += 1
            if b >= 50:
                bad_nb += 1
        if bad_nb == 0:
            start = e - length + 1
            ctx = _context_in_text(text, start, length)
            if bad_all == 0:
                if _boundary_changed(ctx):
                    c_total += 1
            if _gained_by_sorting(
                target, text[e - length : e], ctx, literal_inequality, pattern
            ):
                d_total += 1
        if e == next_end:
            c_counts.append(c_total)
            d_counts.append(d_total)
            gi += 1
            next_end = ends[gi] if gi < len(ends) else 0
        b = data[e - length]
        c = window[b] - 1
        window[b] = c
        if c == t256[b]:
            bad_all -= 1
            if b >= 50:
                bad_nb -= 1
        elif c == t256[b] - 1:
            bad_all += 1
            if b >= 50:
                bad_nb += 1
    return c_counts, d_counts


def _c10_text(stream: ChampernowneStream | None) -> ChampernowneStream:
    if stream is None:
        return ChampernowneStream()
    if stream.kind != "c10":
        raise ValueError("sorting-correction counts are defined over the c10 stream")
    return stream


def case_counts_at(
    pattern: str,
    ends: list[int],
    *,
    stream: ChampernowneStream | None = None,
    literal_inequality: bool = False,
) -> tuple[list[int], list[int]]:
    """(c10-only, d10-only) correction counts at several cutoffs, one pass."""
    _check_word(pattern)
    if not is_mixed(pattern):
        raise ValueError("pattern must contain binary and non-binary digits")
    ends = list(ends)
    _check_ends(ends)
    if ends[0] < len(pattern):
        raise ValueError("cutoffs must be at least the pattern length")
    c10 = _c10_text(stream)
    text = c10._closed_prefix(ends[-1] + 1)
    return _case_counts_text(text, pattern, ends, literal_inequality)


def count_c10_only(
    pattern: str, n: int, *, stream: ChampernowneStream | None = None
) -> int:
    """Windows in the first n digits of c10 that spell a permutation of the
    pattern but lose it under run sorting."""
    c_counts, _ = case_counts_at(pattern, [n], stream=stream)
    return c_counts[0]


def count_d10_only(
    pattern: str,
    n: int,
    *,
    stream: ChampernowneStream | None = None,
    literal_inequality: bool = False,
) -> int:
    """Windows in the first n digits of c10 that are not a permutation of the
    pattern but become one under run sorting."""
    _, d_counts = case_counts_at(
        pattern, [n], stream=stream, literal_inequality=literal_inequality
    )
    return d_counts[0]


def first_case_hit(
    pattern: str,
    which: str,
    limit: int,
    *,
    stream: ChampernowneStream | None = None,
    literal_inequality: bool = False,
) -> int | None:
    """End position of the first c10-only (``which='c'``) or d10-only
    (``which='d'``) window, scanning ends up to ``limit``; None if absent."""
    _check_word(pattern)
    if which not in ("c", "d"):
        raise ValueError("which must be 'c' or 'd'")
    if not is_mixed(pattern):
        raise ValueError("pattern must contain binary and non-binary digits")
    c10 = _c10_text(stream)
    text = c10._closed_prefix(limit + 1)
    length = len(pattern)
    target = parikh(pattern)
    for e in range(length, limit + 1):
        start = e - length + 1
        window = text[e - length : e]
        counts = parikh(window)
        if which == "c":
            if counts != target:
                continue
            ctx = _context_in_text(text, start, length)
            if _boundary_changed(ctx):
                return e
        else:
            if counts[2:] != target[2:]:
                continue
            ctx = _context_in_text(text, start, length)
            if _gained_by_sorting(target, window, ctx, literal_inequality, pattern):
                return e
    return None


def sort_interior_runs(word: str) -> str:
    """Sort the maximal binary runs lying strictly inside ``word``.

    Runs touching either end of the word are left alone.  For a word that
    begins and ends with non-binary digits every run is strictly interior,
    and the result matches reading the sorted stream at an occurrence of
    ``word``.
    """
    _check_word(word)

    def repl(m: re.Match[str]) -> str:
        if m.start() == 0 or m.end() == len(word):
            return m.group()
        run = m.group()
        zeros = run.count("0")
        return "0" * zeros + "1" * (len(run) - zeros)

    return _BINARY_RUN.sub(repl, word)
