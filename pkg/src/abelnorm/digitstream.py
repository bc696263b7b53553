"""Digit streams for the Champernowne expansion and its run-sorted variant.

The base-10 Champernowne expansion (``c10``) concatenates the decimal
expansions of 1, 2, 3, ...  Positions are 1-indexed past the decimal point:
digit 1 is ``1``, digit 10 is the leading ``1`` of the integer 10, and so on.

The run-sorted variant (``d10``) rearranges every maximal run of binary
digits (a maximal stretch of consecutive 0s and 1s) into ascending order:
all 0s first, then all 1s.  Non-binary digits never move, so the
rearrangement permutes digits within each run and nothing else.  One
consequence is that the block ``10`` never occurs in ``d10``.

Streams are deterministic; ``c10`` and ``d10`` cache the digits they have
generated so repeated traversals and window scans stay cheap.  Literal
streams wrap a fixed word and treat it as an entire expansion, which is how
unit tests exercise run decomposition and sorting on hand-picked snippets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_BINARY_RUN = re.compile(r"[01]+")
_NONBINARY = re.compile(r"[2-9]")


@dataclass(frozen=True)
class BinaryRun:
    """Maximal stretch of binary digits; ``start`` is 1-indexed, ends inclusive."""

    start: int
    length: int
    zeros: int
    ones: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.length < 1 or self.zeros < 0 or self.ones < 0:
            raise ValueError("malformed binary run")
        if self.zeros + self.ones != self.length:
            raise ValueError("zeros + ones must equal length")

    @property
    def end(self) -> int:
        return self.start + self.length - 1


def champernowne_digit(p: int) -> int:
    """Digit at 1-indexed position ``p`` of the Champernowne expansion.

    Runs in O(log p): positions 1-9 hold the one-digit integers, the next
    180 positions hold the two-digit integers, and so on, so the integer
    containing position ``p`` is located arithmetically.  Stateless and safe
    to call from concurrent tasks.
    """
    if p < 1:
        raise ValueError("positions are 1-indexed")
    width = 1
    block = 9  # how many integers have `width` digits
    first = 1  # smallest of them
    while p > width * block:
        p -= width * block
        width += 1
        block *= 10
        first *= 10
    index, offset = divmod(p - 1, width)
    return int(str(first + index)[offset])


def _sort_run(match: re.Match[str]) -> str:
    run = match.group()
    zeros = run.count("0")
    return "0" * zeros + "1" * (len(run) - zeros)


def sort_binary_runs(text: str) -> str:
    """Sort every maximal binary run of ``text`` ascending (0s, then 1s)."""
    return _BINARY_RUN.sub(_sort_run, text)


class DigitStream:
    """Deterministic, 1-indexed source of base-10 digits."""

    kind = "abstract"

    def prefix(self, n: int) -> str:
        """The first ``n`` digits, as a string."""
        raise NotImplementedError

    def digit(self, p: int) -> int:
        """The digit at position ``p``."""
        raise NotImplementedError

    def _digit_or_none(self, p: int) -> int | None:
        # Like digit(), but None past the end of a finite stream.
        return self.digit(p)

    def _closed_prefix(self, n: int) -> str:
        """A prefix long enough that every run intersecting 1..n is closed."""
        raise NotImplementedError


class ChampernowneStream(DigitStream):
    """The Champernowne expansion, generated lazily and cached."""

    kind = "c10"

    def __init__(self) -> None:
        self._digits = ""
        self._next = 1  # first integer not yet appended

    def _extend(self, n: int) -> None:
        if len(self._digits) >= n:
            return
        parts = [self._digits]
        total = len(self._digits)
        nxt = self._next
        while total < n:
            width = len(str(nxt))
            count = (n - total) // width + 1
            chunk = "".join(map(str, range(nxt, nxt + count)))
            parts.append(chunk)
            total += len(chunk)
            nxt += count
        self._digits = "".join(parts)
        self._next = nxt

    def prefix(self, n: int) -> str:
        if n < 1:
            raise ValueError("prefix length must be at least 1")
        self._extend(n)
        return self._digits[:n]

    def digit(self, p: int) -> int:
        if p < 1:
            raise ValueError("positions are 1-indexed")
        if p <= len(self._digits):
            return int(self._digits[p - 1])
        return champernowne_digit(p)

    def _first_nonbinary_after(self, n: int) -> int:
        """Position of the first non-binary digit strictly after position n."""
        pos = max(n, 0)
        while True:
            self._extend(pos + 64)
            found = _NONBINARY.search(self._digits, pos)
            if found is not None:
                return found.start() + 1
            pos = len(self._digits)

    def _closed_prefix(self, n: int) -> str:
        return self.prefix(self._first_nonbinary_after(n))

    def __iter__(self):
        p = 0
        while True:
            self._extend(p + 8192)
            chunk = self._digits[p : p + 8192]
            for ch in chunk:
                yield int(ch)
            p += len(chunk)


class SigmaChampernowneStream(DigitStream):
    """The run-sorted Champernowne variant, derived from a ``c10`` stream.

    The transformed prefix is cached and always cut immediately after a
    non-binary digit, so extending it never re-sorts an already-emitted run.
    """

    kind = "d10"

    def __init__(self, source: ChampernowneStream | None = None) -> None:
        self._src = source if source is not None else ChampernowneStream()
        self._digits = ""

    @property
    def source(self) -> ChampernowneStream:
        return self._src

    def _extend(self, n: int) -> None:
        if len(self._digits) >= n:
            return
        # No run crosses the cut: the digit at `cut` is non-binary.
        cut = self._src._first_nonbinary_after(n)
        raw = self._src.prefix(cut)
        self._digits += sort_binary_runs(raw[len(self._digits) :])

    def prefix(self, n: int) -> str:
        if n < 1:
            raise ValueError("prefix length must be at least 1")
        self._extend(n)
        return self._digits[:n]

    def digit(self, p: int) -> int:
        if p < 1:
            raise ValueError("positions are 1-indexed")
        self._extend(p)
        return int(self._digits[p - 1])

    def _first_nonbinary_after(self, n: int) -> int:
        # Run sorting never changes which positions hold binary digits.
        return self._src._first_nonbinary_after(n)

    def _closed_prefix(self, n: int) -> str:
        return self.prefix(self._first_nonbinary_after(n))

    def __iter__(self):
        p = 0
        while True:
            self._extend(p + 8192)
            chunk = self._digits[p : p + 8192]
            for ch in chunk:
                yield int(ch)
            p += len(chunk)


class LiteralStream(DigitStream):
    """A fixed digit word treated as a whole expansion (for tests and σ demos)."""

    kind = "literal"

    def __init__(self, word: str) -> None:
        if not word or not word.isdigit():
            raise ValueError("literal stream needs a nonempty string of digits")
        self._digits = word

    @property
    def word(self) -> str:
        return self._digits

    def __len__(self) -> int:
        return len(self._digits)

    def prefix(self, n: int) -> str:
        if not 1 <= n <= len(self._digits):
            raise ValueError("prefix extends past the end of the literal stream")
        return self._digits[:n]

    def digit(self, p: int) -> int:
        if not 1 <= p <= len(self._digits):
            raise ValueError("position outside the literal stream")
        return int(self._digits[p - 1])

    def _digit_or_none(self, p: int) -> int | None:
        if 1 <= p <= len(self._digits):
            return int(self._digits[p - 1])
        return None

    def _closed_prefix(self, n: int) -> str:
        if not 1 <= n <= len(self._digits):
            raise ValueError("prefix extends past the end of the literal stream")
        return self._digits

    def __iter__(self):
        return iter(map(int, self._digits))


def get_stream(source: str) -> DigitStream:
    """Build a fresh named stream: ``c10`` or ``d10``."""
    if source == "c10":
        return ChampernowneStream()
    if source == "d10":
        return SigmaChampernowneStream()
    raise ValueError(f"unknown stream source {source!r}")


def stream_prefix(stream: DigitStream, n: int) -> str:
    """First ``n`` digits of ``stream``; sequential generation costs O(n)."""
    return stream.prefix(n)


def binary_runs(stream: DigitStream, n: int) -> list[BinaryRun]:
    """All maximal binary runs intersecting positions 1..n, in start order.

    A run that crosses position ``n`` is reported with its full extent;
    generation continues past ``n`` until the run terminates.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    text = stream._closed_prefix(n)
    runs = []
    for m in _BINARY_RUN.finditer(text):
        if m.start() + 1 > n:
            break
        run = m.group()
        zeros = run.count("0")
        runs.append(BinaryRun(m.start() + 1, len(run), zeros, len(run) - zeros))
    return runs


def sigma_transform(stream: DigitStream) -> DigitStream:
    """The run-sorting rearrangement applied to a whole stream.

    Maps a ``c10`` stream to the ``d10`` stream.  Literal words are sorted in
    place (every maximal run, including ones touching the word's ends).
    Already-sorted streams come back unchanged: sorting is idempotent.
    """
    if isinstance(stream, ChampernowneStream):
        return SigmaChampernowneStream(stream)
    if isinstance(stream, LiteralStream):
        return LiteralStream(sort_binary_runs(stream.word))
    if isinstance(stream, SigmaChampernowneStream):
        return stream
    raise TypeError("sigma_transform expects a c10, d10, or literal stream")


def _expand_run(stream: DigitStream, p: int) -> BinaryRun:
    # Position p must hold a binary digit; walk out to the run's ends.
    lo = p
    while lo > 1 and stream.digit(lo - 1) <= 1:
        lo -= 1
    hi = p
    while True:
        d = stream._digit_or_none(hi + 1)
        if d is None or d > 1:
            break
        hi += 1
    zeros = sum(1 for q in range(lo, hi + 1) if stream.digit(q) == 0)
    return BinaryRun(lo, hi - lo + 1, zeros, hi - lo + 1 - zeros)


def maximal_run_of(stream: DigitStream, p: int, cut: bool = False) -> BinaryRun | None:
    """Maximal binary run containing position ``p``, or None if there is none.

    With ``cut=True``, ``p`` names the boundary between positions ``p`` and
    ``p + 1`` (``p = 0`` is the boundary before the first digit).  The run of
    the digit ending at ``p`` is returned when that digit is binary;
    otherwise the run of the digit at ``p + 1`` when that one is binary;
    otherwise None.  When both neighbors are binary they share one run, so
    the left-first order cannot change the answer.
    """
    if cut:
        if p < 0:
            raise ValueError("cut positions start at 0")
        if p >= 1 and stream.digit(p) <= 1:
            return _expand_run(stream, p)
        d = stream._digit_or_none(p + 1)
        if d is not None and d <= 1:
            return _expand_run(stream, p + 1)
        return None
    if p < 1:
        raise ValueError("positions are 1-indexed")
    if stream.digit(p) <= 1:
        return _expand_run(stream, p)
    return None
