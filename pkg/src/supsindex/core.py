"""Shared vocabulary: alphabets, texts, intervals, and palindrome centers.

Positions are 1-based and absolute throughout the package.  Palindrome
centers are encoded on a doubled integer axis: the center of the substring
``[i, j]`` is the key ``k = i + j - 1``, so an n-character text has the
2n-1 center keys ``1 .. 2n-1``.  Odd keys are character-centered
(odd-length) palindromes, even keys sit on the gap between two characters
(even-length palindromes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RangeError

# Two byte values are reserved for index sentinels, so a single text can
# hold at most this many distinct characters.
MAX_SIGMA = 254


class Alphabet:
    """Dense character-to-code table, codes assigned in first-seen order."""

    __slots__ = ("_chars", "_codes")

    def __init__(self) -> None:
        self._chars: list[str] = []
        self._codes: dict[str, int] = {}

    @property
    def sigma(self) -> int:
        return len(self._chars)

    def encode(self, ch: str, grow: bool = False) -> int:
        code = self._codes.get(ch)
        if code is None:
            if not grow:
                raise KeyError(f"character {ch!r} not in alphabet")
            if len(self._chars) >= MAX_SIGMA:
                raise ValueError(f"alphabet larger than {MAX_SIGMA} characters")
            code = len(self._chars)
            self._chars.append(ch)
            self._codes[ch] = code
        return code

    def decode(self, code: int) -> str:
        return self._chars[code]

    def __contains__(self, ch: str) -> bool:
        return ch in self._codes

    def copy(self) -> "Alphabet":
        dup = Alphabet()
        dup._chars = list(self._chars)
        dup._codes = dict(self._codes)
        return dup


@dataclass(frozen=True, order=True)
class Interval:
    """Closed, non-empty 1-based position interval.

    Emptiness is always represented by absence (``None`` or an empty
    collection), never by an Interval instance.
    """

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.start > self.end:
            raise RangeError(f"invalid interval [{self.start}, {self.end}]")

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def center(self) -> int:
        """Doubled-axis center key of this interval."""
        return self.start + self.end - 1

    def contains(self, other: "Interval") -> bool:
        return self.start <= other.start and other.end <= self.end

    def __iter__(self):
        yield self.start
        yield self.end


def center_index(start: int, end: int) -> int:
    """Doubled-axis center key of the interval ``[start, end]``."""
    return start + end - 1


def span_at(k: int, radius: int) -> tuple[int, int]:
    """Raw ``(start, end)`` of the palindrome with center ``k`` and the
    given arm length.  ``start > end`` signals the empty palindrome."""
    return (k + 2) // 2 - radius, (k + 1) // 2 + radius


def interval_at(k: int, radius: int) -> Interval:
    """Interval of the palindrome with center ``k`` and arm ``radius``."""
    start, end = span_at(k, radius)
    return Interval(start, end)


def radius_of(length: int) -> int:
    """Arm length of a palindrome of the given total length."""
    return length // 2


class Text:
    """Indexed character sequence with absolute 1-based positions.

    ``codes`` stores densely remapped character codes; ``origin`` is the
    absolute position of the first stored character, so windowed callers
    can keep issuing absolute positions after the window slides.
    """

    __slots__ = ("codes", "alphabet", "origin")

    def __init__(self, codes: bytearray, alphabet: Alphabet, origin: int = 1) -> None:
        self.codes = codes
        self.alphabet = alphabet
        self.origin = origin

    @classmethod
    def from_str(cls, s: str, alphabet: Alphabet | None = None) -> "Text":
        alphabet = alphabet if alphabet is not None else Alphabet()
        codes = bytearray(alphabet.encode(ch, grow=True) for ch in s)
        return cls(codes, alphabet, 1)

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def end(self) -> int:
        """Absolute position of the last stored character."""
        return self.origin + len(self.codes) - 1

    def _idx(self, pos: int) -> int:
        if pos < self.origin or pos > self.end:
            raise RangeError(f"position {pos} outside stored range "
                             f"[{self.origin}, {self.end}]")
        return pos - self.origin

    def code_at(self, pos: int) -> int:
        return self.codes[self._idx(pos)]

    def codes_of(self, iv: Interval) -> bytes:
        lo = self._idx(iv.start)
        hi = self._idx(iv.end)
        return bytes(self.codes[lo:hi + 1])

    def to_str(self, iv: Interval | None = None) -> str:
        data = self.codes if iv is None else self.codes_of(iv)
        return "".join(self.alphabet.decode(c) for c in data)

    def append(self, ch: str) -> int:
        """Append one character, growing the alphabet; returns its code."""
        code = self.alphabet.encode(ch, grow=True)
        self.codes.append(code)
        return code


def is_palindrome(t: Text, iv: Interval) -> bool:
    """True iff the substring at ``iv`` equals its reversal."""
    w = t.codes_of(iv)
    return w == w[::-1]


def count_occurrences(t: Text, iv: Interval | None) -> int:
    """Number of (possibly overlapping) occurrences of the substring at
    ``iv`` in the stored text.

    ``None`` stands for the empty substring, which by convention is never
    unique; its occurrence count is ``len(t) + 1``.
    """
    if iv is None:
        return len(t) + 1
    w = t.codes_of(iv)
    buf = t.codes
    count = 0
    at = buf.find(w)
    while at >= 0:
        count += 1
        at = buf.find(w, at + 1)
    return count


def smallest_period(t: Text, iv: Interval) -> int:
    """Smallest p >= 1 with ``w[i] == w[i+p]`` for the substring at ``iv``."""
    w = t.codes_of(iv)
    for p in range(1, len(w) + 1):
        if w[:-p] == w[p:]:
            return p
    raise AssertionError("unreachable: every string has period len(w)")
