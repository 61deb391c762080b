"""Minimal unique palindromic substrings and their maintenance.

A MUPS is a unique palindromic substring whose one-step contraction is
not unique.  At a fixed center, uniqueness is monotone under expansion
(every occurrence of the longer palindrome contains one of the shorter),
so each center carries at most one MUPS: the palindrome at its smallest
unique arm.  ``compute_static`` binary-searches that arm per center.

``SlidingMupsTracker`` keeps the set current while the window slides.
Occurrence counts only change for strings gaining an occurrence at the
new right end (palindromic suffixes after a push) or losing the one at
the old left end (palindromic prefixes before a pop).  Counts along those
suffix/prefix chains are monotone in length, so the walk stops as soon as
a count reaches three; only crossings of the 1 <-> 2 boundary can move a
center's minimal unique arm, and the centers of both occurrences of a
count-two palindrome are recomputed from scratch.

After-edit change detection recomputes the set on the edited buffer and
diffs; the theoretical change-detection machinery with better worst-case
bounds is intentionally out of scope, correctness is what the
differential suites enforce.
"""

from __future__ import annotations

from typing import Callable, Iterable, NamedTuple

from .core import Text
from .errors import StateError
from .maxpal import PalArmTable


class MupsRecord(NamedTuple):
    """A minimal unique palindromic substring occurrence."""

    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    @property
    def center(self) -> int:
        return self.start + self.end - 1


class MupsDelta(NamedTuple):
    """Set difference produced by one window or edit operation."""

    removed: tuple[MupsRecord, ...]
    added: tuple[MupsRecord, ...]

    @property
    def is_empty(self) -> bool:
        return not self.removed and not self.added

    def __len__(self) -> int:
        return len(self.removed) + len(self.added)


class MupsSet:
    """Non-nested MUPS collection ordered by start position."""

    __slots__ = ("records", "_by_center", "_by_start", "_by_end")

    def __init__(self, records: Iterable[MupsRecord] = ()) -> None:
        self.records: list[MupsRecord] = sorted(records)
        self._by_center = {r.center: r for r in self.records}
        self._by_start = {r.start: r for r in self.records}
        self._by_end = {r.end: r for r in self.records}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __eq__(self, other) -> bool:
        return isinstance(other, MupsSet) and self.records == other.records

    def at_center(self, k: int) -> MupsRecord | None:
        return self._by_center.get(k)

    def by_start(self, pos: int) -> MupsRecord:
        return self._by_start[pos]

    def by_end(self, pos: int) -> MupsRecord:
        return self._by_end[pos]

    def add(self, rec: MupsRecord) -> None:
        from bisect import insort
        if rec.center in self._by_center:
            raise StateError(f"center {rec.center} already holds a MUPS")
        insort(self.records, rec)
        self._by_center[rec.center] = rec
        self._by_start[rec.start] = rec
        self._by_end[rec.end] = rec
        # non-nesting: start order must agree with end order
        i = self.records.index(rec)
        if i > 0 and self.records[i - 1].end >= rec.end:
            raise StateError(f"nested MUPS at {rec}")
        if i + 1 < len(self.records) and self.records[i + 1].end <= rec.end:
            raise StateError(f"nested MUPS at {rec}")

    def remove(self, rec: MupsRecord) -> None:
        self.records.remove(rec)
        del self._by_center[rec.center]
        del self._by_start[rec.start]
        del self._by_end[rec.end]

    def copy(self) -> "MupsSet":
        return MupsSet(self.records)


def minimal_unique_radius(k: int, max_arm: int,
                          unique_at: Callable[[int, int], bool]) -> int | None:
    """Smallest arm r in [r0, max_arm] whose palindrome at center k is
    unique, or None; ``unique_at(start, end)`` reports substring
    uniqueness.  Relies on uniqueness being monotone in r."""
    r0 = 0 if k & 1 else 1
    if max_arm < r0:
        return None
    lo_s = (k + 2) // 2
    hi_s = (k + 1) // 2
    if not unique_at(lo_s - max_arm, hi_s + max_arm):
        return None
    lo, hi = r0, max_arm
    while lo < hi:
        mid = (lo + hi) // 2
        if unique_at(lo_s - mid, hi_s + mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def compute_static(text: Text, lce, arms: PalArmTable) -> MupsSet:
    """MUPS set of a static text, using the index structures built on it."""

    def unique_at(s: int, e: int) -> bool:
        return lce.count_occurrences(s, e) == 1

    n = len(text)
    records = []
    for k in range(2 * text.origin - 1, 2 * (text.origin + n - 1)):
        r = minimal_unique_radius(k, arms.clipped_arm(k), unique_at)
        if r is not None:
            records.append(MupsRecord((k + 2) // 2 - r, (k + 1) // 2 + r))
    return MupsSet(records)


def _window_counter(data, b: int, e: int, cap: int = 2) -> Callable[[int, int], int]:
    """Occurrence counter for substrings of the window [b, e] of ``data``
    (absolute 1-based positions, data[0] is position 1), capped at ``cap``."""

    def count(s: int, t: int, cap: int = cap) -> int:
        needle = bytes(data[s - 1:t])
        found = 0
        at = data.find(needle, b - 1, e)
        while at >= 0:
            found += 1
            if found >= cap:
                break
            at = data.find(needle, at + 1, e)
        return found

    return count


def mups_of_window(data, b: int, e: int) -> list[MupsRecord]:
    """MUPS records of the window [b, e] of ``data`` computed from scratch:
    fresh arm table plus direct buffer counting."""
    if e < b:
        return []
    arms = PalArmTable.build(data[b - 1:e], origin=b)
    count = _window_counter(data, b, e)

    def unique_at(s: int, t: int) -> bool:
        return count(s, t) == 1

    records = []
    for k in range(2 * b - 1, 2 * e):
        r = minimal_unique_radius(k, arms.clipped_arm(k), unique_at)
        if r is not None:
            records.append(MupsRecord((k + 2) // 2 - r, (k + 1) // 2 + r))
    return records


def substitution_delta(mups: MupsSet, text: Text, pos: int, code: int) -> MupsDelta:
    """Delta turning the MUPS set of ``text`` into that of the text with
    ``code`` substituted at ``pos``; never mutates anything."""
    if text.code_at(pos) == code:
        return MupsDelta((), ())
    edited = bytearray(text.codes)
    edited[pos - text.origin] = code
    new_records = mups_of_window(edited, text.origin, text.end)
    old = set(mups.records)
    new = set(new_records)
    return MupsDelta(tuple(sorted(old - new)), tuple(sorted(new - old)))


class SlidingMupsTracker:
    """Window buffer, arm table, and current MUPS set, updated per slide."""

    __slots__ = ("arms", "mups")

    def __init__(self) -> None:
        self.arms = PalArmTable()
        self.mups = MupsSet()

    @property
    def data(self) -> bytearray:
        return self.arms.data

    @property
    def window(self) -> tuple[int, int]:
        return self.arms.window

    def _recompute(self, centers: Iterable[int]) -> MupsDelta:
        """Refresh the stored record at each candidate center against the
        current window; returns the resulting delta, already applied.
        Removals are applied before additions so that no transiently
        nested intermediate state is ever materialized."""
        b, e = self.arms.window
        count = _window_counter(self.data, b, e) if e >= b else None

        def unique_at(s: int, t: int) -> bool:
            return count(s, t) == 1

        changes: list[tuple[MupsRecord | None, MupsRecord | None]] = []
        for k in sorted(centers):
            old = self.mups.at_center(k)
            new = None
            if e >= b and 2 * b - 1 <= k <= 2 * e - 1:
                r = minimal_unique_radius(k, self.arms.clipped_arm(k), unique_at)
                if r is not None:
                    new = MupsRecord((k + 2) // 2 - r, (k + 1) // 2 + r)
            if old != new:
                changes.append((old, new))
        removed = sorted(old for old, _ in changes if old is not None)
        added = sorted(new for _, new in changes if new is not None)
        for rec in removed:
            self.mups.remove(rec)
        for rec in added:
            self.mups.add(rec)
        return MupsDelta(tuple(removed), tuple(added))

    def pushback_delta(self, code: int) -> MupsDelta:
        """Append one character; returns the MUPS changes."""
        self.arms.pushback(code)
        b, e = self.arms.window
        data = self.data
        count = _window_counter(data, b, e, cap=3)
        centers: set[int] = set()
        # walk palindromic suffixes from longest to shortest; counts along
        # the chain only grow as the suffix shrinks
        for k in range(self.arms.c_suf, 2 * e):
            arm = self.arms.clipped_arm(k)
            if (k + 1) // 2 + arm != e:
                continue
            s = (k + 2) // 2 - arm
            c = count(s, e)
            if c >= 3:
                break
            centers.add(k)
            if c == 2:
                length = e - s + 1
                at = data.find(data[s - 1:e], b - 1, e)
                while at >= 0:
                    centers.add(2 * (at + 1) + length - 2)
                    at = data.find(data[s - 1:e], at + 1, e)
        return self._recompute(centers)

    def pop_delta(self) -> MupsDelta:
        """Drop the first window character; returns the MUPS changes."""
        b, e = self.arms.window
        if e < b:
            raise StateError("pop from an empty window")
        data = self.data
        count = _window_counter(data, b, e, cap=3)
        centers: set[int] = set()
        # palindromic prefixes of the outgoing window, longest first
        prefix_centers = [k for k in range(b + e - 1, 2 * b - 2, -1)
                          if (k + 2) // 2 - self.arms.clipped_arm(k) == b]
        for k in prefix_centers:
            t = (k + 1) // 2 + self.arms.clipped_arm(k)
            c = count(b, t)
            if c >= 3:
                break
            centers.add(k)
            if c == 2:
                length = t - b + 1
                at = data.find(data[b - 1:t], b, e)  # the occurrence not at b
                if at >= 0:
                    centers.add(2 * (at + 1) + length - 2)
        self.arms.pop()
        return self._recompute(centers)
