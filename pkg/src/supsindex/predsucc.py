"""Dynamic ordered set of positive integer positions.

Hierarchical 64-bit bitset: level 0 holds one membership bit per
position, and every higher level keeps one summary bit per word below,
until a single word remains.  Queries and updates touch one word per
level, so they cost O(log_64 U) word operations -- at most four for any
universe this package ever sees.  The universe grows on demand, which
keeps absolute sliding-window positions usable without a wraparound
scheme.

Single-writer; concurrent reads are safe between mutations.
"""

from __future__ import annotations

from .errors import RangeError

_WORD = 64
_MASK = _WORD - 1


class OrderedPosSet:
    """Membership plus pred/succ/rank over positions 1..universe."""

    __slots__ = ("_levels", "_size")

    def __init__(self, universe: int = 64) -> None:
        if universe < 1:
            raise ValueError("universe must be at least 1")
        self._levels: list[list[int]] = []
        self._size = 0
        words = (universe >> 6) + 1
        while True:
            self._levels.append([0] * words)
            if words == 1:
                break
            words = (words + _MASK) >> 6

    def _capacity(self) -> int:
        return len(self._levels[0]) * _WORD

    def _ensure(self, x: int) -> None:
        if x < self._capacity():
            return
        words = (x >> 6) + 1
        level0 = self._levels[0]
        level0.extend([0] * (words - len(level0)))
        # rebuild the summary levels from scratch; growth is rare
        levels = [level0]
        while len(levels[-1]) > 1:
            below = levels[-1]
            up = [0] * ((len(below) + _MASK) >> 6)
            for i, w in enumerate(below):
                if w:
                    up[i >> 6] |= 1 << (i & _MASK)
            levels.append(up)
        self._levels = levels

    def __len__(self) -> int:
        return self._size

    def __contains__(self, x: int) -> bool:
        if x < 1 or x >= self._capacity():
            return False
        return bool(self._levels[0][x >> 6] & (1 << (x & _MASK)))

    def insert(self, x: int) -> None:
        if x < 1:
            raise RangeError(f"positions are 1-based, got {x}")
        self._ensure(x)
        if x in self:
            return
        self._size += 1
        idx = x
        for words in self._levels:
            w, o = idx >> 6, idx & _MASK
            words[w] |= 1 << o
            idx = w

    def delete(self, x: int) -> None:
        """Remove x; deleting an absent element raises KeyError, because in
        this package that means the MUPS bookkeeping went wrong."""
        if x not in self:
            raise KeyError(x)
        self._size -= 1
        idx = x
        for words in self._levels:
            w, o = idx >> 6, idx & _MASK
            words[w] &= ~(1 << o)
            if words[w]:
                break
            idx = w

    def _descend_high(self, level: int, idx: int) -> int:
        for d in range(level - 1, -1, -1):
            word = self._levels[d][idx]
            idx = (idx << 6) + (word.bit_length() - 1)
        return idx

    def _descend_low(self, level: int, idx: int) -> int:
        for d in range(level - 1, -1, -1):
            word = self._levels[d][idx]
            idx = (idx << 6) + ((word & -word).bit_length() - 1)
        return idx

    def _prev(self, bit: int) -> int | None:
        """Largest member <= bit, or None."""
        if self._size == 0 or bit < 1:
            return None
        bit = min(bit, self._capacity() - 1)
        idx = bit
        for d, words in enumerate(self._levels):
            w, o = idx >> 6, idx & _MASK
            below = o + 1 if d == 0 else o
            m = words[w] & ((1 << below) - 1)
            if m:
                found = (w << 6) + (m.bit_length() - 1)
                return self._descend_high(d, found)
            idx = w
        return None

    def _next(self, bit: int) -> int | None:
        """Smallest member >= bit, or None."""
        if self._size == 0 or bit >= self._capacity():
            return None
        bit = max(bit, 1)
        idx = bit
        for d, words in enumerate(self._levels):
            w, o = idx >> 6, idx & _MASK
            above = o if d == 0 else o + 1
            m = words[w] >> above << above if above < _WORD else 0
            if m:
                found = (w << 6) + ((m & -m).bit_length() - 1)
                return self._descend_low(d, found)
            idx = w
        return None

    def pred(self, x: int) -> int | None:
        """Largest member strictly below x, or None."""
        return self._prev(x - 1)

    def pred_eq(self, x: int) -> int | None:
        return self._prev(x)

    def succ(self, x: int) -> int | None:
        """Smallest member strictly above x, or None."""
        return self._next(x + 1)

    def succ_eq(self, x: int) -> int | None:
        return self._next(x)

    def rank(self, x: int) -> int:
        """Number of members strictly below x."""
        if x <= 1 or self._size == 0:
            return 0
        x = min(x, self._capacity())
        level0 = self._levels[0]
        w, o = x >> 6, x & _MASK
        total = sum(word.bit_count() for word in level0[:w])
        if o:
            total += (level0[w] & ((1 << o) - 1)).bit_count()
        return total

    def __iter__(self):
        x = self._next(1)
        while x is not None:
            yield x
            x = self._next(x + 1)

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    def copy(self) -> "OrderedPosSet":
        dup = OrderedPosSet.__new__(OrderedPosSet)
        dup._levels = [list(words) for words in self._levels]
        dup._size = self._size
        return dup
