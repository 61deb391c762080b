"""Width-bounded dynamic range-minimum arrays.

``LogRmqArray`` holds a dynamic integer sequence and answers leftmost
range-minimum queries whose width never exceeds a construction-time
limit.  The sequence is split into large blocks of around ``width_limit``
elements, so a query touches at most a handful of blocks.  Inside a
block, elements sit in small blocks of roughly 16 values; each small
block keeps, per index j, a bitmask of the positions i <= j whose value
is strictly smaller than everything after them up to j.  A query inside a
small block is then one mask lookup plus a least-set-bit.  Small-block
minima form the next level, recursively, until one small block remains,
so a block query decomposes into at most two mask lookups per level plus
one recursion.

Substitutions rebuild the one touched small block per level; inserts and
deletes additionally split or merge small blocks, and large blocks split
above twice the nominal size and merge below half of it.  For a fixed
width limit every operation is amortized O(1); ``rebuild_work`` counts
small-block rebuild steps so tests can pin that bound.

All public indices are 1-based, matching text positions elsewhere.
Ties break to the leftmost index everywhere.
"""

from __future__ import annotations

from bisect import bisect_right

from .errors import RangeError, WidthError

_SB_TARGET = 16   # nominal small-block size
_SB_MAX = 32      # split a small block beyond this
_SB_MIN = 8       # merge a small block below this (when it has siblings)


class _Stats:
    __slots__ = ("rebuild_work",)

    def __init__(self) -> None:
        self.rebuild_work = 0


def _masks_of(values: list[int], stats: _Stats) -> list[int]:
    """Per-index bitmask of prefix positions that are suffix minima.

    Bit i is set in masks[j] iff values[i] <= values[t] for all i < t <= j,
    so the leftmost minimum of [i..j] is the least set bit >= i in
    masks[j].
    """
    stats.rebuild_work += len(values)
    masks = []
    mask = 0
    stack: list[tuple[int, int]] = []
    for j, v in enumerate(values):
        while stack and stack[-1][0] > v:
            mask &= ~(1 << stack[-1][1])
            stack.pop()
        stack.append((v, j))
        mask |= 1 << j
        masks.append(mask)
    return masks


class _Leveled:
    """One large block: small blocks plus the recursive minima levels."""

    __slots__ = ("sbs", "masks", "up", "total", "_off", "stats")

    def __init__(self, values: list[int], stats: _Stats) -> None:
        self.stats = stats
        self.total = len(values)
        self._off: list[int] | None = None
        if not values:
            self.sbs: list[list[int]] = [[]]
            self.masks: list[list[int]] = [[]]
            self.up: _Leveled | None = None
            return
        self.sbs = [values[i:i + _SB_TARGET]
                    for i in range(0, len(values), _SB_TARGET)]
        if len(self.sbs) >= 2 and len(self.sbs[-1]) < _SB_MIN:
            tail = self.sbs.pop()
            self.sbs[-1] = self.sbs[-1] + tail
        self.masks = [_masks_of(sb, stats) for sb in self.sbs]
        self.up = (_Leveled([min(sb) for sb in self.sbs], stats)
                   if len(self.sbs) >= 2 else None)

    # -- indexing ---------------------------------------------------------

    def _offsets(self) -> list[int]:
        off = self._off
        if off is None:
            off = [0]
            for sb in self.sbs:
                off.append(off[-1] + len(sb))
            self._off = off
        return off

    def _locate(self, i: int) -> tuple[int, int]:
        """Small-block index and local offset for element i (0-based);
        i == total maps to one-past-the-end of the last small block."""
        off = self._offsets()
        u = bisect_right(off, i) - 1
        if u >= len(self.sbs):
            u = len(self.sbs) - 1
        return u, i - off[u]

    def to_list(self) -> list[int]:
        out: list[int] = []
        for sb in self.sbs:
            out.extend(sb)
        return out

    # -- queries ----------------------------------------------------------

    def _sb_min(self, u: int, lo: int, hi: int) -> tuple[int, int]:
        """(value, local index) of the leftmost minimum of sbs[u][lo..hi]."""
        m = self.masks[u][hi] >> lo << lo
        pos = (m & -m).bit_length() - 1
        return self.sbs[u][pos], pos

    def query(self, i: int, j: int) -> tuple[int, int]:
        """(value, index) of the leftmost minimum of elements i..j (0-based)."""
        ui, oi = self._locate(i)
        uj, oj = self._locate(j)
        off = self._offsets()
        if ui == uj:
            v, pos = self._sb_min(ui, oi, oj)
            return v, off[ui] + pos
        v, pos = self._sb_min(ui, oi, len(self.sbs[ui]) - 1)
        best = (v, off[ui] + pos)
        if uj - ui >= 2:
            vv, t = self.up.query(ui + 1, uj - 1)
            if vv < best[0]:
                _, pos = self._sb_min(t, 0, len(self.sbs[t]) - 1)
                best = (vv, off[t] + pos)
        v, pos = self._sb_min(uj, 0, oj)
        if v < best[0]:
            best = (v, off[uj] + pos)
        return best

    # -- updates ----------------------------------------------------------

    def _remask(self, u: int) -> None:
        self.masks[u] = _masks_of(self.sbs[u], self.stats)

    def _lift(self, u: int) -> None:
        if self.up is not None:
            self.up.substitute(u, min(self.sbs[u]))

    def _make_up(self) -> None:
        if self.up is None and len(self.sbs) >= 2:
            self.up = _Leveled([min(sb) for sb in self.sbs], self.stats)
        elif self.up is not None and len(self.sbs) == 1:
            self.up = None

    def substitute(self, i: int, v: int) -> None:
        u, o = self._locate(i)
        self.sbs[u][o] = v
        self._remask(u)
        self._lift(u)

    def insert(self, i: int, v: int) -> None:
        u, o = self._locate(i)
        sb = self.sbs[u]
        sb.insert(o, v)
        self.total += 1
        self._off = None
        if len(sb) > _SB_MAX:
            half = len(sb) // 2
            left, right = sb[:half], sb[half:]
            self.sbs[u] = left
            self.sbs.insert(u + 1, right)
            self.masks[u] = _masks_of(left, self.stats)
            self.masks.insert(u + 1, _masks_of(right, self.stats))
            if self.up is None:
                self._make_up()
            else:
                self.up.substitute(u, min(left))
                self.up.insert(u + 1, min(right))
        else:
            self._remask(u)
            self._lift(u)

    def delete(self, i: int) -> None:
        u, o = self._locate(i)
        sb = self.sbs[u]
        del sb[o]
        self.total -= 1
        self._off = None
        if len(self.sbs) == 1:
            self._remask(u)
            return
        if len(sb) >= _SB_MIN:
            self._remask(u)
            self._lift(u)
            return
        # merge the shrunken small block with a neighbor
        v = u + 1 if u + 1 < len(self.sbs) else u - 1
        lo, hi = (u, v) if u < v else (v, u)
        combined = self.sbs[lo] + self.sbs[hi]
        if len(combined) > _SB_MAX:
            half = len(combined) // 2
            self.sbs[lo] = combined[:half]
            self.sbs[hi] = combined[half:]
            self.masks[lo] = _masks_of(self.sbs[lo], self.stats)
            self.masks[hi] = _masks_of(self.sbs[hi], self.stats)
            if self.up is not None:
                self.up.substitute(lo, min(self.sbs[lo]))
                self.up.substitute(hi, min(self.sbs[hi]))
        else:
            self.sbs[lo] = combined
            del self.sbs[hi]
            self.masks[lo] = _masks_of(combined, self.stats)
            del self.masks[hi]
            if self.up is not None:
                self.up.delete(hi)
                if len(self.sbs) >= 2:
                    self.up.substitute(lo, min(combined))
            self._make_up()

    # -- checks -----------------------------------------------------------

    def check(self) -> None:
        assert sum(len(sb) for sb in self.sbs) == self.total
        if len(self.sbs) > 1:
            for sb in self.sbs:
                assert _SB_MIN <= len(sb) <= _SB_MAX, len(sb)
        if self.up is not None:
            assert self.up.total == len(self.sbs)
            assert self.up.to_list() == [min(sb) for sb in self.sbs]
            self.up.check()
        else:
            assert len(self.sbs) == 1


class LogRmqArray:
    """Dynamic integer array with O(1) width-bounded leftmost-min queries."""

    def __init__(self, values, width_limit: int) -> None:
        if width_limit < 1:
            raise ValueError("width_limit must be at least 1")
        values = list(values)
        self._wmax = width_limit
        self._n = len(values)
        self._stats = _Stats()
        nominal = width_limit
        chunks = [values[i:i + nominal] for i in range(0, len(values), nominal)]
        if len(chunks) >= 2 and 2 * len(chunks[-1]) < nominal:
            tail = chunks.pop()
            chunks[-1] = chunks[-1] + tail
        if not chunks:
            chunks = [[]]
        self._blocks = [_Leveled(chunk, self._stats) for chunk in chunks]
        self._boff: list[int] | None = None

    def __len__(self) -> int:
        return self._n

    @property
    def width_limit(self) -> int:
        return self._wmax

    @property
    def rebuild_work(self) -> int:
        """Total small-block rebuild steps since construction."""
        return self._stats.rebuild_work

    def _offsets(self) -> list[int]:
        off = self._boff
        if off is None:
            off = [0]
            for blk in self._blocks:
                off.append(off[-1] + blk.total)
            self._boff = off
        return off

    def _locate(self, i: int) -> tuple[int, int]:
        off = self._offsets()
        u = bisect_right(off, i) - 1
        if u >= len(self._blocks):
            u = len(self._blocks) - 1
        return u, i - off[u]

    def to_list(self) -> list[int]:
        out: list[int] = []
        for blk in self._blocks:
            out.extend(blk.to_list())
        return out

    def value_at(self, i: int) -> int:
        if not 1 <= i <= self._n:
            raise RangeError(f"index {i} outside [1, {self._n}]")
        u, o = self._locate(i - 1)
        blk = self._blocks[u]
        uu, oo = blk._locate(o)
        return blk.sbs[uu][oo]

    def query(self, i: int, j: int) -> int:
        """1-based index of the leftmost minimum of elements i..j."""
        if not 1 <= i <= j <= self._n:
            raise RangeError(f"range [{i}, {j}] outside [1, {self._n}]")
        if j - i + 1 > self._wmax:
            raise WidthError(
                f"query width {j - i + 1} exceeds the limit {self._wmax}")
        i0, j0 = i - 1, j - 1
        off = self._offsets()
        ub, _ = self._locate(i0)
        vb, _ = self._locate(j0)
        best_v = best_at = None
        for b in range(ub, vb + 1):
            blk = self._blocks[b]
            lo = max(i0 - off[b], 0)
            hi = min(j0 - off[b], blk.total - 1)
            v, pos = blk.query(lo, hi)
            if best_v is None or v < best_v:
                best_v, best_at = v, off[b] + pos
        return best_at + 1

    def substitute(self, i: int, v: int) -> None:
        if not 1 <= i <= self._n:
            raise RangeError(f"index {i} outside [1, {self._n}]")
        u, o = self._locate(i - 1)
        self._blocks[u].substitute(o, v)

    def _split_block(self, u: int) -> None:
        values = self._blocks[u].to_list()
        half = len(values) // 2
        self._blocks[u] = _Leveled(values[:half], self._stats)
        self._blocks.insert(u + 1, _Leveled(values[half:], self._stats))

    def insert(self, i: int, v: int) -> None:
        """Insert v before position i; i == len+1 appends."""
        if not 1 <= i <= self._n + 1:
            raise RangeError(f"insert position {i} outside [1, {self._n + 1}]")
        u, o = self._locate(i - 1)
        blk = self._blocks[u]
        blk.insert(o, v)
        self._n += 1
        self._boff = None
        if blk.total > 2 * self._wmax:
            self._split_block(u)

    def delete(self, i: int) -> None:
        if not 1 <= i <= self._n:
            raise RangeError(f"index {i} outside [1, {self._n}]")
        u, o = self._locate(i - 1)
        self._blocks[u].delete(o)
        self._n -= 1
        self._boff = None
        if len(self._blocks) > 1 and 2 * self._blocks[u].total < self._wmax:
            v = u + 1 if u + 1 < len(self._blocks) else u - 1
            lo, hi = (u, v) if u < v else (v, u)
            combined = self._blocks[lo].to_list() + self._blocks[hi].to_list()
            del self._blocks[hi]
            if len(combined) > 2 * self._wmax:
                half = len(combined) // 2
                self._blocks[lo] = _Leveled(combined[:half], self._stats)
                self._blocks.insert(lo + 1, _Leveled(combined[half:], self._stats))
            else:
                self._blocks[lo] = _Leveled(combined, self._stats)

    def check_invariants(self) -> None:
        """Assert the block-size and level invariants; test hook."""
        assert sum(blk.total for blk in self._blocks) == self._n
        if len(self._blocks) > 1:
            for blk in self._blocks:
                assert blk.total <= 2 * self._wmax, blk.total
                assert 2 * blk.total >= self._wmax, blk.total
        for blk in self._blocks:
            blk.check()
