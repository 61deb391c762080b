"""Bidirectional longest-common-extension index over a fixed text.

The index is built once over ``T + '#' + reverse(T) + '$'`` with the two
sentinels mapped below every character code.  After an
O(n log n)-ish construction (suffix order, LCP array, sparse-table
minimum) it answers forward/forward, backward/backward and
forward/backward extension queries in O(1), which is all the palindrome
machinery needs.  The suffix order doubles as an occurrence counter for
substrings of T.

Immutable after construction; safe to share between threads.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .core import Text
from .errors import RangeError

_NUMPY_AT = 1024  # below this, sorted() on suffix slices beats numpy overhead


def suffix_array(buf: bytes) -> list[int]:
    """0-based suffix order of buf."""
    n = len(buf)
    if n == 0:
        return []
    if n <= _NUMPY_AT:
        return sorted(range(n), key=lambda i: buf[i:])
    return _suffix_array_numpy(buf)


def _suffix_array_numpy(buf: bytes) -> list[int]:
    import numpy as np

    a = np.frombuffer(buf, dtype=np.uint8)
    n = len(a)
    rank = a.astype(np.int64)
    k = 1
    while True:
        key2 = np.full(n, -1, dtype=np.int64)
        if k < n:
            key2[:-k] = rank[k:]
        order = np.lexsort((key2, rank))
        r_o = rank[order]
        k_o = key2[order]
        bump = np.empty(n, dtype=np.int64)
        bump[0] = 0
        bump[1:] = (r_o[1:] != r_o[:-1]) | (k_o[1:] != k_o[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(bump)
        rank = new_rank
        if rank[order[-1]] == n - 1:
            return order.tolist()
        k *= 2


def lcp_array(buf: bytes, sa: list[int]) -> list[int]:
    """Kasai LCP: lcp[r] = common prefix length of sa[r-1] and sa[r]."""
    n = len(buf)
    inv = [0] * n
    for r, p in enumerate(sa):
        inv[p] = r
    lcp = [0] * n
    h = 0
    for p in range(n):
        r = inv[p]
        if r > 0:
            q = sa[r - 1]
            while p + h < n and q + h < n and buf[p + h] == buf[q + h]:
                h += 1
            lcp[r] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


class _MinSparse:
    """Static range-minimum over values, query by value only."""

    __slots__ = ("_rows", "_np")

    def __init__(self, values: list[int]) -> None:
        n = len(values)
        self._np = n > _NUMPY_AT
        if self._np:
            import numpy as np

            rows = [np.asarray(values, dtype=np.int32)]
            span = 1
            while 2 * span <= n:
                prev = rows[-1]
                rows.append(np.minimum(prev[:-span], prev[span:]))
                span *= 2
            self._rows = rows
        else:
            rows = [list(values)]
            span = 1
            while 2 * span <= n:
                prev = rows[-1]
                rows.append([min(prev[i], prev[i + span])
                             for i in range(len(prev) - span)])
                span *= 2
            self._rows = rows

    def min(self, lo: int, hi: int) -> int:
        """Minimum of values[lo..hi], inclusive; lo <= hi."""
        level = (hi - lo + 1).bit_length() - 1
        row = self._rows[level]
        a = row[lo]
        b = row[hi - (1 << level) + 1]
        return int(a if a < b else b)


class BidirectionalLceIndex:
    """Suffix-order index over T # T^R $ answering extension queries."""

    __slots__ = ("n", "_buf", "_sa", "_inv", "_sparse", "_tcount")

    def __init__(self, text: Text) -> None:
        n = len(text)
        if n == 0:
            raise RangeError("cannot build an LCE index over an empty text")
        codes = text.codes
        # character c -> c + 2; '#' -> 1; '$' -> 0
        buf = bytearray(n * 2 + 2)
        for i, c in enumerate(codes):
            buf[i] = c + 2
            buf[2 * n - i] = c + 2
        buf[n] = 1
        buf[2 * n + 1] = 0
        self.n = n
        self._buf = bytes(buf)
        self._sa = suffix_array(self._buf)
        lcp = lcp_array(self._buf, self._sa)
        inv = [0] * len(self._sa)
        for r, p in enumerate(self._sa):
            inv[p] = r
        self._inv = inv
        self._sparse = _MinSparse(lcp)
        # prefix counts of suffix-order entries that start inside T
        tcount = [0] * (len(self._sa) + 1)
        for r, p in enumerate(self._sa):
            tcount[r + 1] = tcount[r] + (1 if p < n else 0)
        self._tcount = tcount

    # -- raw machinery ------------------------------------------------------

    def _lce0(self, a: int, b: int) -> int:
        """LCP length of the suffixes of the sentinel buffer at 0-based a, b."""
        if a == b:
            return len(self._buf) - a
        ra, rb = self._inv[a], self._inv[b]
        if ra > rb:
            ra, rb = rb, ra
        return self._sparse.min(ra + 1, rb)

    def _check(self, pos: int) -> None:
        if not 1 <= pos <= self.n:
            raise RangeError(f"position {pos} outside [1, {self.n}]")

    # -- the three extension kinds ------------------------------------------

    def lce_ff(self, i: int, j: int) -> int:
        """Match length of T[i..] against T[j..], both running forward."""
        self._check(i)
        self._check(j)
        return min(self._lce0(i - 1, j - 1), self.n - max(i, j) + 1)

    def lce_bb(self, i: int, j: int) -> int:
        """Match length of T[..i] against T[..j], both running backward."""
        self._check(i)
        self._check(j)
        a = 2 * self.n + 1 - i
        b = 2 * self.n + 1 - j
        return min(self._lce0(a, b), min(i, j))

    def lce_fb(self, i: int, j: int) -> int:
        """Match length of T[i..] forward against T[..j] backward."""
        self._check(i)
        self._check(j)
        return min(self._lce0(i - 1, 2 * self.n + 1 - j),
                   self.n - i + 1, j)

    # -- palindrome arms ------------------------------------------------------

    def max_pal_radius_at(self, k: int) -> int:
        """Arm of the maximal palindrome at doubled-axis center k."""
        if not 1 <= k <= 2 * self.n - 1:
            raise RangeError(f"center {k} outside [1, {2 * self.n - 1}]")
        rs = (k + 1) // 2 + 1
        ls = (k + 2) // 2 - 1
        if rs > self.n or ls < 1:
            return 0
        return self.lce_fb(rs, ls)

    def max_pal_radius_skipping(self, k: int, edited: int, new_code: int) -> int:
        """Arm of the maximal palindrome at center k in the text obtained by
        substituting ``new_code`` at position ``edited``, computed on the
        original index by jumping over the edited position."""
        if not 1 <= k <= 2 * self.n - 1:
            raise RangeError(f"center {k} outside [1, {2 * self.n - 1}]")
        self._check(edited)
        n = self.n
        buf = self._buf
        rs = (k + 1) // 2 + 1
        ls = (k + 2) // 2 - 1
        r = 0
        while True:
            lp = ls - r
            rp = rs + r
            if lp < 1 or rp > n:
                return r
            d = self.lce_fb(rp, lp)
            dl = lp - edited if lp >= edited else d + 1
            dr = edited - rp if rp <= edited else d + 1
            clean = min(dl, dr)
            if d < clean:
                return r + d
            # the comparison at offset `clean` involves the edited position
            r += clean
            lp = ls - r
            rp = rs + r
            if lp < 1 or rp > n:
                return r
            a = new_code + 2 if lp == edited else buf[lp - 1]
            b = new_code + 2 if rp == edited else buf[rp - 1]
            if a != b:
                return r
            r += 1

    # -- occurrence counting --------------------------------------------------

    def count_occurrences(self, start: int, end: int) -> int:
        """Occurrences in T of the substring T[start..end]."""
        self._check(start)
        self._check(end)
        if end < start:
            raise RangeError(f"invalid interval [{start}, {end}]")
        w = self._buf[start - 1:end]
        ln = len(w)
        buf = self._buf
        lo = bisect_left(self._sa, w, key=lambda p: buf[p:p + ln])
        hi = bisect_right(self._sa, w, key=lambda p: buf[p:p + ln])
        return self._tcount[hi] - self._tcount[lo]
