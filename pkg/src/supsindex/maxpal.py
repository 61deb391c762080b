"""Maximal palindrome arms per center, online and over a sliding window.

The table stores one arm length per doubled-axis center key.  Appending a
character runs the online update: try to extend the longest palindromic
suffix, otherwise finalize it and scan rightward, copying mirrored arms
while they stay strictly inside the current suffix palindrome.  Removing
the first character only advances the window start -- stored arms may
then stick out past the left edge and get clipped at query time -- except
when the whole window is a palindrome, in which case mirrored arms are
copied forward until a palindromic suffix of the shrunken window appears.

The center of the longest palindromic suffix never decreases, so the
total update work is linear in the number of operations.  Arms for
centers beyond that suffix center are not stored; ``clipped_arm``
reconstructs them from their mirror in O(1).

Single-writer; queries are safe between mutations.
"""

from __future__ import annotations

from .errors import RangeError, StateError


class PalArmTable:
    """Arm lengths for every center of a sliding window."""

    __slots__ = ("data", "origin", "_b", "_e", "_arms", "_k0", "_c_suf")

    def __init__(self, data: bytearray | None = None, origin: int = 1) -> None:
        self.data = bytearray() if data is None else data
        self.origin = origin
        self._b = origin           # window [b, e]; empty when e < b
        self._e = origin - 1
        self._arms: list[int] = []
        self._k0 = 2 * origin - 1  # center key of arms[0]
        self._c_suf: int | None = None

    @classmethod
    def build(cls, data, origin: int = 1) -> "PalArmTable":
        """Static table over a full buffer (no window clipping yet)."""
        buf = data if isinstance(data, bytearray) else bytearray(data)
        table = cls(buf, origin)
        for code in bytes(buf):
            table.pushback(code)
        return table

    @property
    def window(self) -> tuple[int, int]:
        return self._b, self._e

    @property
    def c_suf(self) -> int | None:
        """Center key of the longest palindromic suffix of the window."""
        return self._c_suf

    def __len__(self) -> int:
        return self._e - self._b + 1

    # -- mutations ----------------------------------------------------------

    def pushback(self, code: int) -> None:
        """Extend the window with one character.

        The character is appended to the shared buffer unless the buffer
        already holds it (the static build path), in which case it is
        verified instead.
        """
        e = self._e + 1
        o = self.origin
        data = self.data
        si = e - o
        if si == len(data):
            data.append(code)
        elif data[si] != code:
            raise ValueError("pushed character disagrees with the buffer")
        self._e = e
        arms = self._arms
        k0 = self._k0
        need = (2 * e - 1) - k0 + 1
        if len(arms) < need:
            arms.extend([0] * (need - len(arms)))
        if self._c_suf is None:      # first character of an empty window
            self._c_suf = 2 * e - 1
            return
        b = self._b
        x = code
        k = self._c_suf
        while True:
            # the palindrome at k is a suffix of the previous window
            a = (e - 1) - (k + 1) // 2
            left = (k + 2) // 2 - a
            if left > b and data[left - 1 - o] == x:
                arms[k - k0] = a + 1
                self._c_suf = k
                return
            arms[k - k0] = a
            # scan right, copying mirrored arms that stay strictly inside
            k2 = k + 1
            while k2 < 2 * e - 1:
                lim = (e - 1) - (k2 + 1) // 2
                if lim <= 0:
                    break
                km = 2 * k - k2
                am = arms[km - k0]
                slack = (km + 2) // 2 - b
                if slack < am:
                    am = slack
                if am < lim:
                    arms[k2 - k0] = am
                    k2 += 1
                else:
                    break
            if k2 == 2 * e - 1:
                arms[k2 - k0] = 0
                self._c_suf = k2
                return
            k = k2

    def pop(self) -> None:
        """Drop the first window character."""
        b, e = self._b, self._e
        if e < b:
            raise StateError("pop from an empty window")
        if e == b:
            self._b = b + 1
            self._c_suf = None
            return
        mid = b + e - 1
        if self._c_suf != mid:       # window itself is not a palindrome
            self._b = b + 1
            return
        self._b = b + 1
        arms = self._arms
        k0 = self._k0
        j = 1
        while True:
            k2 = mid + j
            km = mid - j
            am = arms[km - k0]
            slack = (km + 2) // 2 - b
            if slack < am:
                am = slack
            arms[k2 - k0] = am
            if am == e - (k2 + 1) // 2:   # reaches the window end
                self._c_suf = k2
                return
            j += 1

    # -- queries ------------------------------------------------------------

    def clipped_arm(self, k: int) -> int:
        """True arm of the maximal palindrome at center k inside the window."""
        b, e = self._b, self._e
        if e < b:
            raise StateError("empty window has no centers")
        if not 2 * b - 1 <= k <= 2 * e - 1:
            raise RangeError(f"center {k} outside [{2 * b - 1}, {2 * e - 1}]")
        c = self._c_suf
        k0 = self._k0
        if k <= c:
            a = self._arms[k - k0]
        else:
            km = 2 * c - k
            a = self._arms[km - k0]
            slack = (km + 2) // 2 - b
            if slack < a:
                a = slack
        left = (k + 2) // 2 - b
        right = e - (k + 1) // 2
        if left < a:
            a = left
        if right < a:
            a = right
        return a

    def snapshot(self) -> tuple:
        """Hashable summary of the logical state, for digests and tests."""
        b, e = self._b, self._e
        if e < b:
            return (b, e, None, ())
        return (b, e, self._c_suf,
                tuple(self.clipped_arm(k) for k in range(2 * b - 1, 2 * e)))
