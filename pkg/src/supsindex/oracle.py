"""Brute-force reference implementations for the differential tests.

Everything here works straight from the definitions with no code shared
with the engine modules: occurrence counting scans, palindromes expand
around their center, MUPS and SUPS enumerate substrings.  The string
oracles are quadratic to quartic and refuse inputs longer than
``ORACLE_LIMIT`` unless told otherwise, so a misdirected test cannot
silently burn hours.
"""

from __future__ import annotations

ORACLE_LIMIT = 64


def _checked(s: str, limit: int) -> str:
    if len(s) > limit:
        raise ValueError(
            f"oracle input of length {len(s)} exceeds the limit {limit}; "
            "brute-force references are for desk-scale verification only")
    return s


def oracle_count(s: str, w: str) -> int:
    """Occurrences of w in s, overlaps included; the empty string counts
    len(s) + 1 times and is therefore never unique."""
    if not w:
        return len(s) + 1
    count = 0
    at = s.find(w)
    while at >= 0:
        count += 1
        at = s.find(w, at + 1)
    return count


def oracle_max_arm(s: str, k: int) -> int:
    """Arm length of the maximal palindrome with doubled-axis center k,
    found by plain expansion; k runs over 1 .. 2*len(s)-1."""
    n = len(s)
    if not 1 <= k <= 2 * n - 1:
        raise ValueError(f"center {k} outside 1..{2 * n - 1}")
    left = (k + 2) // 2 - 2   # 0-based index of next char to match on the left
    right = (k + 1) // 2      # 0-based index on the right
    arm = 0
    while left >= 0 and right < n and s[left] == s[right]:
        arm += 1
        left -= 1
        right += 1
    return arm


def _palindromic_substrings(s: str) -> list[tuple[int, int]]:
    """All palindromic (start, end) intervals, 1-based, by expansion."""
    out = []
    n = len(s)
    for k in range(1, 2 * n):
        left = (k + 1) // 2 - 1
        right = k // 2
        while left >= 0 and right < n and s[left] == s[right]:
            out.append((left + 1, right + 1))
            left -= 1
            right += 1
    return out


def oracle_mups(s: str, limit: int = ORACLE_LIMIT) -> list[tuple[int, int]]:
    """All minimal unique palindromic substrings of s, sorted by start.

    Checks every palindromic substring directly: the substring must occur
    once and its one-step contraction must not be unique (the empty
    contraction is non-unique by convention).
    """
    _checked(s, limit)
    out = []
    for i, j in _palindromic_substrings(s):
        if oracle_count(s, s[i - 1:j]) != 1:
            continue
        if oracle_count(s, s[i:j - 1]) == 1:
            continue
        out.append((i, j))
    out.sort()
    return out


def oracle_mups_by_center(s: str, limit: int = ORACLE_LIMIT) -> list[tuple[int, int]]:
    """Second, independently ordered MUPS enumeration: walk each center
    outward and keep the first unique palindrome, if any."""
    _checked(s, limit)
    n = len(s)
    out = []
    for k in range(1, 2 * n):
        max_arm = oracle_max_arm(s, k)
        start_r = 0 if k % 2 else 1
        for r in range(start_r, max_arm + 1):
            i = (k + 2) // 2 - r
            j = (k + 1) // 2 + r
            if oracle_count(s, s[i - 1:j]) == 1:
                # contraction is the previous r (or the empty string)
                out.append((i, j))
                break
    out.sort()
    return out


def oracle_sups(s: str, p: int, q: int,
                limit: int = ORACLE_LIMIT) -> tuple[list[tuple[int, int]], int | None]:
    """All shortest unique palindromic substrings for [p, q].

    Returns (intervals sorted by start, common length) with (``[]``,
    ``None``) when no unique palindrome contains the query interval.
    """
    _checked(s, limit)
    if not 1 <= p <= q <= len(s):
        raise ValueError(f"query [{p}, {q}] outside [1, {len(s)}]")
    best: list[tuple[int, int]] = []
    best_len: int | None = None
    for i, j in _palindromic_substrings(s):
        if i > p or j < q:
            continue
        length = j - i + 1
        if best_len is not None and length > best_len:
            continue
        if oracle_count(s, s[i - 1:j]) != 1:
            continue
        if best_len is None or length < best_len:
            best = [(i, j)]
            best_len = length
        else:
            best.append((i, j))
    best.sort()
    return best, best_len


def oracle_rmq(values, i: int, j: int) -> int:
    """1-based index of the leftmost minimum of values[i..j], by scan."""
    if not 1 <= i <= j <= len(values):
        raise ValueError(f"range [{i}, {j}] outside [1, {len(values)}]")
    window = values[i - 1:j]
    return i + window.index(min(window))
