"""Canonical-order generators and exact counts for matching families.

The generator order for all matchings is: the smallest unmatched position is
paired with each larger free position in ascending order, recursively. It is
deterministic and replayable. Noncrossing matchings are generated through
their LR words (lexicographic, L before R) rather than by filtering, since
the Catalan numbers grow far slower than the double factorials.

Enumeration sizes are capped (default 8, overridable through the
MATCHBIJ_ENUM_CAP environment variable). Catalan-bounded generators accept
slightly larger sizes than the full double-factorial ones.
"""

import os
from math import comb
from typing import Iterator

from .core import Matching, matching_from_lr, nep

__all__ = [
    "EnumerationCapError",
    "DEFAULT_ENUM_CAP",
    "NONCROSSING_CAP_EXTRA",
    "enum_cap",
    "double_factorial",
    "catalan",
    "all_matchings",
    "noncrossing_matchings",
    "ncn_elements",
]

DEFAULT_ENUM_CAP = 8
# Catalan growth is ~4^n against (2n-1)!! for the full set, so Catalan-bounded
# streams stay cheap a few sizes past the full-enumeration cap.
NONCROSSING_CAP_EXTRA = 4


class EnumerationCapError(ValueError):
    """Raised when an enumeration request exceeds the configured cap."""


def enum_cap() -> int:
    """The enumeration cap for full double-factorial streams."""
    raw = os.environ.get("MATCHBIJ_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


def double_factorial(m: int) -> int:
    """(m)!! for odd positive m; counts complete matchings when m = 2n - 1."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"double factorial defined here for odd positive m, got {m}")
    out = 1
    for k in range(3, m + 1, 2):
        out *= k
    return out


def catalan(n: int) -> int:
    """The nth Catalan number; counts noncrossing matchings with n edges."""
    if n < 0:
        raise ValueError(f"catalan defined for n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds the enumeration cap {cap} for {what}: "
            f"(2n-1)!! = {double_factorial(2 * n - 1)} matchings at this size "
            f"(set MATCHBIJ_ENUM_CAP to raise the cap)"
        )


def all_matchings(n: int) -> Iterator[Matching]:
    """Every complete matching with n edges, in canonical order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_cap(n, enum_cap(), "full enumeration")
    size = 2 * n
    partner = [-1] * size

    def fill(lo: int) -> Iterator[Matching]:
        while lo < size and partner[lo] >= 0:
            lo += 1
        if lo == size:
            yield Matching(n, tuple(partner))
            return
        for w in range(lo + 1, size):
            if partner[w] < 0:
                partner[lo] = w
                partner[w] = lo
                yield from fill(lo + 1)
                partner[lo] = -1
                partner[w] = -1

    yield from fill(0)


def noncrossing_matchings(n: int) -> Iterator[Matching]:
    """Every noncrossing matching with n edges, via LR-word generation."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _check_cap(n, enum_cap() + NONCROSSING_CAP_EXTRA, "noncrossing enumeration")

    def words(opens: int, closes: int, prefix: list[str]) -> Iterator[str]:
        if opens == n and closes == n:
            yield "".join(prefix)
            return
        if opens < n:
            prefix.append("L")
            yield from words(opens + 1, closes, prefix)
            prefix.pop()
        if closes < opens:
            prefix.append("R")
            yield from words(opens, closes + 1, prefix)
            prefix.pop()

    for word in words(0, 0, []):
        yield matching_from_lr(word)


def ncn_elements(n: int):
    """Every noncrossing matching paired with each choice of nested pair.

    For each noncrossing matching M the stream yields (M, no pair) followed
    by (M, p) for every nested pair p of M.
    """
    # Imported here: bijections sits above this module in the import order.
    from .bijections import NCNTriple

    for m in noncrossing_matchings(n):
        yield NCNTriple(m, None)
        for p in nep(m):
            yield NCNTriple(m, p)
