"""Set-partition and subset enumeration in canonical order."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every restricted growth string of length ``n`` in lexicographic order.

    A string ``s`` satisfies ``s[0] == 0`` and ``s[i] <= 1 + max(s[:i])``; these
    strings are in bijection with the set partitions of ``n`` labelled items.
    """
    if n == 0:
        yield ()
        return
    s = [0] * n
    peak = [0] * n  # peak[i] = max(s[:i + 1])
    while True:
        yield tuple(s)
        i = n - 1
        while i > 0 and s[i] > peak[i - 1]:
            i -= 1
        if i == 0:
            return
        s[i] += 1
        peak[i] = max(peak[i - 1], s[i])
        for j in range(i + 1, n):
            s[j] = 0
            peak[j] = peak[i]


def set_partitions(items: Sequence[T]) -> Iterator[list[list[T]]]:
    """Yield each partition of ``items`` once, as a list of blocks.

    Blocks appear in order of their first item, and items keep their input order
    within a block.
    """
    items = list(items)
    for rgs in restricted_growth_strings(len(items)):
        blocks: list[list[T]] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for item, label in zip(items, rgs):
            blocks[label].append(item)
        yield blocks


def subsets(n: int) -> Iterator[frozenset[int]]:
    """Yield all subsets of ``range(n)`` by binary counting."""
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def subsets_by_size(n: int, *, nonempty: bool = False) -> Iterator[frozenset[int]]:
    """Yield subsets of ``range(n)`` ordered by size, then lexicographically."""
    for k in range(1 if nonempty else 0, n + 1):
        for combo in combinations(range(n), k):
            yield frozenset(combo)


def bell(n: int) -> int:
    """Bell number via the Bell triangle (independent of any enumeration)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def granule_count(n: int) -> int:
    """Number of nonempty equivalence granules over all subsets of an n-set."""
    return sum(comb(n, k) * bell(k) for k in range(1, n + 1))
