"""Colexicographic index over the text prefixes ending at suffixient positions.

``zft(P[1..i])`` returns a position ``s`` of the set maximising the longest
common suffix of ``P[1..i]`` and ``T[1..s]``. The prefixes are kept sorted
by their reversals; a query binary-searches that order (one LCS query and
one extracted symbol per probe), takes the better neighbour of the
insertion point, and then walks the contiguous block of equally good
prefixes using the stored LCS of colex-adjacent prefixes to pick the
smallest position.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from . import oracle
from .grammar import Slp
from .krhash import PatternHashes
from .lcp import lcs
from .sets import reversed_text
from .text import Text


@dataclass(frozen=True)
class ColexIndex:
    order: tuple[int, ...]  # positions of S in colex order of T[1..s]
    adjacent_lcs: tuple[int, ...]  # adjacent_lcs[k] = LCS(T[1..order[k-1]], T[1..order[k]]); [0] = 0

    def __len__(self) -> int:
        return len(self.order)

    def rank(self) -> dict[int, int]:
        return {s: k for k, s in enumerate(self.order)}


def colex_sort(t: Text, positions: Iterable[int], rev_sa: oracle.SuffixArray | None = None) -> list[int]:
    """Colex order via the suffix array of the reversed text.

    ``T[1..s]`` reversed is the suffix of ``reverse(T[1..n-1]) $`` starting at
    ``n - s`` (for ``s < n``), terminated by the sentinel; ``T[1..n]`` starts
    with the sentinel once reversed and so comes first.
    """
    n = t.n
    if rev_sa is None:
        rev_sa = oracle.build_suffix_array(reversed_text(t))
    inv = [0] * (n + 1)
    for k, s in enumerate(rev_sa.sa):
        inv[s] = k
    return sorted(set(positions), key=lambda s: -1 if s == n else inv[n - s])


def build_colex(t: Text, s: Iterable[int], rev_sa: oracle.SuffixArray | None = None,
                verify: bool = True) -> ColexIndex:
    positions = sorted(set(s))
    if not positions:
        raise ValueError("cannot build a colex index over an empty set")
    if positions[0] < 1 or positions[-1] > t.n:
        raise ValueError("positions must lie in 1..n")
    order = colex_sort(t, positions, rev_sa)
    if verify and order != oracle.naive_colex_order(t, positions):
        raise AssertionError("colex order disagrees with the naive reversed-prefix sort")
    syms = t.symbols
    adjacent = [0]
    for a, b in zip(order, order[1:]):
        k = 0
        while k < min(a, b) and syms[a - 1 - k] == syms[b - 1 - k]:
            k += 1
        adjacent.append(k)
    return ColexIndex(tuple(order), tuple(adjacent))


def calls_bound(size: int) -> int:
    """Upper bound on LCS queries issued by one ``zft`` call."""
    return 2 * math.ceil(math.log2(size)) + 2 if size > 1 else 2


@dataclass
class ZftResult:
    position: int
    lcs: int
    lcs_calls: int


def zft(ci: ColexIndex, s: Slp, ph: PatternHashes, i: int) -> ZftResult:
    """Best suffixient position for ``P[1..i]`` (ties go to the smallest position)."""
    if not 1 <= i <= ph.m:
        raise IndexError(f"zft prefix length {i} outside 1..{ph.m}")
    order = ci.order
    known: dict[int, int] = {}

    def probe(k: int) -> int:
        if k not in known:
            known[k] = lcs(s, ph, i, order[k])
        return known[k]

    # first k whose reversed prefix is >= reversed P[1..i]
    lo, hi = 0, len(order)
    while lo < hi:
        mid = (lo + hi) // 2
        pos = order[mid]
        b = probe(mid)
        if b == i:
            query_smaller = True  # reversed P[1..i] is a prefix of (or equal to) reversed T[1..pos]
        elif b == pos:
            query_smaller = False
        else:
            query_smaller = ph.symbols[i - b - 1] < s.symbol_at(pos - b)
        if query_smaller:
            hi = mid
        else:
            lo = mid + 1
    candidates = [k for k in (lo - 1, lo) if 0 <= k < len(order)]
    best = max(probe(k) for k in candidates)
    k0 = min(k for k in candidates if known[k] == best)
    # block of entries sharing the best suffix is contiguous around k0
    first = k0
    while first > 0 and ci.adjacent_lcs[first] >= best:
        first -= 1
    last = k0
    while last + 1 < len(order) and ci.adjacent_lcs[last + 1] >= best:
        last += 1
    return ZftResult(min(order[first : last + 1]), best, len(known))
