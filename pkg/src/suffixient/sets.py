"""Suffixient sets: the BWT run-boundary construction and a greedy reducer."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from . import oracle
from .text import SENTINEL, Text

Source = Literal["run-boundary", "greedy", "user-supplied"]


@dataclass(frozen=True)
class SuffixientSet:
    positions: tuple[int, ...]
    source: Source = "user-supplied"

    def __post_init__(self) -> None:
        pos = self.positions
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError("positions must be strictly increasing")
        if pos and pos[0] < 1:
            raise ValueError("positions are 1-based")

    @classmethod
    def of(cls, positions: Iterable[int], source: Source = "user-supplied") -> "SuffixientSet":
        return cls(tuple(sorted(set(positions))), source)

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __contains__(self, x: object) -> bool:
        return x in self.positions


@dataclass(frozen=True)
class RBarStats:
    r_bar: int
    boundary_count: int


def reversed_text(t: Text) -> Text:
    """Reverse of ``t`` with the sentinel moved back to the end."""
    body = t.symbols[-2::-1]
    symbols = body + (SENTINEL,)
    return Text(symbols, t.alphabet, "".join(map(chr, symbols)))


def suffixient_from_bwt_runs(
    t: Text, rev_sa: oracle.SuffixArray | None = None
) -> tuple[SuffixientSet, RBarStats]:
    """Positions of the characters at run boundaries of the BWT of the reversed text.

    Both the first and the last BWT index of every run is taken, so at most
    two positions per run. Index ``k`` of the reversed text's BWT holds
    ``R[sa_R[k] - 1]``, which is ``T[n - sa_R[k] + 1]``; when ``sa_R[k] = 1``
    the character is the sentinel at position ``n``.
    """
    r = reversed_text(t)
    if rev_sa is None:
        rev_sa = oracle.build_suffix_array(r)
    bwt = oracle.build_bwt(r, rev_sa)
    n = t.n
    picked = []
    for start, end, _ in bwt.runs:
        for k in (start, end) if start != end else (start,):
            s = rev_sa[k]
            picked.append(n - s + 1 if s > 1 else n)
    return SuffixientSet.of(picked, "run-boundary"), RBarStats(bwt.r, len(picked))


def greedy_reduce(
    t: Text, s: SuffixientSet | Iterable[int], tree: oracle.SuffixTree | None = None
) -> SuffixientSet:
    """Keep, for every (right-maximal alpha, next symbol c) pair, the largest witness in ``s``."""
    if tree is None:
        tree = oracle.build_suffix_tree(t)
    positions = list(s)
    ok, violations = oracle.is_suffixient(t, positions, tree)
    if not ok:
        raise ValueError(f"input set is not suffixient; {len(violations)} uncovered pairs")
    keep = set()
    for alpha, c in oracle.right_maximal_pairs(t, tree):
        keep.add(max(oracle.covering_positions(t, positions, alpha, c)))
    return SuffixientSet.of(keep, "greedy")
