"""The compressed MEM index and its query loop.

The index is a balanced SLP with Karp-Rabin annotations (for LCP/LCS
queries) plus the colex-sorted prefixes of the text ending at the positions
of a suffixient set. A query walks the pattern left to right: at position
``i`` it finds the text prefix ending in the set with the longest common
suffix ``b`` with ``P[1..i]``; if ``b`` does not exceed the suffix ``l``
matched so far, the previous match ``P[i-l..i-1]`` is a MEM. It then extends
forward with one LCP query ``f`` and jumps to ``i + f + 1``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from . import oracle
from .colex import ColexIndex, build_colex, zft
from .grammar import Slp, build_balanced_slp, extract
from .krhash import HashConfig, PatternHashes
from .lcp import lcp
from .sets import SuffixientSet, reversed_text, suffixient_from_bwt_runs
from .text import SENTINEL, Mem, Pattern, RawSymbols, Text, load_text, make_pattern, split_pattern

# colex order is cross-checked against a naive sort up to this text length
COLEX_VERIFY_LIMIT = 4096


@dataclass(frozen=True)
class TraceStep:
    """One pass of the query loop, in the coordinates of its chunk."""

    chunk_offset: int
    i: int
    j: int
    b: int
    f: int
    ell: int  # value after the update
    reported: Mem | None


@dataclass
class QueryStats:
    iterations: int = 0
    zft_calls: int = 0
    lcs_calls: int = 0
    lcp_calls: int = 0
    zft_lcs_calls: int = 0  # LCS queries issued inside the colex searches
    chunks: int = 0
    d_reference: int | None = None
    trace: list[TraceStep] | None = None


@dataclass(frozen=True, eq=False)
class CompressedIndex:
    slp: Slp
    suffixient: SuffixientSet
    colex: ColexIndex
    r_bar: int
    separator: int = 0  # first record separator symbol for multi-record input, 0 if none

    @property
    def hash_cfg(self) -> HashConfig:
        return self.slp.cfg

    @property
    def n(self) -> int:
        return self.slp.n

    @property
    def g(self) -> int:
        return self.slp.g

    @property
    def height(self) -> int:
        return self.slp.height

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(c for c in self.slp.terminals if c != SENTINEL)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    def text(self) -> Text:
        return load_text(extract(self.slp, 1, self.n)[:-1])

    def find_mems(self, p: RawSymbols | Pattern, **kwargs) -> list[Mem]:
        return find_mems(self, p, **kwargs)[0]

    def stats(self) -> dict[str, int]:
        return {
            "n": self.n,
            "sigma": self.sigma,
            "r_bar": self.r_bar,
            "g": self.g,
            "suffixient_size": len(self.suffixient),
            "height": self.height,
            "seed": self.hash_cfg.seed,
            "separator": self.separator,
        }


def new_seed() -> int:
    return random.SystemRandom().getrandbits(63)


def build_index(
    t: Text | RawSymbols,
    seed: int | None = None,
    suffixient: Iterable[int] | None = None,
    separator: int = 0,
) -> CompressedIndex:
    """Build the index; ``suffixient`` overrides the run-boundary set (it is checked)."""
    if not isinstance(t, Text):
        t = load_text(t)
    cfg = HashConfig(new_seed() if seed is None else seed)
    rev_sa = oracle.build_suffix_array(reversed_text(t))
    s, rstats = suffixient_from_bwt_runs(t, rev_sa)
    if suffixient is not None:
        s = SuffixientSet.of(suffixient)
        ok, violations = oracle.is_suffixient(t, s)
        if not ok:
            alpha, c = violations[0]
            raise ValueError(f"supplied set is not suffixient: no witness for ({alpha!r}, {c!r})")
    colex = build_colex(t, s, rev_sa, verify=t.n <= COLEX_VERIFY_LIMIT)
    return CompressedIndex(build_balanced_slp(t, cfg), s, colex, rstats.r_bar, separator)


def _longest_occurring_suffix(text_str: str, prefix: str) -> int:
    k = 0
    while k < len(prefix) and prefix[len(prefix) - k - 1 :] in text_str:
        k += 1
    return k


def find_mems(
    idx: CompressedIndex,
    p: RawSymbols | Pattern,
    *,
    trace: bool = False,
    diagnostic: bool = False,
    with_reference: bool = False,
) -> tuple[list[Mem], QueryStats]:
    """All MEMs of ``p`` with respect to the indexed text, in increasing order.

    ``diagnostic`` re-derives the loop invariants by brute force on the
    decompressed text and raises ``AssertionError`` on any disagreement.
    ``with_reference`` also counts suffix-tree edge descents for comparison.
    """
    pattern = make_pattern(p)
    stats = QueryStats(trace=[] if trace else None)
    chunks = split_pattern(pattern, idx.alphabet)
    stats.chunks = len(chunks)
    slp, colex, cfg = idx.slp, idx.colex, idx.hash_cfg
    text_str = idx.text().as_str() if diagnostic else ""
    mems: list[Mem] = []

    for chunk in chunks:
        shift = chunk.offset - 1
        m = len(chunk.symbols)
        ph = PatternHashes(chunk.symbols, cfg)
        chunk_str = "".join(map(chr, chunk.symbols))
        i, ell = 1, 0
        while i <= m:
            if diagnostic:
                assert ell == _longest_occurring_suffix(text_str, chunk_str[: i - 1]), "loop invariant on l"
            res = zft(colex, slp, ph, i)
            j, b = res.position, res.lcs
            stats.iterations += 1
            stats.zft_calls += 1
            stats.lcs_calls += 1
            stats.zft_lcs_calls += res.lcs_calls
            if diagnostic:
                assert b == _longest_occurring_suffix(text_str, chunk_str[:i]), "suffix maximality of b"
            reported = None
            if b <= ell and ell > 0:
                reported = Mem(i - ell + shift, i - 1 + shift)
                mems.append(reported)
            f = lcp(slp, ph, i + 1, j + 1)
            stats.lcp_calls += 1
            i, ell = i + f + 1, b + f
            if stats.trace is not None:
                stats.trace.append(TraceStep(chunk.offset, i - f - 1, j, b, f, ell, reported))
        if ell > 0:
            mems.append(Mem(i - ell + shift, i - 1 + shift))

    if with_reference:
        t = idx.text()
        tree = oracle.build_suffix_tree(t)
        stats.d_reference = sum(oracle.mems_by_suffix_tree(t, c.symbols, tree).d for c in chunks)
    return mems, stats
