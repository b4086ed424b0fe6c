"""Balanced straight-line programs annotated with expansion lengths and hashes.

Symbol ids ``0 .. len(terminals) - 1`` are terminals; the nonterminal for
``rules[k]`` has id ``len(terminals) + k``. Every nonterminal ``X -> Y Z``
stores ``|exp(X)|`` and ``h(exp(X))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .krhash import HashConfig, concat
from .text import SENTINEL, Text


class GrammarError(ValueError):
    """Malformed, cyclic or insufficiently balanced grammar."""


def height_bound(n: int) -> int:
    """Largest height accepted for a grammar deriving a text of length ``n``."""
    return 2 * math.ceil(math.log2(max(n, 1))) + 2


@dataclass(frozen=True)
class GrammarStats:
    g: int
    height: int
    n: int


@dataclass(frozen=True, eq=False)
class Slp:
    terminals: tuple[int, ...]
    rules: tuple[tuple[int, int], ...]
    start: int
    exp_len: tuple[int, ...]
    exp_hash: tuple[int, ...]
    height: int
    cfg: HashConfig

    @property
    def n(self) -> int:
        return self.exp_len[self.start]

    @property
    def g(self) -> int:
        return len(self.rules)

    @property
    def num_terminals(self) -> int:
        return len(self.terminals)

    def is_terminal(self, x: int) -> bool:
        return x < len(self.terminals)

    def children(self, x: int) -> tuple[int, int]:
        return self.rules[x - len(self.terminals)]

    def stats(self) -> GrammarStats:
        return GrammarStats(self.g, self.height, self.n)

    def symbol_at(self, pos: int) -> int:
        """``T[pos]`` by a root-to-leaf descent."""
        if not 1 <= pos <= self.n:
            raise IndexError(f"position {pos} outside 1..{self.n}")
        nt = len(self.terminals)
        x = self.start
        while x >= nt:
            y, z = self.rules[x - nt]
            ly = self.exp_len[y]
            if pos <= ly:
                x = y
            else:
                x, pos = z, pos - ly
        return self.terminals[x]

    def export(self) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...], int]:
        return self.terminals, self.rules, self.start

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Slp):
            return NotImplemented
        return (self.export(), self.exp_len, self.exp_hash, self.cfg) == (
            other.export(), other.exp_len, other.exp_hash, other.cfg)


def extract(s: Slp, i: int, j: int) -> tuple[int, ...]:
    """``T[i..j]`` (1-based, inclusive)."""
    if not (1 <= i <= j <= s.n):
        raise IndexError(f"interval [{i}..{j}] outside 1..{s.n}")
    out: list[int] = []
    nt = s.num_terminals
    lens = s.exp_len
    # explicit stack of (symbol, lo, hi) with lo/hi relative to the symbol
    stack = [(s.start, i, j)]
    while stack:
        x, lo, hi = stack.pop()
        if x < nt:
            out.append(s.terminals[x])
            continue
        y, z = s.rules[x - nt]
        ly = lens[y]
        if lo > ly:
            stack.append((z, lo - ly, hi - ly))
        elif hi <= ly:
            stack.append((y, lo, hi))
        else:
            stack.append((z, 1, hi - ly))
            stack.append((y, lo, ly))
    return tuple(out)


def expand(s: Slp, x: int) -> tuple[int, ...]:
    """``exp(x)`` for any symbol id ``x``."""
    nt = s.num_terminals
    out: list[int] = []
    stack = [x]
    while stack:
        y = stack.pop()
        if y < nt:
            out.append(s.terminals[y])
        else:
            left, right = s.rules[y - nt]
            stack.append(right)
            stack.append(left)
    return tuple(out)


def _annotate(
    terminals: Sequence[int], rules: Sequence[tuple[int, int]], start: int, cfg: HashConfig
) -> Slp:
    nt = len(terminals)
    total = nt + len(rules)
    if not 0 <= start < total:
        raise GrammarError(f"start symbol {start} out of range")
    for y, z in rules:
        if not (0 <= y < total and 0 <= z < total):
            raise GrammarError(f"rule child out of range in ({y}, {z})")
    lens = [0] * total
    hashes = [0] * total
    heights = [0] * total
    for x, c in enumerate(terminals):
        lens[x] = 1
        hashes[x] = c % cfg.modulus
    # iterative post-order with cycle detection
    state = [0] * total  # 0 unseen, 1 on stack, 2 done
    for x in range(nt):
        state[x] = 2
    for root in range(nt, total):
        if state[root]:
            continue
        stack = [(root, False)]
        while stack:
            x, expanded = stack.pop()
            y, z = rules[x - nt]
            if expanded:
                lens[x] = lens[y] + lens[z]
                hashes[x] = concat(hashes[y], hashes[z], lens[z], cfg)
                heights[x] = 1 + max(heights[y], heights[z])
                state[x] = 2
                continue
            if state[x] == 2:
                continue
            state[x] = 1
            stack.append((x, True))
            for c in (z, y):
                if state[c] == 1:
                    raise GrammarError(f"grammar is cyclic through symbol {c}")
                if state[c] == 0:
                    stack.append((c, False))
    return Slp(tuple(terminals), tuple(tuple(r) for r in rules), start,
               tuple(lens), tuple(hashes), heights[start], cfg)


def build_balanced_slp(t: Text, cfg: HashConfig) -> Slp:
    """Balanced grammar by splitting every block at its largest power-of-two prefix.

    The split points are aligned, so repeated aligned blocks share one
    nonterminal. Height is ``ceil(log2 n)``.
    """
    terminals = tuple(sorted(set(t.symbols)))
    term_id = {c: k for k, c in enumerate(terminals)}
    nt = len(terminals)
    rules: list[tuple[int, int]] = []
    memo: dict[tuple[int, int], int] = {}
    syms = t.symbols

    def block(lo: int, hi: int) -> int:
        size = hi - lo
        if size == 1:
            return term_id[syms[lo]]
        half = 1 << ((size - 1).bit_length() - 1)
        pair = (block(lo, lo + half), block(lo + half, hi))
        x = memo.get(pair)
        if x is None:
            x = memo[pair] = nt + len(rules)
            rules.append(pair)
        return x

    start = block(0, len(syms))
    if start < nt:
        raise GrammarError("text too short to form a grammar")
    return _annotate(terminals, rules, start, cfg)


def import_slp(
    terminals: Sequence[int], rules: Sequence[tuple[int, int]], start: int, cfg: HashConfig
) -> Slp:
    """Annotate an externally supplied grammar.

    The expansion must be a valid indexed text (one sentinel, at the end) and
    the grammar must already be balanced; no rebalancing is attempted.
    """
    if len(set(terminals)) != len(terminals):
        raise GrammarError("terminal values must be distinct")
    slp = _annotate(terminals, rules, start, cfg)
    n = slp.n
    if slp.height > height_bound(n):
        raise GrammarError(
            f"grammar height {slp.height} exceeds the balance requirement "
            f"2*ceil(log2 n)+2 = {height_bound(n)} for n = {n}; rebalance it before import"
        )
    nt = len(terminals)
    total = nt + len(rules)
    sentinels = [0] * total
    for x, c in enumerate(terminals):
        sentinels[x] = int(c == SENTINEL)
    for x in sorted(range(nt, total), key=lambda x: slp.exp_len[x]):
        y, z = rules[x - nt]
        sentinels[x] = sentinels[y] + sentinels[z]
    if sentinels[start] != 1 or slp.symbol_at(n) != SENTINEL:
        raise GrammarError("grammar must derive a text with exactly one trailing sentinel")
    return slp
