"""Karp-Rabin polynomial hashing modulo the Mersenne prime 2**61 - 1.

Convention: ``h(x[1..k]) = sum(x[q] * base**(k - q)) mod p``, so the empty
string hashes to 0 and ``h(a + b) = h(a) * base**len(b) + h(b)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

MERSENNE_61 = (1 << 61) - 1


@dataclass(frozen=True)
class HashConfig:
    seed: int
    modulus: int = MERSENNE_61
    base: int = field(default=0)

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.base == 0:
            rng = random.Random(self.seed)
            object.__setattr__(self, "base", rng.randrange(2, self.modulus - 1))
        if not 1 < self.base < self.modulus - 1:
            raise ValueError("base must lie in 2..modulus-2")

    def power(self, k: int) -> int:
        return pow(self.base, k, self.modulus)


def hash_of(seq: Sequence[int], cfg: HashConfig) -> int:
    h = 0
    base, mod = cfg.base, cfg.modulus
    for c in seq:
        h = (h * base + c) % mod
    return h


def concat(h_left: int, h_right: int, len_right: int, cfg: HashConfig) -> int:
    return (h_left * cfg.power(len_right) + h_right) % cfg.modulus


class PatternHashes:
    """Prefix hashes of a pattern for O(1) substring hashes.

    ``power_table`` covers exponents up to ``max(m, n)`` when ``n`` is given.
    """

    __slots__ = ("symbols", "cfg", "prefix_hashes", "power_table")

    def __init__(self, symbols: Sequence[int], cfg: HashConfig, n: int = 0):
        self.symbols = tuple(symbols)
        self.cfg = cfg
        base, mod = cfg.base, cfg.modulus
        pre = [0] * (len(self.symbols) + 1)
        for k, c in enumerate(self.symbols):
            pre[k + 1] = (pre[k] * base + c) % mod
        pw = [1] * (max(len(self.symbols), n) + 1)
        for k in range(1, len(pw)):
            pw[k] = pw[k - 1] * base % mod
        self.prefix_hashes = pre
        self.power_table = pw

    @property
    def m(self) -> int:
        return len(self.symbols)

    def substring_hash(self, i: int, j: int) -> int:
        """Hash of ``P[i..j]`` (1-based, inclusive); empty when ``j < i``."""
        if j < i:
            return 0
        pre = self.prefix_hashes
        return (pre[j] - pre[i - 1] * self.power_table[j - i + 1]) % self.cfg.modulus


def preprocess_pattern(p: Sequence[int], cfg: HashConfig, n: int = 0) -> PatternHashes:
    return PatternHashes(p, cfg, n)
