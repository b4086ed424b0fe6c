"""LCP and LCS between pattern and text by recursion over a balanced SLP.

``lcp(P[i..m], T[j..n])`` starts at the grammar root with the aligned
intervals and recurses: an interval inside the left child goes left, one
inside the right child goes right, and a straddling interval first solves
the left part and only continues into the right child when the left part
matched completely. A node whose whole expansion is covered is settled in
O(1) by comparing hashes, so each query touches O(height) symbols.
LCS is the mirror image, anchored at interval ends.
"""
from __future__ import annotations

from .grammar import Slp, expand
from .krhash import PatternHashes


class HashCollisionError(AssertionError):
    """Raised in paranoid mode when a hash shortcut disagrees with the symbols."""


class _Probe:
    __slots__ = ("visits",)

    def __init__(self) -> None:
        self.visits = 0


def _lcp_rec(s: Slp, ph: PatternHashes, x: int, ip: int, jp: int, length: int,
             probe: _Probe | None, paranoid: bool) -> int:
    # LCP(P[ip..ip+length-1], exp(x)[jp..jp+length-1])
    if probe is not None:
        probe.visits += 1
    nt = len(s.terminals)
    if x < nt:
        return 1 if ph.symbols[ip - 1] == s.terminals[x] else 0
    if length == s.exp_len[x] and ph.substring_hash(ip, ip + length - 1) == s.exp_hash[x]:
        if paranoid and expand(s, x) != ph.symbols[ip - 1 : ip - 1 + length]:
            raise HashCollisionError(f"hash shortcut fired on unequal strings at symbol {x}")
        return length
    y, z = s.rules[x - nt]
    ly = s.exp_len[y]
    if jp + length - 1 <= ly:
        return _lcp_rec(s, ph, y, ip, jp, length, probe, paranoid)
    if jp > ly:
        return _lcp_rec(s, ph, z, ip, jp - ly, length, probe, paranoid)
    in_left = ly - jp + 1
    got = _lcp_rec(s, ph, y, ip, jp, in_left, probe, paranoid)
    if got < in_left:
        return got
    return in_left + _lcp_rec(s, ph, z, ip + in_left, 1, length - in_left, probe, paranoid)


def _lcs_rec(s: Slp, ph: PatternHashes, x: int, ie: int, je: int, length: int,
             probe: _Probe | None, paranoid: bool) -> int:
    # LCS(P[ie-length+1..ie], exp(x)[je-length+1..je])
    if probe is not None:
        probe.visits += 1
    nt = len(s.terminals)
    if x < nt:
        return 1 if ph.symbols[ie - 1] == s.terminals[x] else 0
    if length == s.exp_len[x] and ph.substring_hash(ie - length + 1, ie) == s.exp_hash[x]:
        if paranoid and expand(s, x) != ph.symbols[ie - length : ie]:
            raise HashCollisionError(f"hash shortcut fired on unequal strings at symbol {x}")
        return length
    y, z = s.rules[x - nt]
    ly = s.exp_len[y]
    if je - length + 1 > ly:
        return _lcs_rec(s, ph, z, ie, je - ly, length, probe, paranoid)
    if je <= ly:
        return _lcs_rec(s, ph, y, ie, je, length, probe, paranoid)
    in_right = je - ly
    got = _lcs_rec(s, ph, z, ie, in_right, in_right, probe, paranoid)
    if got < in_right:
        return got
    return in_right + _lcs_rec(s, ph, y, ie - in_right, ly, length - in_right, probe, paranoid)


def _lcp(s: Slp, ph: PatternHashes, i: int, j: int, probe: _Probe | None, paranoid: bool) -> int:
    m, n = ph.m, s.n
    if not (1 <= i <= m + 1 and 1 <= j <= n + 1):
        raise IndexError(f"lcp query ({i}, {j}) outside pattern 1..{m + 1} / text 1..{n + 1}")
    length = min(m - i + 1, n - j + 1)
    if length == 0:
        return 0
    return _lcp_rec(s, ph, s.start, i, j, length, probe, paranoid)


def _lcs(s: Slp, ph: PatternHashes, i: int, j: int, probe: _Probe | None, paranoid: bool) -> int:
    m, n = ph.m, s.n
    if not (0 <= i <= m and 0 <= j <= n):
        raise IndexError(f"lcs query ({i}, {j}) outside pattern 0..{m} / text 0..{n}")
    length = min(i, j)
    if length == 0:
        return 0
    return _lcs_rec(s, ph, s.start, i, j, length, probe, paranoid)


def lcp(s: Slp, ph: PatternHashes, i: int, j: int, paranoid: bool = False) -> int:
    """Length of the longest common prefix of ``P[i..m]`` and ``T[j..n]``."""
    return _lcp(s, ph, i, j, None, paranoid)


def lcs(s: Slp, ph: PatternHashes, i: int, j: int, paranoid: bool = False) -> int:
    """Length of the longest common suffix of ``P[1..i]`` and ``T[1..j]``."""
    return _lcs(s, ph, i, j, None, paranoid)


def recursion_depth_probe(s: Slp, ph: PatternHashes, i: int, j: int,
                          kind: str = "lcp") -> tuple[int, int]:
    """Answer an LCP (or LCS) query and report how many grammar symbols it visited."""
    probe = _Probe()
    if kind == "lcp":
        value = _lcp(s, ph, i, j, probe, False)
    elif kind == "lcs":
        value = _lcs(s, ph, i, j, probe, False)
    else:
        raise ValueError(f"unknown query kind {kind!r}")
    return value, probe.visits


def visit_bound(height: int) -> int:
    return 4 * height + 4
