"""Reference structures used to build the index and to check it.

Everything here favours auditability over speed: prefix-doubling suffix
arrays, a suffix tree assembled from the suffix array and LCP array, and
quadratic-or-worse brute force for MEMs, suffixient sets and attractors.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .text import Mem, Pattern, RawSymbols, Text, make_pattern


@dataclass(frozen=True)
class SuffixArray:
    sa: tuple[int, ...]  # 1-based suffix starts in lexicographic order

    def __len__(self) -> int:
        return len(self.sa)

    def __getitem__(self, k: int) -> int:
        """1-based rank access: ``sa[k]`` for ``1 <= k <= n``."""
        return self.sa[k - 1]


@dataclass(frozen=True)
class Bwt:
    chars: tuple[int, ...]
    runs: tuple[tuple[int, int, int], ...]  # (start, end, symbol), 1-based inclusive

    @property
    def r(self) -> int:
        return len(self.runs)


def suffix_array_of(symbols: Sequence[int]) -> list[int]:
    """0-based suffix array by prefix doubling, O(n log^2 n)."""
    n = len(symbols)
    if n == 0:
        return []
    rank = list(symbols)
    sa = list(range(n))
    k = 1
    while True:
        key = [(rank[i], rank[i + k] if i + k < n else -1) for i in range(n)]
        sa.sort(key=key.__getitem__)
        new_rank = [0] * n
        for idx in range(1, n):
            prev, cur = sa[idx - 1], sa[idx]
            new_rank[cur] = new_rank[prev] + (key[cur] != key[prev])
        rank = new_rank
        if rank[sa[-1]] == n - 1 or k >= n:
            return sa
        k <<= 1


def build_suffix_array(t: Text) -> SuffixArray:
    return SuffixArray(tuple(s + 1 for s in suffix_array_of(t.symbols)))


def _runs_of(chars: Sequence[int]) -> tuple[tuple[int, int, int], ...]:
    runs = []
    start = 0
    for k in range(1, len(chars) + 1):
        if k == len(chars) or chars[k] != chars[start]:
            runs.append((start + 1, k, chars[start]))
            start = k
    return tuple(runs)


def build_bwt(t: Text, sa: SuffixArray) -> Bwt:
    n = t.n
    chars = tuple(t.symbols[s - 2] if s > 1 else t.symbols[n - 1] for s in sa.sa)
    return Bwt(chars, _runs_of(chars))


def lcp_array(symbols: Sequence[int], sa0: Sequence[int]) -> list[int]:
    """Kasai: ``lcp[k]`` is the LCP of suffixes ``sa0[k-1]`` and ``sa0[k]`` (0-based)."""
    n = len(symbols)
    rank = [0] * n
    for k, s in enumerate(sa0):
        rank[s] = k
    lcp = [0] * n
    h = 0
    for i in range(n):
        if rank[i] > 0:
            j = sa0[rank[i] - 1]
            while i + h < n and j + h < n and symbols[i + h] == symbols[j + h]:
                h += 1
            lcp[rank[i]] = h
            if h:
                h -= 1
        else:
            h = 0
    return lcp


# ---------------------------------------------------------------------------
# suffix tree


@dataclass(eq=False)
class SuffixTreeNode:
    path_label_length: int
    occ_start: int  # 1-based start of one occurrence of the path label
    # first edge symbol -> (child, edge label start, edge label end), 1-based in T
    children: dict[int, tuple["SuffixTreeNode", int, int]] = field(default_factory=dict)
    suffix_link: "SuffixTreeNode | None" = None
    suffix_start: int | None = None  # set on leaves only

    @property
    def one_occurrence_end(self) -> int:
        return self.occ_start + self.path_label_length - 1

    @property
    def is_leaf(self) -> bool:
        return self.suffix_start is not None

    def label(self, t: Text) -> tuple[int, ...]:
        return t.symbols[self.occ_start - 1 : self.one_occurrence_end]


@dataclass
class SuffixTree:
    text: Text
    root: SuffixTreeNode

    def nodes(self) -> list[SuffixTreeNode]:
        out, stack = [], [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(child for child, _, _ in v.children.values())
        return out

    def internal_nodes(self) -> list[SuffixTreeNode]:
        return [v for v in self.nodes() if not v.is_leaf]

    def node_at(self, label: Sequence[int]) -> SuffixTreeNode | None:
        """The explicit node whose path label is exactly ``label``, if any."""
        syms = self.text.symbols
        v, k = self.root, 0
        while k < len(label):
            edge = v.children.get(label[k])
            if edge is None:
                return None
            child, s, e = edge
            length = e - s + 1
            if k + length > len(label):
                return None
            for q in range(length):
                if syms[s - 1 + q] != label[k + q]:
                    return None
            v, k = child, k + length
        return v

    def _locate(self, start: int, length: int) -> SuffixTreeNode | None:
        # skip/count walk for a substring known to occur at ``start``
        syms = self.text.symbols
        v, k = self.root, 0
        while k < length:
            child, s, e = v.children[syms[start - 1 + k]]
            k += e - s + 1
            if k > length:
                return None
            v = child
        return v


def _attach(t: Text, parent: SuffixTreeNode, child: SuffixTreeNode) -> None:
    s = child.occ_start + parent.path_label_length
    e = child.occ_start + child.path_label_length - 1
    parent.children[t.symbols[s - 1]] = (child, s, e)


def build_suffix_tree(t: Text, sa: SuffixArray | None = None) -> SuffixTree:
    """Suffix tree of ``t`` from its suffix array and LCP array, with suffix links."""
    if sa is None:
        sa = build_suffix_array(t)
    n = t.n
    sa0 = [s - 1 for s in sa.sa]
    lcp = lcp_array(t.symbols, sa0)
    root = SuffixTreeNode(0, sa.sa[0])
    stack = [root]
    for k, s in enumerate(sa.sa):
        depth = lcp[k] if k else 0
        while stack[-1].path_label_length > depth:
            last = stack.pop()
            if stack[-1].path_label_length < depth:
                w = SuffixTreeNode(depth, last.occ_start)
                _attach(t, w, last)
                stack.append(w)
            else:
                _attach(t, stack[-1], last)
        stack.append(SuffixTreeNode(n - s + 1, s, suffix_start=s))
    while len(stack) > 1:
        last = stack.pop()
        _attach(t, stack[-1], last)

    tree = SuffixTree(t, root)
    root.suffix_link = root
    for v in tree.internal_nodes():
        if v is root:
            continue
        v.suffix_link = tree._locate(v.occ_start + 1, v.path_label_length - 1)
        assert v.suffix_link is not None, "suffix link target must be a node"
    return tree


@dataclass
class DescentTrace:
    d: int
    mems: list[Mem]


def mems_by_suffix_tree(t: Text, p: RawSymbols | Pattern, tree: SuffixTree | None = None) -> DescentTrace:
    """Classical MEM finding on the suffix tree, counting edge descents.

    Every edge we start to traverse, fully or partially, adds one to ``d``.
    After getting stuck we jump to the deepest node whose path label is a
    suffix of the current match and that has a child edge for the next
    pattern symbol; that node always exists when every pattern symbol occurs
    in the text, and it is what following suffix links would reach.
    """
    if tree is None:
        tree = build_suffix_tree(t)
    syms = t.symbols
    ps = make_pattern(p).symbols
    m = len(ps)
    if m == 0:
        return DescentTrace(0, [])
    d = 0
    mems: list[Mem] = []
    v, a, k = tree.root, 0, 0  # current match is ps[a:k]; v's label is ps[a:k] unless mid-edge
    while True:
        while k < m and ps[k] in v.children:
            child, s, e = v.children[ps[k]]
            d += 1
            length = e - s + 1
            q = 0
            while q < length and k + q < m and syms[s - 1 + q] == ps[k + q]:
                q += 1
            k += q
            if q < length:
                break
            v = child
        if k == a:
            raise ValueError("pattern symbol does not occur in the text; split the pattern first")
        mems.append(Mem(a + 1, k))
        if k == m:
            return DescentTrace(d, mems)
        for a2 in range(a + 1, k + 1):
            w = tree.node_at(ps[a2:k])
            if w is not None and ps[k] in w.children:
                break
        else:
            raise ValueError("pattern symbol does not occur in the text; split the pattern first")
        v, a = w, a2


# ---------------------------------------------------------------------------
# naive string oracles


def _occurs(text_str: str, sub: Sequence[int]) -> bool:
    return "".join(map(chr, sub)) in text_str


def mems_naive(t: Text, p: RawSymbols | Pattern) -> list[Mem]:
    """MEMs straight from the definition, by substring search."""
    ps = make_pattern(p).as_str()
    ts = t.as_str()
    m = len(ps)
    reach = []  # reach[i]: largest j with ps[i:j] occurring
    j = 0
    for i in range(m):
        j = max(j, i)
        while j < m and ps[i : j + 1] in ts:
            j += 1
        reach.append(j)
    out = []
    for i in range(m):
        j = reach[i]
        if j == i:
            continue
        if i == 0 or ps[i - 1 : j] not in ts:
            out.append(Mem(i + 1, j))
    return out


def lcp_naive(a: Sequence[int] | str, b: Sequence[int] | str) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def lcs_naive(a: Sequence[int] | str, b: Sequence[int] | str) -> int:
    return lcp_naive(a[::-1], b[::-1])


def right_maximal_pairs(t: Text, tree: SuffixTree | None = None) -> list[tuple[tuple[int, ...], int]]:
    """All (alpha, c) with alpha right-maximal and c following an occurrence of it."""
    if tree is None:
        tree = build_suffix_tree(t)
    pairs = []
    for v in tree.internal_nodes():
        if len(v.children) < 2:
            continue
        alpha = v.label(t)
        pairs.extend((alpha, c) for c in sorted(v.children))
    pairs.sort()
    return pairs


def right_maximal_substrings_naive(t: Text) -> set[tuple[int, ...]]:
    """Brute force: substrings followed by at least two distinct symbols."""
    syms = t.symbols
    n = len(syms)
    followers: dict[tuple[int, ...], set[int]] = {}
    for i in range(n + 1):
        for j in range(i, n):
            followers.setdefault(syms[i:j], set()).add(syms[j])
    return {alpha for alpha, fs in followers.items() if len(fs) >= 2}


def _covers(t: Text, s: int, alpha: Sequence[int], c: int) -> bool:
    if s - len(alpha) < 1 or t.symbols[s - 1] != c:
        return False
    return tuple(t.symbols[s - 1 - len(alpha) : s - 1]) == tuple(alpha)


def is_suffixient(
    t: Text, s: Iterable[int], tree: SuffixTree | None = None
) -> tuple[bool, list[tuple[tuple[int, ...], int]]]:
    """Check every (right-maximal alpha, following c) pair is witnessed in ``s``.

    Returns ``(ok, violations)`` where violations lists the uncovered pairs.
    """
    positions = sorted(set(s))
    if any(not 1 <= x <= t.n for x in positions):
        raise ValueError("suffixient positions must lie in 1..n")
    violations = []
    for alpha, c in right_maximal_pairs(t, tree):
        if not any(_covers(t, x, alpha, c) for x in positions):
            violations.append((alpha, c))
    return not violations, violations


def covering_positions(t: Text, s: Iterable[int], alpha: Sequence[int], c: int) -> list[int]:
    return [x for x in sorted(set(s)) if _covers(t, x, alpha, c)]


def is_string_attractor(t: Text, s: Iterable[int]) -> bool:
    """Every non-empty substring has an occurrence containing some position of ``s``."""
    positions = sorted(set(s))
    if not positions:
        return False
    ts = t.as_str()
    n = len(ts)
    seen: set[str] = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            sub = ts[i:j]
            if sub in seen:
                continue
            seen.add(sub)
            length = j - i
            start = ts.find(sub)
            hit = False
            while start != -1:
                # occurrence covers 1-based [start+1, start+length]
                k = bisect_left(positions, start + 1)
                if k < len(positions) and positions[k] <= start + length:
                    hit = True
                    break
                start = ts.find(sub, start + 1)
            if not hit:
                return False
    return True


def naive_colex_order(t: Text, s: Iterable[int]) -> list[int]:
    """Sort positions by their reversed text prefixes."""
    syms = t.symbols
    return sorted(set(s), key=lambda x: syms[x - 1 :: -1] if x > 0 else ())
