"""Randomised oracle-equivalence checks behind ``suffixient verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import oracle
from .colex import calls_bound
from .mems import CompressedIndex, build_index, find_mems
from .sets import greedy_reduce, suffixient_from_bwt_runs
from .text import Text, load_text, split_pattern, symbols_to_str

ALPHABET = b"ACGTNRYKMSWBDHVabcdefghijklmnop"  # no "x", see random_pattern
# brute-force attractor check is cubic-ish; skip it above this length
ATTRACTOR_LIMIT = 400


@dataclass
class Failure:
    check: str
    detail: str
    reproducer: dict = field(default_factory=dict)

    def __str__(self) -> str:
        rep = " ".join(f"{k}={v!r}" for k, v in self.reproducer.items())
        return f"FAIL {self.check}: {self.detail}" + (f" [{rep}]" if rep else "")


@dataclass
class VerifyReport:
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    log: Callable[[str], None] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, detail: str = "", **reproducer) -> bool:
        self.checks += 1
        if not passed:
            self.failures.append(Failure(name, detail, reproducer))
        if not passed and self.log is not None:
            self.log(str(self.failures[-1]))
        return passed


def random_text(rng: random.Random, n: int, alphabet: bytes) -> bytes:
    return bytes(rng.choice(alphabet) for _ in range(n))


def random_pattern(rng: random.Random, body: bytes, alphabet: bytes, m: int) -> bytes:
    """Half uniform noise, half spliced text substrings with sparse edits.

    Edits occasionally insert ``x``, which the generated texts never contain,
    to exercise pattern chunking.
    """
    if m == 0:
        return b""
    if rng.random() < 0.5 or not body:
        return random_text(rng, m, alphabet)
    out = bytearray()
    while len(out) < m:
        a = rng.randrange(len(body))
        out += body[a : a + rng.randint(1, 40)]
        if rng.random() < 0.3:
            out.append(rng.choice(alphabet + b"x"))
    return bytes(out[:m])


def _render(symbols: Iterable[int]) -> str:
    return symbols_to_str(symbols)


def check_text(t: Text, report: VerifyReport, positions: Iterable[int] | None = None) -> bool:
    """Suffixient-set checks on one text; returns False on the first failure."""
    rep = {"text": _render(t.body())}
    tree = oracle.build_suffix_tree(t)
    s, stats = suffixient_from_bwt_runs(t)
    ok, violations = oracle.is_suffixient(t, s, tree)
    if not report.record("run-boundary set is suffixient", ok,
                         f"uncovered pair {violations[:1]}", **rep):
        return False
    if not report.record("run-boundary set size <= 2 r_bar", len(s) <= 2 * stats.r_bar,
                         f"|S|={len(s)} r_bar={stats.r_bar}", **rep):
        return False
    if t.n <= ATTRACTOR_LIMIT and not report.record(
            "run-boundary set is a string attractor", oracle.is_string_attractor(t, s), "", **rep):
        return False
    reduced = greedy_reduce(t, s, tree)
    if not report.record("greedy reduction stays suffixient",
                         oracle.is_suffixient(t, reduced, tree)[0] and len(reduced) <= len(s), "", **rep):
        return False
    if positions is not None:
        positions = sorted(set(positions))
        ok, violations = oracle.is_suffixient(t, positions, tree)
        detail = ""
        if violations:
            alpha, c = violations[0]
            detail = f"no position covers alpha={_render(alpha)!r} followed by c={_render([c])!r}"
        if not report.record(f"supplied set {positions} is suffixient", ok, detail, **rep):
            return False
    return True


def check_query(idx: CompressedIndex, t: Text, p: bytes, report: VerifyReport,
                tree: oracle.SuffixTree | None = None, **rep) -> bool:
    rep = {"text": _render(t.body()), "pattern": p.decode("latin-1"), **rep}
    got, stats = find_mems(idx, p)
    want = oracle.mems_naive(t, p)
    if not report.record("find_mems equals naive MEMs", got == want, f"got {got}, want {want}", **rep):
        return False
    if tree is None:
        tree = oracle.build_suffix_tree(t)
    d = sum(oracle.mems_by_suffix_tree(t, c.symbols, tree).d for c in split_pattern(p, t))
    if not report.record("iterations <= suffix-tree descents", stats.iterations <= d,
                         f"iterations={stats.iterations} d={d}", **rep):
        return False
    bound = stats.iterations * calls_bound(len(idx.suffixient))
    return report.record("colex LCS calls within binary-search bound", stats.zft_lcs_calls <= bound,
                         f"calls={stats.zft_lcs_calls} bound={bound}", **rep)


def verify_text(t: Text, trials: int, max_m: int, seed: int,
                positions: Iterable[int] | None = None, log=None) -> VerifyReport:
    report = VerifyReport(log=log)
    if not check_text(t, report, positions):
        return report
    rng = random.Random(seed)
    idx = build_index(t, seed=seed)
    tree = oracle.build_suffix_tree(t)
    body = bytes(c for c in t.body() if c < 256)
    alphabet = bytes(sorted(c for c in t.alphabet if c < 256))
    for trial in range(trials):
        p = random_pattern(rng, body, alphabet, rng.randint(0, max_m))
        if not check_query(idx, t, p, report, tree, seed=seed, trial=trial):
            break
    return report


def verify_random(trials: int, sigma: int, max_n: int, max_m: int, seed: int, log=None) -> VerifyReport:
    report = VerifyReport(log=log)
    rng = random.Random(seed)
    alphabet = ALPHABET[:sigma]
    for trial in range(trials):
        body = random_text(rng, rng.randint(1, max_n), alphabet)
        t = load_text(body)
        if not check_text(t, report):
            break
        idx = build_index(t, seed=trial)
        p = random_pattern(rng, body, alphabet, rng.randint(0, max_m))
        if not check_query(idx, t, p, report, seed=seed, trial=trial):
            break
    return report
