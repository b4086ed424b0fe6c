import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from suffixient.grammar import (
    GrammarError, build_balanced_slp, expand, extract, height_bound, import_slp,
)
from suffixient.krhash import HashConfig, hash_of
from suffixient.text import load_text

from conftest import random_body

CFG = HashConfig(5)


def test_tiny_text():
    t = load_text("ab")
    s = build_balanced_slp(t, CFG)
    assert s.height <= 2
    assert extract(s, 1, 3) == t.symbols


def test_example_text(example_text):
    s = build_balanced_slp(example_text, CFG)
    assert s.n == 35
    assert s.exp_len[s.start] == 35
    assert bytes(extract(s, 15, 34)) == b"10010100100101001001"
    assert extract(s, 15, 35)[-1] == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 300), st.sampled_from([1, 2, 4]), st.randoms(use_true_random=False))
def test_invariants_on_random_texts(n, sigma, rng):
    t = load_text(random_body(rng, n, sigma))
    s = build_balanced_slp(t, CFG)
    assert extract(s, 1, t.n) == t.symbols
    assert s.exp_hash[s.start] == hash_of(t.symbols, CFG)
    assert s.height == math.ceil(math.log2(t.n))
    assert s.height <= height_bound(t.n)
    assert 1 <= s.g <= 2 * t.n
    for x in range(s.num_terminals + s.g):
        e = expand(s, x)
        assert len(e) == s.exp_len[x]
        assert hash_of(e, CFG) == s.exp_hash[x]
    for x in range(s.num_terminals, s.num_terminals + s.g):
        y, z = s.children(x)
        assert s.exp_len[x] == s.exp_len[y] + s.exp_len[z]


def test_random_access_exhaustive():
    rng = random.Random(8)
    for _ in range(30):
        t = load_text(random_body(rng, rng.randint(1, 50), 4))
        s = build_balanced_slp(t, CFG)
        for k in range(1, t.n + 1):
            assert extract(s, k, k) == (t[k],)
            assert s.symbol_at(k) == t[k]
        for _ in range(20):
            i = rng.randint(1, t.n)
            j = rng.randint(i, t.n)
            assert extract(s, i, j) == t.symbols[i - 1 : j]


def test_extract_out_of_range(example_text):
    s = build_balanced_slp(example_text, CFG)
    for i, j in [(0, 3), (3, 2), (1, 36)]:
        with pytest.raises(IndexError):
            extract(s, i, j)


def test_repetitive_text_shares_rules():
    t = load_text(b"ab" * 64)
    s = build_balanced_slp(t, CFG)
    assert s.g < t.n // 4


def test_import_round_trip(example_text):
    s = build_balanced_slp(example_text, CFG)
    again = import_slp(*s.export(), CFG)
    assert again == s


def test_import_hand_written():
    a, b, dollar = 0, 1, 2
    # X3 -> a b, X4 -> X3 X3, X5 -> X4 $
    s = import_slp([ord("a"), ord("b"), 0], [(a, b), (3, 3), (4, dollar)], 5, CFG)
    assert bytes(extract(s, 1, s.n)) == b"abab\x00"


def test_import_rejects_chain():
    n = 40
    terminals = [ord("a"), 0]
    rules = [(0, 0)]
    for _ in range(n - 3):
        rules.append((2 + len(rules) - 1, 0))
    rules.append((2 + len(rules) - 1, 1))
    with pytest.raises(GrammarError, match="balance"):
        import_slp(terminals, rules, 2 + len(rules) - 1, CFG)


def test_import_rejects_cycle_and_bad_refs():
    with pytest.raises(GrammarError, match="cyclic"):
        import_slp([ord("a"), 0], [(3, 1), (2, 0)], 2, CFG)
    with pytest.raises(GrammarError):
        import_slp([ord("a"), 0], [(0, 9)], 2, CFG)


def test_import_rejects_misplaced_sentinel():
    with pytest.raises(GrammarError, match="sentinel"):
        import_slp([ord("a"), 0], [(1, 0)], 2, CFG)
