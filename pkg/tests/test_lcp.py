import random

import pytest

from suffixient.grammar import build_balanced_slp
from suffixient.krhash import HashConfig, PatternHashes
from suffixient.lcp import HashCollisionError, lcp, lcs, recursion_depth_probe, visit_bound
from suffixient.oracle import lcp_naive, lcs_naive
from suffixient.text import load_text

from conftest import random_body

CFG = HashConfig(11)


@pytest.fixture
def example_engine(example_text, example_pattern):
    return build_balanced_slp(example_text, CFG), PatternHashes(tuple(example_pattern), CFG)


def test_example_values(example_engine):
    s, ph = example_engine
    assert lcp(s, ph, 2, 21) == 14
    assert lcp(s, ph, 23, 34) == 1
    assert lcs(s, ph, 16, 14) == 14
    assert lcs(s, ph, 22, 33) == 20
    assert lcp(s, ph, 17, 15) == 5
    assert lcp(s, ph, 25, 15) == 10


def test_empty_sides(example_engine):
    s, ph = example_engine
    assert lcp(s, ph, 35, 1) == 0
    assert lcp(s, ph, 1, 36) == 0
    assert lcs(s, ph, 0, 10) == 0
    assert lcs(s, ph, 10, 0) == 0


def test_out_of_range(example_engine):
    s, ph = example_engine
    for args in [(0, 1), (36, 1), (1, 37)]:
        with pytest.raises(IndexError):
            lcp(s, ph, *args)
    for args in [(-1, 1), (35, 1), (1, 36)]:
        with pytest.raises(IndexError):
            lcs(s, ph, *args)


def _pattern_for(rng, t, m):
    body = t.body()
    if rng.random() < 0.5:
        return tuple(rng.choice(body) for _ in range(m))
    a = rng.randrange(len(body))
    p = list(body[a : a + m])
    if p and rng.random() < 0.5:
        p[rng.randrange(len(p))] = rng.choice(body)
    return tuple(p)


def test_exhaustive_against_naive():
    rng = random.Random(31)
    for _ in range(60):
        t = load_text(random_body(rng, rng.randint(1, 63), rng.choice([2, 4])))
        p = _pattern_for(rng, t, rng.randint(0, 40))
        s = build_balanced_slp(t, CFG)
        ph = PatternHashes(p, CFG)
        for i in range(1, len(p) + 2):
            for j in range(1, t.n + 2):
                assert lcp(s, ph, i, j, paranoid=True) == lcp_naive(p[i - 1 :], t.symbols[j - 1 :])
        for i in range(len(p) + 1):
            for j in range(t.n + 1):
                assert lcs(s, ph, i, j, paranoid=True) == lcs_naive(p[:i], t.symbols[:j])


def test_visits_are_bounded_by_height():
    rng = random.Random(32)
    for _ in range(60):
        t = load_text(random_body(rng, rng.randint(1, 63), rng.choice([2, 4])))
        p = _pattern_for(rng, t, rng.randint(1, 40))
        s = build_balanced_slp(t, CFG)
        ph = PatternHashes(p, CFG)
        bound = visit_bound(s.height)
        for i in range(1, len(p) + 1):
            for j in range(1, t.n + 1):
                value, visits = recursion_depth_probe(s, ph, i, j)
                assert value == lcp_naive(p[i - 1 :], t.symbols[j - 1 :])
                assert visits <= bound
                value, visits = recursion_depth_probe(s, ph, i, j, kind="lcs")
                assert value == lcs_naive(p[:i], t.symbols[:j])
                assert visits <= bound


def test_full_match_and_first_symbol_mismatch(example_text):
    s = build_balanced_slp(example_text, CFG)
    body = example_text.body()
    ph = PatternHashes(body, CFG)
    value, visits = recursion_depth_probe(s, ph, 1, 1)
    assert value == len(body)
    assert visits <= visit_bound(s.height)
    ph = PatternHashes((ord("1"),) + body[1:], CFG)
    value, visits = recursion_depth_probe(s, ph, 1, 1)
    assert value == 0
    assert visits <= s.height + 2


def test_probe_rejects_unknown_kind(example_engine):
    s, ph = example_engine
    with pytest.raises(ValueError):
        recursion_depth_probe(s, ph, 1, 1, kind="lce")


def test_paranoid_mode_detects_forged_hash(example_text):
    s = build_balanced_slp(example_text, CFG)
    p = (ord("1"),) * 4
    ph = PatternHashes(p, CFG)
    # forge the stored hash of a length-4 symbol to equal the pattern's
    x = next(x for x in range(s.num_terminals, s.num_terminals + s.g) if s.exp_len[x] == 4)
    forged = list(s.exp_hash)
    forged[x] = ph.substring_hash(1, 4)
    object.__setattr__(s, "exp_hash", tuple(forged))
    j = next(j for j in range(1, 33, 4) if _symbol_id_at(s, j, 4) == x)
    assert lcp(s, ph, 1, j) == 4  # production mode trusts the hash
    with pytest.raises(HashCollisionError):
        lcp(s, ph, 1, j, paranoid=True)


def _symbol_id_at(s, pos, length):
    nt = s.num_terminals
    x, lo = s.start, pos
    while s.exp_len[x] > length or lo != 1:
        y, z = s.rules[x - nt]
        if lo <= s.exp_len[y]:
            x = y
        else:
            x, lo = z, lo - s.exp_len[y]
        if x < nt:
            return None
    return x if s.exp_len[x] == length else None
