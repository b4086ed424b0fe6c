import random

import pytest

from suffixient.colex import build_colex, calls_bound, colex_sort, zft
from suffixient.grammar import build_balanced_slp
from suffixient.krhash import HashConfig, PatternHashes
from suffixient.oracle import lcs_naive, naive_colex_order
from suffixient.sets import suffixient_from_bwt_runs
from suffixient.text import load_text

from conftest import EXAMPLE_SET, random_body

CFG = HashConfig(13)


def test_example_set_order(example_text):
    ci = build_colex(example_text, EXAMPLE_SET)
    assert list(ci.order) == naive_colex_order(example_text, EXAMPLE_SET)
    # T[1..35] ends in "$" and sorts first; T[1..14] and T[1..33] end in "0"
    assert ci.order[0] == 35
    assert set(ci.order[1:3]) == {14, 33}
    assert ci.order[3] == 20


def test_singleton_and_empty(example_text):
    assert build_colex(example_text, [7]).order == (7,)
    with pytest.raises(ValueError):
        build_colex(example_text, [])


def test_colex_sort_matches_naive_random():
    rng = random.Random(41)
    for _ in range(100):
        t = load_text(random_body(rng, rng.randint(1, 80), rng.choice([2, 4])))
        s, _ = suffixient_from_bwt_runs(t)
        assert colex_sort(t, s) == naive_colex_order(t, s)
        everything = range(1, t.n + 1)
        assert colex_sort(t, everything) == naive_colex_order(t, everything)


def _naive_zft(t, s, p, i):
    scores = {x: lcs_naive(p[:i], t.symbols[:x]) for x in s}
    best = max(scores.values())
    return best, sorted(x for x, v in scores.items() if v == best)


def test_example_queries(example_text, example_pattern):
    slp = build_balanced_slp(example_text, CFG)
    ph = PatternHashes(tuple(example_pattern), CFG)
    ci = build_colex(example_text, EXAMPLE_SET)
    res = zft(ci, slp, ph, 1)
    assert res.lcs == 1
    res = zft(ci, slp, ph, 16)
    best, winners = _naive_zft(example_text, EXAMPLE_SET, example_pattern, 16)
    assert (best, winners) == (14, [14])
    assert (res.position, res.lcs) == (14, 14)


def test_zft_matches_exhaustive_scan():
    rng = random.Random(42)
    for _ in range(150):
        t = load_text(random_body(rng, rng.randint(1, 120), rng.choice([2, 4])))
        s, _ = suffixient_from_bwt_runs(t)
        if rng.random() < 0.3:
            s = sorted(set(s) | set(rng.sample(range(1, t.n + 1), min(5, t.n))))
        ci = build_colex(t, s)
        slp = build_balanced_slp(t, CFG)
        body = t.body()
        a = rng.randrange(len(body))
        p = tuple(body[a : a + 30]) + tuple(rng.choice(body) for _ in range(10))
        ph = PatternHashes(p, CFG)
        for i in range(1, len(p) + 1):
            res = zft(ci, slp, ph, i)
            best, winners = _naive_zft(t, s, p, i)
            assert res.lcs == best
            assert res.position == winners[0]
            assert res.lcs_calls <= calls_bound(len(s))
            # maximisers are contiguous in colex order
            ranks = sorted(ci.order.index(x) for x in winners)
            assert ranks == list(range(ranks[0], ranks[0] + len(ranks)))


def test_zft_rejects_bad_prefix(example_text, example_pattern):
    slp = build_balanced_slp(example_text, CFG)
    ph = PatternHashes(tuple(example_pattern), CFG)
    ci = build_colex(example_text, EXAMPLE_SET)
    for i in (0, 35):
        with pytest.raises(IndexError):
            zft(ci, slp, ph, i)


def test_calls_bound_values():
    assert calls_bound(1) == 2
    assert calls_bound(2) == 4
    assert calls_bound(13) == 10
