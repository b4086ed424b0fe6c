import random
import struct

import pytest

from suffixient import indexfile
from suffixient.indexfile import IndexFormatError, from_bytes, to_bytes
from suffixient.mems import build_index

from conftest import EXAMPLE_SET, EXAMPLE_T, random_body


@pytest.fixture(scope="module")
def blob():
    return to_bytes(build_index(EXAMPLE_T, seed=99))


def test_header_fields(blob):
    magic, version, n, sigma, r_bar, g, s_size, seed = struct.unpack_from("<4sI6Q", blob)
    assert magic == b"SFXT" and version == 1
    assert (n, sigma, r_bar, seed) == (35, 2, 9, 99)


def test_round_trip_is_bit_exact(blob):
    idx = from_bytes(blob)
    assert to_bytes(idx) == blob
    assert idx.find_mems(b"1001001010010010100100101001010010") == [(1, 15), (3, 23), (11, 34)]


def test_user_set_source_survives(tmp_path):
    idx = build_index(EXAMPLE_T, seed=1, suffixient=EXAMPLE_SET)
    path = tmp_path / "example.sfxt"
    indexfile.save(idx, path)
    again = indexfile.load(path)
    assert again.suffixient.positions == EXAMPLE_SET
    assert again.suffixient.source == "user-supplied"
    assert again.colex == idx.colex


def test_same_seed_same_bytes():
    assert to_bytes(build_index(EXAMPLE_T, seed=5)) == to_bytes(build_index(EXAMPLE_T, seed=5))


def test_round_trip_random_queries():
    rng = random.Random(61)
    for k in range(30):
        body = random_body(rng, rng.randint(1, 150), rng.choice([2, 4]))
        idx = build_index(body, seed=k)
        again = from_bytes(to_bytes(idx))
        for _ in range(5):
            p = random_body(rng, rng.randint(0, 60), 4)
            assert again.find_mems(p) == idx.find_mems(p)


def test_rejects_bad_magic_and_version(blob):
    with pytest.raises(IndexFormatError, match="magic"):
        from_bytes(b"XXXX" + blob[4:])
    bad = blob[:4] + struct.pack("<I", 2) + blob[8:]
    with pytest.raises(IndexFormatError, match="version"):
        from_bytes(bad)
    with pytest.raises(IndexFormatError):
        from_bytes(blob[:10])


def test_rejects_truncation(blob):
    with pytest.raises(IndexFormatError):
        from_bytes(blob[:-8])


def test_rejects_corrupt_hash(blob):
    bad = bytearray(blob)
    bad[-3] ^= 0xFF  # inside the last stored hash
    with pytest.raises(IndexFormatError, match="hashes"):
        from_bytes(bytes(bad))


def test_rejects_count_mismatch(blob):
    # bump |S| in the header so section lengths no longer agree
    bad = bytearray(blob)
    s_size = struct.unpack_from("<Q", blob, 8 + 8 * 4)[0]
    struct.pack_into("<Q", bad, 8 + 8 * 4, s_size + 1)
    with pytest.raises(IndexFormatError):
        from_bytes(bytes(bad))
