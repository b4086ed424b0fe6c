"""Single-file binary serialization of a :class:`CompressedIndex`.

Layout (all integers little-endian)::

    header     magic "SFXT", version u32, n, sigma, r_bar, g, |S|, seed,
               modulus, base, separator, start (u64 each), height u32,
               terminal count u32, section count u32, set source u32
    table      section count x (id u32, reserved u32, offset u64, length u64)
    sections   u64 arrays, see ``Section``

Offsets are absolute byte offsets into the file.
"""
from __future__ import annotations

import struct
from enum import IntEnum
from pathlib import Path
from typing import BinaryIO

import numpy as np

from .colex import ColexIndex
from .grammar import GrammarError, _annotate
from .krhash import HashConfig
from .mems import CompressedIndex
from .sets import SuffixientSet

MAGIC = b"SFXT"
VERSION = 1

_HEADER = struct.Struct("<4sI10Q4I")
_ENTRY = struct.Struct("<IIQQ")
_U64 = np.dtype("<u8")
_SOURCES = ("run-boundary", "greedy", "user-supplied")


class IndexFormatError(ValueError):
    """The file is not a readable index of this format version."""


class Section(IntEnum):
    SUFFIXIENT = 1   # sorted positions
    COLEX_ORDER = 2  # permutation: k-th colex prefix is SUFFIXIENT[perm[k]]
    COLEX_LCS = 3    # LCS of colex-adjacent prefixes
    TERMINALS = 4    # terminal symbol values
    RULES = 5        # 2 child ids per rule
    LENGTHS = 6      # |exp(X)| per symbol id
    HASHES = 7       # h(exp(X)) per symbol id


def _arr(values) -> bytes:
    return np.asarray(values, dtype=_U64).tobytes()


def to_bytes(idx: CompressedIndex) -> bytes:
    slp = idx.slp
    positions = idx.suffixient.positions
    where = {s: k for k, s in enumerate(positions)}
    sections = {
        Section.SUFFIXIENT: _arr(positions),
        Section.COLEX_ORDER: _arr([where[s] for s in idx.colex.order]),
        Section.COLEX_LCS: _arr(idx.colex.adjacent_lcs),
        Section.TERMINALS: _arr(slp.terminals),
        Section.RULES: _arr([c for rule in slp.rules for c in rule]),
        Section.LENGTHS: _arr(slp.exp_len),
        Section.HASHES: _arr(slp.exp_hash),
    }
    cfg = idx.hash_cfg
    header = _HEADER.pack(
        MAGIC, VERSION, idx.n, idx.sigma, idx.r_bar, slp.g, len(positions),
        cfg.seed, cfg.modulus, cfg.base, idx.separator, slp.start,
        slp.height, slp.num_terminals, len(sections), _SOURCES.index(idx.suffixient.source),
    )
    offset = _HEADER.size + _ENTRY.size * len(sections)
    table = []
    for sid, blob in sections.items():
        table.append(_ENTRY.pack(int(sid), 0, offset, len(blob)))
        offset += len(blob)
    return b"".join([header, *table, *sections.values()])


def from_bytes(data: bytes) -> CompressedIndex:
    if len(data) < _HEADER.size:
        raise IndexFormatError("file too short for an index header")
    (magic, version, n, sigma, r_bar, g, s_size, seed, modulus, base, separator, start,
     height, n_terms, n_sections, source) = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise IndexFormatError("bad magic; not an index file")
    if version != VERSION:
        raise IndexFormatError(f"unsupported index format version {version} (expected {VERSION})")
    if source >= len(_SOURCES):
        raise IndexFormatError(f"unknown suffixient set source code {source}")
    expected = {
        Section.SUFFIXIENT: s_size,
        Section.COLEX_ORDER: s_size,
        Section.COLEX_LCS: s_size,
        Section.TERMINALS: n_terms,
        Section.RULES: 2 * g,
        Section.LENGTHS: n_terms + g,
        Section.HASHES: n_terms + g,
    }
    if s_size == 0:
        raise IndexFormatError("index has an empty suffixient set")
    arrays: dict[Section, list[int]] = {}
    table_end = _HEADER.size + _ENTRY.size * n_sections
    if len(data) < table_end:
        raise IndexFormatError("truncated section table")
    for k in range(n_sections):
        sid, _, offset, length = _ENTRY.unpack_from(data, _HEADER.size + _ENTRY.size * k)
        if offset + length > len(data) or offset < table_end:
            raise IndexFormatError(f"section {sid} lies outside the file")
        try:
            section = Section(sid)
        except ValueError:
            continue  # unknown sections are skipped
        if length != 8 * expected[section]:
            raise IndexFormatError(
                f"section {section.name} has {length} bytes, header implies {8 * expected[section]}")
        arrays[section] = np.frombuffer(data, dtype=_U64, count=length // 8, offset=offset).tolist()
    missing = set(Section) - set(arrays)
    if missing:
        raise IndexFormatError(f"missing sections: {sorted(m.name for m in missing)}")

    try:
        cfg = HashConfig(seed, modulus, base)
    except ValueError as exc:
        raise IndexFormatError(str(exc)) from exc
    flat = arrays[Section.RULES]
    rules = list(zip(flat[0::2], flat[1::2]))
    try:
        slp = _annotate(arrays[Section.TERMINALS], rules, start, cfg)
    except GrammarError as exc:
        raise IndexFormatError(f"corrupt grammar section: {exc}") from exc
    if list(slp.exp_len) != arrays[Section.LENGTHS] or list(slp.exp_hash) != arrays[Section.HASHES]:
        raise IndexFormatError("stored expansion lengths or hashes disagree with the grammar")
    if slp.n != n or slp.height != height:
        raise IndexFormatError("header n/height disagree with the grammar")

    positions = arrays[Section.SUFFIXIENT]
    perm = arrays[Section.COLEX_ORDER]
    if sorted(perm) != list(range(s_size)):
        raise IndexFormatError("colex order is not a permutation")
    try:
        suffixient = SuffixientSet(tuple(positions), _SOURCES[source])
    except ValueError as exc:
        raise IndexFormatError(f"corrupt suffixient section: {exc}") from exc
    if positions and positions[-1] > n:
        raise IndexFormatError("suffixient position beyond the text")
    colex = ColexIndex(tuple(positions[k] for k in perm), tuple(arrays[Section.COLEX_LCS]))
    idx = CompressedIndex(slp, suffixient, colex, r_bar, separator)
    if idx.sigma != sigma:
        raise IndexFormatError("header sigma disagrees with the grammar terminals")
    return idx


def save(idx: CompressedIndex, path: str | Path | BinaryIO) -> None:
    blob = to_bytes(idx)
    if hasattr(path, "write"):
        path.write(blob)
    else:
        Path(path).write_bytes(blob)


def load(path: str | Path | BinaryIO) -> CompressedIndex:
    if hasattr(path, "read"):
        return from_bytes(path.read())
    return from_bytes(Path(path).read_bytes())
