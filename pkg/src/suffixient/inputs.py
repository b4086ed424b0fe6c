"""Reading texts and patterns from plain byte files or FASTA-like files.

FASTA-like input: lines starting with ``>`` name a record, other lines are
sequence data with line breaks removed. Multi-record texts are joined with
one separator symbol per record boundary, numbered from
``RECORD_SEPARATOR_BASE`` upward, so no two records share a separator and
no byte-valued pattern symbol can match one.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

RECORD_SEPARATOR_BASE = 256


@dataclass(frozen=True)
class Record:
    name: str
    symbols: tuple[int, ...]


def is_fasta(data: bytes) -> bool:
    return data.lstrip()[:1] == b">"


def parse_fasta(data: bytes) -> list[Record]:
    records: list[Record] = []
    name, chunks = None, []
    for line in data.splitlines():
        if line.startswith(b">"):
            if name is not None:
                records.append(Record(name, tuple(b"".join(chunks))))
            name, chunks = line[1:].strip().decode("utf-8", "replace"), []
        elif name is not None:
            chunks.append(line.strip())
    if name is not None:
        records.append(Record(name, tuple(b"".join(chunks))))
    return records


def _plain(data: bytes) -> tuple[int, ...]:
    return tuple(data.rstrip(b"\r\n"))


def read_text(path: str | Path) -> tuple[tuple[int, ...], int]:
    """Symbols of the text file and the first separator used (0 if single record)."""
    data = Path(path).read_bytes()
    if not is_fasta(data):
        return _plain(data), 0
    records = parse_fasta(data)
    out: list[int] = []
    for k, rec in enumerate(records):
        if k:
            out.append(RECORD_SEPARATOR_BASE + k - 1)
        out.extend(rec.symbols)
    return tuple(out), RECORD_SEPARATOR_BASE if len(records) > 1 else 0


def read_patterns(path: str | Path) -> list[Record]:
    data = Path(path).read_bytes()
    if is_fasta(data):
        return parse_fasta(data)
    return [Record("", _plain(data))]
