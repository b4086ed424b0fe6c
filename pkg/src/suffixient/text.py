"""Indexed texts, patterns and alphabet-based pattern chunking.

Symbols are non-negative integers. Byte and ``str`` inputs are mapped to
their byte / code-point values. The value ``0`` is reserved as the sentinel
and sorts below every other symbol. Public positions are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence, Union

SENTINEL = 0

RawSymbols = Union[str, bytes, bytearray, Sequence[int]]


class InvalidTextError(ValueError):
    """Raised for empty inputs or inputs containing the sentinel."""


class Mem(NamedTuple):
    """A maximal exact match ``P[start..end]``, 1-based and inclusive."""

    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def to_symbols(raw: RawSymbols) -> tuple[int, ...]:
    if isinstance(raw, str):
        return tuple(ord(c) for c in raw)
    if isinstance(raw, (bytes, bytearray)):
        return tuple(raw)
    out = tuple(int(c) for c in raw)
    if any(c < 0 for c in out):
        raise InvalidTextError("symbols must be non-negative integers")
    return out


def symbols_to_str(symbols: Iterable[int]) -> str:
    """Render symbols for display; the sentinel is shown as ``$``."""
    return "".join("$" if c == SENTINEL else chr(c) for c in symbols)


@dataclass(frozen=True)
class Text:
    """A text ``T[1..n]`` whose last symbol is the sentinel."""

    symbols: tuple[int, ...]
    alphabet: frozenset[int]
    _str: str = field(default="", repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    @property
    def sentinel(self) -> int:
        return SENTINEL

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, pos: int) -> int:
        """1-based symbol access."""
        if not 1 <= pos <= self.n:
            raise IndexError(f"position {pos} outside 1..{self.n}")
        return self.symbols[pos - 1]

    def as_str(self) -> str:
        # one code point per symbol, so str.find works for oracle searches
        return self._str

    def body(self) -> tuple[int, ...]:
        """The text without its trailing sentinel."""
        return self.symbols[:-1]

    def __str__(self) -> str:
        return symbols_to_str(self.symbols)


@dataclass(frozen=True)
class Pattern:
    symbols: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def as_str(self) -> str:
        return "".join(map(chr, self.symbols))


@dataclass(frozen=True)
class PatternChunk:
    offset: int  # 1-based start in the original pattern
    symbols: tuple[int, ...]

    @property
    def end(self) -> int:
        return self.offset + len(self.symbols) - 1


def load_text(raw: RawSymbols) -> Text:
    """Validate ``raw`` and append the sentinel.

    >>> t = load_text("abab")
    >>> t.n, t.sigma
    (5, 2)
    """
    body = to_symbols(raw)
    if not body:
        raise InvalidTextError("cannot index an empty text")
    if SENTINEL in body:
        raise InvalidTextError("text contains the reserved sentinel symbol 0")
    symbols = body + (SENTINEL,)
    return Text(symbols, frozenset(body), "".join(map(chr, symbols)))


def make_pattern(raw: RawSymbols | Pattern) -> Pattern:
    if isinstance(raw, Pattern):
        return raw
    symbols = to_symbols(raw)
    if SENTINEL in symbols:
        raise InvalidTextError("pattern contains the reserved sentinel symbol 0")
    return Pattern(symbols)


def split_pattern(p: RawSymbols | Pattern, alphabet: Iterable[int] | Text) -> list[PatternChunk]:
    """Split ``p`` into maximal runs of symbols that occur in the text."""
    if isinstance(alphabet, Text):
        alphabet = alphabet.alphabet
    alpha = frozenset(alphabet)
    symbols = make_pattern(p).symbols
    chunks: list[PatternChunk] = []
    start = None
    for k, c in enumerate(symbols):
        if c in alpha:
            if start is None:
                start = k
        elif start is not None:
            chunks.append(PatternChunk(start + 1, symbols[start:k]))
            start = None
    if start is not None:
        chunks.append(PatternChunk(start + 1, symbols[start:]))
    return chunks
