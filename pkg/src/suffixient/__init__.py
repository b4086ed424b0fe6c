"""Compressed MEM finding with suffixient sets and a hash-annotated SLP."""
from .grammar import Slp, build_balanced_slp, extract, import_slp
from .indexfile import load, save
from .krhash import HashConfig, PatternHashes, preprocess_pattern
from .lcp import lcp, lcs
from .mems import CompressedIndex, QueryStats, build_index, find_mems
from .oracle import is_string_attractor, is_suffixient, mems_naive
from .sets import SuffixientSet, greedy_reduce, suffixient_from_bwt_runs
from .text import Mem, Pattern, Text, load_text, split_pattern

__all__ = [
    "CompressedIndex", "HashConfig", "Mem", "Pattern", "PatternHashes", "QueryStats", "Slp",
    "SuffixientSet", "Text", "build_balanced_slp", "build_index", "extract", "find_mems",
    "greedy_reduce", "import_slp", "is_string_attractor", "is_suffixient", "lcp", "lcs",
    "load", "load_text", "mems_naive", "preprocess_pattern", "save", "split_pattern",
    "suffixient_from_bwt_runs",
]

__version__ = "0.1.0"
