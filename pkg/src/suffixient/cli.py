"""Command line: ``suffixient build | query | stats | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import sys

from . import indexfile
from .inputs import Record, read_patterns, read_text
from .mems import build_index, find_mems
from .text import InvalidTextError, load_text
from .verify import verify_random, verify_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _print_stats(stats: dict[str, int]) -> None:
    for key, value in stats.items():
        print(f"{key}\t{value}")


def cmd_build(args) -> int:
    try:
        symbols, separator = read_text(args.text)
        t = load_text(symbols)
    except OSError as exc:
        return _err(f"cannot read {args.text}: {exc.strerror or exc}")
    except InvalidTextError as exc:
        return _err(f"{args.text}: {exc}")
    idx = build_index(t, seed=args.seed, separator=separator)
    try:
        indexfile.save(idx, args.output)
    except OSError as exc:
        return _err(f"cannot write {args.output}: {exc.strerror or exc}")
    _print_stats(idx.stats())
    return EXIT_OK


def _load_index(path: str):
    try:
        return indexfile.load(path)
    except OSError as exc:
        raise SystemExit(_err(f"cannot read {path}: {exc.strerror or exc}"))
    except indexfile.IndexFormatError as exc:
        raise SystemExit(_err(f"{path}: {exc}"))


def cmd_query(args) -> int:
    idx = _load_index(args.index)
    if args.pattern_string is not None:
        records = [Record("", tuple(args.pattern_string.encode("utf-8")))]
    else:
        try:
            records = read_patterns(args.pattern_file)
        except OSError as exc:
            return _err(f"cannot read {args.pattern_file}: {exc.strerror or exc}")
    named = len(records) > 1 or any(r.name for r in records)
    out = sys.stdout
    for rec in records:
        try:
            mems, stats = find_mems(idx, rec.symbols)
        except InvalidTextError as exc:
            return _err(str(exc))
        if named:
            print(f">{rec.name}", file=out)
        for mem in mems:
            if mem.length >= args.min_len:
                print(f"{mem.start}\t{mem.end}\t{mem.length}", file=out)
        if args.stats:
            label = f"{rec.name}\t" if named else ""
            print(f"{label}iterations={stats.iterations} zft_calls={stats.zft_calls} "
                  f"lcs_calls={stats.lcs_calls} lcp_calls={stats.lcp_calls} "
                  f"zft_lcs_calls={stats.zft_lcs_calls}", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args) -> int:
    idx = _load_index(args.index)
    _print_stats(idx.stats())
    return EXIT_OK


def _positions(spec: str) -> list[int]:
    try:
        return [int(x) for x in spec.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of positions: {spec!r}")


def cmd_verify(args) -> int:
    log = lambda line: print(line, file=sys.stderr)
    if args.text is not None:
        try:
            symbols, _ = read_text(args.text)
            t = load_text(symbols)
        except OSError as exc:
            return _err(f"cannot read {args.text}: {exc.strerror or exc}")
        except InvalidTextError as exc:
            return _err(f"{args.text}: {exc}")
        if args.positions is not None and any(not 1 <= s <= t.n for s in args.positions):
            return _err(f"positions must lie in 1..{t.n}")
        report = verify_text(t, args.trials, args.max_m, args.seed, args.positions, log=log)
    else:
        if args.positions is not None:
            return _err("--positions needs a text (-t)")
        report = verify_random(args.trials, args.sigma, args.max_n, args.max_m, args.seed, log=log)
    status = "passed" if report.ok else "FAILED"
    print(f"verify {status}: {report.checks} checks, {len(report.failures)} failures")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="suffixient", description="Suffixient-set MEM index")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="index a text file")
    p.add_argument("-t", "--text", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--seed", type=int, default=None, help="Karp-Rabin seed (random if omitted)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="report the MEMs of a pattern as TSV")
    p.add_argument("-i", "--index", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-p", "--pattern-file")
    src.add_argument("-P", "--pattern", dest="pattern_string")
    p.add_argument("--min-len", type=int, default=1)
    p.add_argument("--stats", action="store_true", help="print query counters to stderr")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("stats", help="print index statistics")
    p.add_argument("-i", "--index", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run randomised oracle checks")
    p.add_argument("-t", "--text")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--max-m", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--positions", type=_positions, default=None,
                   help="also check that these 1-based positions form a suffixient set")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "seed", None) is not None and not 0 <= args.seed < 1 << 64:
        return _err("--seed must be a non-negative 64-bit integer")
    if args.command == "verify" and (args.trials < 0 or not 1 <= args.sigma <= 31
                                     or args.max_n < 1 or args.max_m < 0):
        return _err("trials/max-m must be >= 0, max-n >= 1 and sigma in 1..31")
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
