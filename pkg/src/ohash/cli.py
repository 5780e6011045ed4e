"""Command-line surface: search files, generate texts, run benchmarks, report.

Exit codes: 0 success, 1 usage or I/O failure, 2 algorithm inapplicable to
the pattern (fixed-q engine with a pattern shorter than q).
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__
from .backend import available_backends, backend_name
from .bench import (
    DEFAULT_ITERS,
    DEFAULT_LENGTHS,
    DEFAULT_REPS,
    DEFAULT_TEXT_LEN,
    BenchConfig,
    TextSource,
    derive_seed,
    format_csv,
    generate_random_text,
    load_text_file,
    run_grid,
    sample_patterns,
)
from .engines import FIXED_Q, Variant, execute_plan, plan, search
from .hashing import QTooLargeError
from .report import CsvFormatError, write_report

ALGO_NAMES = [v.value for v in Variant]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INAPPLICABLE = 2


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _parse_lengths(raw: str) -> tuple[int, ...]:
    """'2:22:2' (inclusive range) or '4,8,12'."""
    raw = raw.strip()
    if ":" in raw:
        parts = raw.split(":")
        if len(parts) == 2:
            start, stop, step = int(parts[0]), int(parts[1]), 1
        elif len(parts) == 3:
            start, stop, step = (int(p) for p in parts)
        else:
            raise ValueError(f"bad length range {raw!r}")
        if step < 1 or stop < start:
            raise ValueError(f"bad length range {raw!r}")
        return tuple(range(start, stop + 1, step))
    return tuple(int(p) for p in raw.split(","))


def _parse_algos(raw: str) -> tuple[Variant, ...]:
    out = []
    for name in raw.split(","):
        name = name.strip().lower()
        try:
            out.append(Variant(name))
        except ValueError:
            raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGO_NAMES)}")
    if not out:
        raise ValueError("no algorithms given")
    return tuple(out)


def _read_pattern(args) -> bytes:
    if args.pattern_file is not None:
        with open(args.pattern_file, "rb") as fh:
            return fh.read()
    return os.fsencode(args.pattern)


def cmd_search(args) -> int:
    pattern = _read_pattern(args)
    with open(args.text_file, "rb") as fh:
        text = fh.read()
    positions = search(args.algo, pattern, text, backend=args.backend)
    if args.count_only:
        print(len(positions))
    else:
        for pos in positions:
            print(pos)
    return EXIT_OK


def cmd_gen(args) -> int:
    source = generate_random_text(args.sigma, args.len, args.seed)
    with open(args.out, "wb") as fh:
        fh.write(source.octets)
    return EXIT_OK


def _bench_sources(args) -> list[TextSource]:
    if args.corpus:
        return [load_text_file(p) for p in args.corpus]
    sources = []
    for part in args.sigma.split(","):
        sigma = int(part)
        sources.append(generate_random_text(sigma, args.text_len, args.seed))
    return sources


def cmd_bench(args) -> int:
    sources = _bench_sources(args)
    config = BenchConfig(
        lengths=_parse_lengths(args.lengths),
        reps=args.reps,
        inner_iters=args.iters,
        seed=args.seed,
        algos=_parse_algos(args.algos),
        include_prep=args.include_prep,
        reference_verify=args.verify,
    )
    records = run_grid(config, sources, backend=args.backend)
    csv_text = format_csv(records, sources, config, backend=args.backend or backend_name())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def cmd_report(args) -> int:
    with open(args.csv) as fh:
        csv_text = fh.read()
    for path in write_report(csv_text, args.out_dir):
        print(path)
    return EXIT_OK


def cmd_backends(args) -> int:
    names = available_backends()
    print(f"active backend: {backend_name()}")
    print(f"available: {', '.join(names)}")
    if not args.bench:
        return EXIT_OK
    if len(names) < 2:
        print("compiled kernels not built; nothing to compare")

    text = generate_random_text(args.sigma, args.text_len, args.seed)
    patterns = sample_patterns(text, args.m, 10, derive_seed(args.seed, text.label, args.m))
    print(f"\nworkload: {text.label} n={args.text_len} m={args.m}, 10 patterns x 3 iters")
    print(f"{'algo':<8}" + "".join(f"{n + ' ms':>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for variant in (Variant.NAIVE, Variant.HASH3, Variant.HASH8, Variant.OHASH1, Variant.OHASH2):
        fixed_q = FIXED_Q.get(variant)
        if fixed_q is not None and args.m < fixed_q:
            print(f"{variant.value:<8}" + "".join(f"{'-':>12}" for _ in names))
            continue
        plans = [plan(variant, p) for p in patterns]
        means = {}
        for name in names:
            kern_total = 0.0
            for pl in plans:
                for _ in range(3):
                    t0 = time.perf_counter()
                    execute_plan(pl, text.octets, backend=name)
                    kern_total += time.perf_counter() - t0
            means[name] = kern_total / (len(plans) * 3) * 1000.0
        row = f"{variant.value:<8}" + "".join(f"{means[n]:>12.3f}" for n in names)
        if len(names) > 1:
            row += f"{means['py'] / means['c']:>11.1f}x"
        print(row)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="ohash", description="Hash-based exact string matching and benchmark lab")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="search a pattern in a file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help="pattern as a command-line string (raw octets of the argument encoding)")
    group.add_argument("--pattern-file", help="file whose raw octets are the pattern")
    p.add_argument("--text-file", required=True, help="file to search, read as raw octets")
    p.add_argument("--algo", required=True, choices=ALGO_NAMES)
    p.add_argument("--count-only", action="store_true", help="print the occurrence count instead of positions")
    p.add_argument("--backend", choices=["c", "py"], help="force a kernel backend")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="generate a seeded random text file")
    p.add_argument("--sigma", type=int, required=True, help="alphabet size, 2..256")
    p.add_argument("--len", type=int, required=True, help="text length in octets")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a benchmark grid, emit CSV")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sigma", help="random text class(es), e.g. 32 or 8,32,250")
    group.add_argument("--corpus", action="append", help="corpus file (repeatable)")
    p.add_argument("--text-len", type=int, default=DEFAULT_TEXT_LEN, help="random text length (default 1 MiB)")
    p.add_argument("--lengths", default="2:22:2", help="pattern lengths, '2:22:2' or '4,8,12'")
    p.add_argument("--reps", type=int, default=DEFAULT_REPS, help="patterns sampled per length")
    p.add_argument("--iters", type=int, default=DEFAULT_ITERS, help="timed repetitions per pattern")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algos", default=",".join(v.value for v in Variant if v is not Variant.NAIVE))
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--verify", action="store_true", help="cross-check totals with the pure-Python reference oracle")
    p.add_argument("--include-prep", action="store_true", help="fold preprocessing into the timed phase")
    p.add_argument("--backend", choices=["c", "py"], help="force a kernel backend")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="render tables and plot data from a bench CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("backends", help="show / compare the compiled and pure kernels")
    p.add_argument("--bench", action="store_true", help="time both backends on a small workload")
    p.add_argument("--sigma", type=int, default=64)
    p.add_argument("--text-len", type=int, default=1 << 20)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_backends)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except QTooLargeError as exc:
        sys.stderr.write(f"ohash: {exc}\n")
        return EXIT_INAPPLICABLE
    except CsvFormatError as exc:
        sys.stderr.write(f"ohash: error: {exc}\n")
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"ohash: error: {exc}\n")
        return EXIT_USAGE


def console_main() -> None:
    raise SystemExit(main())
