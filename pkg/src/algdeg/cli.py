"""Command-line interface.

Exit codes: 0 success, 1 runtime or data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import bitpack, cube
from .anf import anft_bitwise, unpack
from .bench import run_bench
from .degree import BOTTOM, Algorithm, degree_pipeline, search
from .distribution import (EXACT_MAX_N, distribution_table, empirical_distribution,
                           format_probability)
from .errors import ConsistencyError, FormatError, ParseError
from .ingest import generate_random, read_functions
from .selftest import run_selftest

ALGORITHMS = {
    "es": Algorithm.ES,
    "wlo": Algorithm.WLO_BYTE,
    "bitwise": Algorithm.WLO_BIT_MASK,
    "probe": Algorithm.WLO_BIT_PROBE,
}


class _Usage(Exception):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def _dimension(args, low: int = 1) -> int:
    n = args.n
    if not low <= n <= bitpack.MAX_N:
        raise _Usage(f"--n must lie in [{low}, {bitpack.MAX_N}], got {n}")
    return n


def _join(values) -> str:
    return ", ".join(str(int(v)) for v in values)


def cmd_wlo(args) -> int:
    n = _dimension(args)
    seq = cube.generate_wlo(n)
    if args.format == "lines":
        for k in range(n + 1):
            _out(_join(cube.layer_slice(seq, k)))
    elif args.format == "csv":
        _out("position,layer,index")
        layers = seq.layer_of_position()
        for pos, (idx, k) in enumerate(zip(seq.order.tolist(), layers.tolist())):
            _out(f"{pos},{k},{idx}")
    else:
        _out(_join(seq.order))
    return 0


def cmd_masks(args) -> int:
    n = _dimension(args)
    masks = cube.generate_masks(n).masks
    if n <= 5:
        _out(", ".join(bitpack.serial_number(m) for m in masks))
    else:
        for k, m in enumerate(masks):
            _out(f"{k}: {bitpack.hex_dump(m)}")
    return 0


def _text_stream(n: int, lines) -> list[bitpack.PackedVector]:
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(bitpack.from_text(line, n))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    return out


def _source(args, n: int):
    if args.input and args.random is not None:
        raise _Usage("--input and --random are mutually exclusive")
    if args.input:
        return read_functions(args.input, n)
    if args.random is not None:
        if args.random < 0:
            raise _Usage("--random COUNT must be non-negative")
        return generate_random(n, args.random, args.seed)
    return _text_stream(n, sys.stdin)


def cmd_degree(args) -> int:
    n = _dimension(args)
    if args.input_is_anf and args.parity_shortcut:
        raise _Usage("--parity-shortcut applies to truth tables, not to --input-is-anf")
    algorithm = ALGORITHMS[args.algorithm]
    source = _source(args, n)
    hist: Counter = Counter()
    header = "index,degree,steps,algorithm"
    _out(header + (",anf" if args.emit_anf else ""))
    for index, vector in enumerate(source):
        if args.input_is_anf:
            anf = vector
            res = search(unpack(anf) if algorithm.bytewise else anf, algorithm)
        else:
            res = degree_pipeline(vector, algorithm, parity_shortcut=args.parity_shortcut)
            anf = anft_bitwise(vector) if args.emit_anf else None
        line = f"{index},{res.degree},{res.steps},{res.algorithm.value}"
        if args.emit_anf:
            line += "," + bitpack.render_text(anf)
        _out(line)
        hist[res.degree] += 1
    _out(f"# functions: {sum(hist.values())}")
    for d in [BOTTOM] + list(range(n + 1)):
        if hist[d]:
            _out(f"# degree {d}: {hist[d]}")
    return 0


def cmd_dist(args) -> int:
    n = _dimension(args)
    exact = args.mode == "exact"
    if exact and n > EXACT_MAX_N:
        raise _Usage(f"exact mode needs n <= {EXACT_MAX_N}; use --mode prob")
    rows = distribution_table(n, exact=exact)
    hist = None
    if args.empirical is not None:
        if args.empirical < 1:
            raise _Usage("--empirical COUNT must be positive")
        hist = empirical_distribution(n, args.empirical, args.seed)
    header = "n,k,count,probability"
    if hist is not None:
        header += ",empirical,deviation"
    _out(header)
    for row in rows:
        line = f"{row.n},{row.k},{row.count if row.count is not None else 'NA'},{format_probability(row.probability)}"
        if hist is not None:
            frac = hist.fraction(row.k)
            line += f",{format_probability(frac)},{format_probability(abs(frac - row.probability))}"
        _out(line)
    if hist is not None:
        _out(f"# zero function: {hist.counts.get(BOTTOM, 0)} of {hist.total}")
    return 0


def cmd_bench(args) -> int:
    n = _dimension(args)
    if args.random is None and not args.input:
        raise _Usage("bench needs --random COUNT or --input PATH")
    if args.repetitions < 1:
        raise _Usage("--repetitions must be >= 1")
    stream = _source(args, n)
    if len(stream) < 1:
        raise _Usage("bench needs at least one function")
    report = run_bench(stream, repetitions=args.repetitions)
    if args.format == "json":
        _out(json.dumps(report.to_dict(), indent=2))
    else:
        _out(report.render())
    return 0


def cmd_selftest(args) -> int:
    ok, failed = run_selftest(_out)
    if not ok:
        sys.stderr.write(f"selftest failed: {failed}\n")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="algdeg", description="Algebraic degree of Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wlo", help="print the weight-lexicographic order sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["flat", "lines", "csv"], default="flat")
    p.set_defaults(func=cmd_wlo)

    p = sub.add_parser("masks", help="print the layer masks")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_masks)

    def add_source(p):
        p.add_argument("--input", metavar="PATH", help="raw file of little-endian 64-bit words")
        p.add_argument("--random", type=int, metavar="COUNT", help="generate COUNT seeded functions")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("degree", help="compute degrees (reads 0/1 text lines from stdin by default)")
    p.add_argument("--n", type=int, required=True)
    add_source(p)
    p.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="bitwise")
    p.add_argument("--parity-shortcut", action="store_true")
    p.add_argument("--input-is-anf", action="store_true", help="inputs are ANF vectors, skip the transform")
    p.add_argument("--emit-anf", action="store_true", help="append the ANF vector to each line")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("dist", help="degree distribution table as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["exact", "prob"], default="prob")
    p.add_argument("--empirical", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("bench", help="time the four pipelines on one function stream")
    p.add_argument("--n", type=int, required=True)
    add_source(p)
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run embedded golden fixtures")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"algdeg: error: {exc}\n")
        return 2
    except ConsistencyError as exc:
        sys.stderr.write(f"algdeg: internal consistency failure: {exc}\n")
        return 1
    except (OSError, FormatError, ParseError, ValueError) as exc:
        sys.stderr.write(f"algdeg: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
