"""Command-line interface: sub, bench, selftest.

Exit codes: 0 success, 1 input or usage errors, 2 negative result,
3 verification failure.
"""

import argparse
import statistics
import sys

from .bench import (
    DEFAULT_DIGITS,
    DEFAULT_RUNS,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    build_cases,
    rows_to_csv,
    run_bench,
)
from .errors import EmptyInput, InvalidDigit, NegativeResult, VerificationFailure
from .magnitude import format_magnitude, parse_magnitude
from .oracle import subtract_digitwise
from .parallel import subtract_parallel
from .selftest import run_selftest
from .sequential import subtract_sequential

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # NegativeResult here, so remap usage problems to the input-error code.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _read_operand(text: str) -> str:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="ascii") as fh:
            text = fh.read()
        if text.endswith("\n"):
            text = text[:-1]
        if text.endswith("\r"):
            text = text[:-1]
    return text


def _cmd_sub(args) -> int:
    try:
        a = parse_magnitude(_read_operand(args.a))
        b = parse_magnitude(_read_operand(args.b))
    except (EmptyInput, InvalidDigit, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.parallel:
            result, _ = subtract_parallel(a, b, args.workers)
        else:
            result = subtract_sequential(a, b)
    except NegativeResult:
        print("error: result would be negative", file=sys.stderr)
        return EXIT_NEGATIVE
    text = format_magnitude(result)
    if args.verify:
        expected = subtract_digitwise(format_magnitude(a), format_magnitude(b))
        if text != expected:
            print("error: result failed verification against the reference", file=sys.stderr)
            return EXIT_VERIFY
    print(text)
    return EXIT_OK


def _bench_summary(rows) -> str:
    lines = []
    for digits in sorted({r.digits for r in rows}):
        seq = statistics.median(r.seconds for r in rows if r.digits == digits and r.algo == "sequential")
        par = statistics.median(r.seconds for r in rows if r.digits == digits and r.algo == "parallel")
        speedup = seq / par if par > 0 else float("inf")
        lines.append(
            f"{digits} digits: sequential median {seq:.6f}s, "
            f"parallel median {par:.6f}s, speedup {speedup:.2f}x"
        )
    return "\n".join(lines)


def _cmd_bench(args) -> int:
    try:
        digit_lengths = [int(d) for d in args.digits.split(",") if d]
        if not digit_lengths or min(digit_lengths) < 1:
            raise ValueError
    except ValueError:
        print("error: --digits wants a comma-separated list of positive integers", file=sys.stderr)
        return EXIT_INPUT
    cases = build_cases(digit_lengths, runs=args.runs, workers=args.workers, seed=args.seed)
    rows = []
    try:
        for case in cases:
            rows.extend(run_bench(case, verify=args.verify, emit_hash=args.emit_hash))
    except VerificationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    csv_text = rows_to_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as fh:
            fh.write(csv_text)
        print(f"wrote {len(rows)} rows to {args.csv}", file=sys.stderr)
    else:
        sys.stdout.write(csv_text)
    print(_bench_summary(rows), file=sys.stderr)
    return EXIT_OK


def _cmd_selftest(_args) -> int:
    return EXIT_OK if run_selftest() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bigsub", description="Big-integer decimal subtraction over 18-digit limbs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sub = sub.add_parser("sub", help="subtract two operands (literal digits or @file)")
    p_sub.add_argument("--a", required=True, help="minuend: digit string or @path")
    p_sub.add_argument("--b", required=True, help="subtrahend: digit string or @path")
    p_sub.add_argument("--parallel", action="store_true", help="use the multi-worker algorithm")
    p_sub.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="worker count for --parallel")
    p_sub.add_argument("--verify", action="store_true", help="check the result against the digit-wise reference")
    p_sub.set_defaults(func=_cmd_sub)

    p_bench = sub.add_parser("bench", help="run the timing suite and emit CSV")
    p_bench.add_argument("--digits", default=",".join(str(d) for d in DEFAULT_DIGITS),
                         help="comma-separated operand lengths")
    p_bench.add_argument("--runs", type=int, default=DEFAULT_RUNS, help="runs per case and algorithm")
    p_bench.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="parallel worker count")
    p_bench.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed for operand generation")
    p_bench.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    p_bench.add_argument("--verify", action="store_true", help="check every result against the reference")
    p_bench.add_argument("--emit-hash", action="store_true", help="fill the result_hash CSV column")
    p_bench.set_defaults(func=_cmd_bench)

    p_self = sub.add_parser("selftest", help="run the built-in sanity suite")
    p_self.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
