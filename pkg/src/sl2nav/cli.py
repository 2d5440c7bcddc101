"""Command-line frontend: decompose, verify, eval, stats, oracle,
oracle-compare.

Exit codes: 0 success, 2 validation error, 3 verification mismatch.
Diagnostics go to stderr; successful output (text or JSON) to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (
    bfs_distances,
    oracle_compare,
    t_stats,
    write_comparison_csv,
    write_distance_histogram_csv,
    write_histogram_csv,
)
from .arith import is_probable_prime
from .mat2 import Mat2Fp
from .navigate import DEFAULT_C_CONST, DEFAULT_MAX_ATTEMPTS, NavConfig, decompose, verify
from .word import Word


class CliError(Exception):
    """Validation failure; the message names the offending argument."""


def _parse_prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise CliError("--prime: %r is not a decimal integer" % text) from None
    if p < 2 or not is_probable_prime(p):
        raise CliError("--prime: %d is not prime" % p)
    return p


def _parse_matrix(text: str, p: int) -> Mat2Fp:
    try:
        return Mat2Fp.from_string(text, p)
    except ValueError as exc:
        raise CliError("--matrix: %s" % exc) from None


def _parse_word(text: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as exc:
        raise CliError("--word: %s" % exc) from None


def _nav_config(args) -> NavConfig:
    try:
        return NavConfig(c_const=args.c_const, max_attempts=args.max_attempts, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _emit(args, text_lines, json_dict) -> None:
    if args.format == "json":
        print(json.dumps(json_dict))
    else:
        for line in text_lines:
            print(line)


def cmd_decompose(args) -> int:
    p = _parse_prime(args.prime)
    target = _parse_matrix(args.matrix, p)
    report = decompose(target, _nav_config(args))
    _emit(
        args,
        [
            "word: %s" % report.word,
            "length: %d" % report.length,
            "attempts: %d" % report.attempts,
            "threshold: %r" % report.threshold,
            "fallback: %s" % ("yes" if report.used_fallback else "no"),
            "target: %s" % target.entries_string(),
            "p: %d" % p,
        ],
        report.to_json_dict(),
    )
    return 0


def cmd_verify(args) -> int:
    p = _parse_prime(args.prime)
    target = _parse_matrix(args.matrix, p)
    w = _parse_word(args.word)
    if not verify(w, target):
        got = w.eval_fp(p)
        print(
            "sl2nav: verification failed: word evaluates to %s, expected %s (mod %d)"
            % (got.entries_string(), target.entries_string(), p),
            file=sys.stderr,
        )
        return 3
    _emit(args, ["ok"], {"verified": True})
    return 0


def cmd_eval(args) -> int:
    p = _parse_prime(args.prime)
    w = _parse_word(args.word)
    m = w.eval_fp(p)
    _emit(args, [m.entries_string()], {"matrix": m.entries_string(), "p": str(p)})
    return 0


def cmd_stats(args) -> int:
    p = _parse_prime(args.prime)
    try:
        stats = t_stats(p, samples=args.samples, seed=args.seed, c_list=[args.c_const])
    except ValueError as exc:
        raise CliError("--prime: %s" % exc) from None
    if args.output:
        write_histogram_csv(stats, args.output)
    frac_lines = [
        "fraction_below_threshold[C=%g]: %r" % (c, frac)
        for c, frac in stats.below_threshold_fraction.items()
    ]
    _emit(
        args,
        [
            "p: %d" % stats.p,
            "count: %d" % stats.count,
            "mean: %r" % stats.mean,
            "median: %r" % stats.median,
            "max: %d" % stats.max_value,
        ]
        + frac_lines,
        stats.to_json_dict(),
    )
    return 0


def cmd_oracle(args) -> int:
    p = _parse_prime(args.prime)
    try:
        table = bfs_distances(p)
    except ValueError as exc:
        raise CliError("--prime: %s" % exc) from None
    if args.output:
        write_distance_histogram_csv(table, args.output)
    _emit(
        args,
        ["p: %d" % p, "order: %d" % table.order, "diameter: %d" % table.diameter],
        table.to_json_dict(),
    )
    return 0


def cmd_oracle_compare(args) -> int:
    p = _parse_prime(args.prime)
    cfg = _nav_config(args)
    try:
        report = oracle_compare(p, args.samples, cfg)
    except ValueError as exc:
        raise CliError("--prime: %s" % exc) from None
    if args.output:
        write_comparison_csv(report, args.output)
    _emit(
        args,
        [
            "p: %d" % p,
            "samples: %d" % report.samples,
            "violations: %d" % report.violations,
            "min_ratio: %r" % report.min_ratio,
            "mean_ratio: %r" % report.mean_ratio,
            "max_ratio: %r" % report.max_ratio,
        ],
        report.to_json_dict(),
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2nav",
        description="Short words in the generators U=[[1,1],[0,1]] and "
        "L=[[1,0],[1,1]] for elements of SL2(F_p).",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", required=True, help="prime modulus (decimal)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    nav = argparse.ArgumentParser(add_help=False)
    nav.add_argument("--seed", type=int, default=0, help="random seed (64-bit)")
    nav.add_argument("--c-const", type=float, default=DEFAULT_C_CONST, dest="c_const")
    nav.add_argument(
        "--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS, dest="max_attempts"
    )

    p_dec = sub.add_parser("decompose", parents=[common, nav], help="find a word for a matrix")
    p_dec.add_argument("--matrix", required=True, help='target as "a,b,c,d"')
    p_dec.set_defaults(func=cmd_decompose)

    p_ver = sub.add_parser("verify", parents=[common], help="check a word against a matrix")
    p_ver.add_argument("--word", required=True)
    p_ver.add_argument("--matrix", required=True)
    p_ver.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a word mod p")
    p_eval.add_argument("--word", required=True)
    p_eval.set_defaults(func=cmd_eval)

    p_stats = sub.add_parser(
        "stats", parents=[common], help="partial-quotient-sum statistics for a/p"
    )
    p_stats.add_argument("--samples", type=int, default=None, help="sample size (default: exhaustive)")
    p_stats.add_argument("--seed", type=int, default=0)
    p_stats.add_argument("--c-const", type=float, default=2.0, dest="c_const")
    p_stats.add_argument("--output", default=None, help="histogram CSV path")
    p_stats.set_defaults(func=cmd_stats)

    p_oracle = sub.add_parser("oracle", parents=[common], help="exact BFS distances (small p)")
    p_oracle.add_argument("--output", default=None, help="distance histogram CSV path")
    p_oracle.set_defaults(func=cmd_oracle)

    p_cmp = sub.add_parser(
        "oracle-compare", parents=[common, nav], help="word lengths vs exact distances"
    )
    p_cmp.add_argument("--samples", type=int, default=100)
    p_cmp.add_argument("--output", default=None, help="per-target CSV path")
    p_cmp.set_defaults(func=cmd_oracle_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print("sl2nav: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
