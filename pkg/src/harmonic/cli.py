"""Command-line front end.

Exit status: 0 success, 1 domain error, 2 usage or expression syntax error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Iterator, Sequence, TextIO

from . import records
from .archipelago import DEFAULT_DEPTH, DEFAULT_N_MAX, kernel_search, substitute_collapse
from .errors import DSLSyntaxError, HarmonicError
from .families import (
    FAMILY_NAMES,
    OddChoice,
    build_family,
    distinctness_harness,
    inequivalent_choices,
    permutation_element,
    tau_of,
)
from .free_word import ReducedWord
from .inverse_limit import dumps
from .transfinite import Finite, TransfiniteElement, classify_HE, to_truncated
from .word_dsl import format_word, parse, parse_word


class _UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _bits(text: str) -> list[int]:
    if not text or set(text) - {"0", "1"}:
        raise argparse.ArgumentTypeError(f"pattern must be a nonempty string of 0/1, got {text!r}")
    return [int(c) for c in text]


def _odds(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"support must be comma-separated odd integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--file", type=Path, help="read expressions from a file, one per line ('#' comments)")

    family_opts = argparse.ArgumentParser(add_help=False)
    family_opts.add_argument("--w", metavar="EXPR", help="cor1: the word w (over x3, x4, ...); default x3 x4 ...")
    family_opts.add_argument("--pattern", type=_bits, help="cor2: periodic choice on odd blocks, e.g. 0110")
    family_opts.add_argument("--support", type=_odds, help="cor2: odd integers where the block is swapped")

    parser = argparse.ArgumentParser(
        prog="harmonic",
        description="Words, projections and kernel certificates for the Hawaiian earring and harmonic archipelago groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common, source], help="freely reduce a word")
    p.add_argument("expr", nargs="?")

    p = sub.add_parser("project", parents=[common, source, family_opts], help="level-n projection")
    p.add_argument("target", nargs="?", help=f"family ({', '.join(FAMILY_NAMES)}) or word expression")
    p.add_argument("--level", type=_positive_int, required=True)

    p = sub.add_parser("substitute", parents=[common, source], help="collapse x_1..x_N to x_N")
    p.add_argument("expr", nargs="?")
    p.add_argument("--N", dest="N", type=_positive_int, required=True)

    p = sub.add_parser("kernel", parents=[common, source, family_opts], help="search for a kernel certificate")
    p.add_argument("target", nargs="?")
    p.add_argument(
        "--n-max", dest="n_max", type=_positive_int, default=None, help=f"default {DEFAULT_N_MAX}, capped at depth"
    )
    p.add_argument("--depth", type=_positive_int, default=DEFAULT_DEPTH)

    p = sub.add_parser("classify", parents=[common, source, family_opts], help="Hawaiian earring membership evidence")
    p.add_argument("target", nargs="?")
    p.add_argument("--depth", type=_positive_int, default=DEFAULT_DEPTH)

    p = sub.add_parser("family", parents=[common, family_opts], help="print a family element's truncated sequence")
    p.add_argument("name", choices=FAMILY_NAMES)
    p.add_argument("--depth", type=_positive_int, default=5)

    p = sub.add_parser("harness", parents=[common], help="pairwise separation harness")
    p.add_argument("family", choices=("cor2",))
    p.add_argument("--count", type=_positive_int, default=10)
    p.add_argument("--n-max", dest="n_max", type=_positive_int, default=10)
    p.add_argument("--depth", type=_positive_int, default=DEFAULT_DEPTH)
    p.add_argument("--period", type=_positive_int, default=20)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _expressions(args: argparse.Namespace, positional: str) -> Iterator[str]:
    value = getattr(args, positional)
    if (value is None) == (args.file is None):
        raise _UsageError(f"give exactly one of <{positional}> or --file")
    if args.file is None:
        yield value
        return
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as exc:
        raise HarmonicError(f"cannot read {args.file}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line not in FAMILY_NAMES:
            try:
                parse(line)
            except DSLSyntaxError as exc:
                raise DSLSyntaxError(exc.position, exc.expected, line, line=lineno) from None
        yield line


def _element(target: str, args: argparse.Namespace) -> TransfiniteElement:
    if target in FAMILY_NAMES:
        w = Finite(parse_word(args.w)) if getattr(args, "w", None) else None
        choice = None
        if getattr(args, "pattern", None):
            choice = OddChoice.periodic(args.pattern)
        elif getattr(args, "support", None):
            choice = OddChoice.from_support(args.support)
        return build_family(target, w=w, choice=choice)
    return Finite(parse_word(target))


def _emit_word(out: TextIO, fmt: str, w: ReducedWord, **extra: int) -> None:
    if fmt == "json":
        out.write(records.dumps_json({**extra, "word": format_word(w)}) + "\n")
    else:
        out.write(format_word(w) + "\n")


def _cmd_reduce(args: argparse.Namespace, out: TextIO) -> None:
    for text in _expressions(args, "expr"):
        _emit_word(out, args.format, parse_word(text))


def _cmd_substitute(args: argparse.Namespace, out: TextIO) -> None:
    for text in _expressions(args, "expr"):
        _emit_word(out, args.format, substitute_collapse(parse_word(text), args.N), N=args.N)


def _cmd_project(args: argparse.Namespace, out: TextIO) -> None:
    for text in _expressions(args, "target"):
        _emit_word(out, args.format, _element(text, args).projection_at(args.level), level=args.level)


def _cmd_kernel(args: argparse.Namespace, out: TextIO) -> None:
    for text in _expressions(args, "target"):
        n_max = min(DEFAULT_N_MAX, args.depth) if args.n_max is None else args.n_max
        verdict = kernel_search(_element(text, args), n_max, args.depth)
        if args.format == "json":
            out.write(records.dumps_json(records.verdict_to_dict(verdict)) + "\n")
        else:
            out.write(records.verdict_to_text(verdict) + "\n")


def _cmd_classify(args: argparse.Namespace, out: TextIO) -> None:
    for text in _expressions(args, "target"):
        c = classify_HE(_element(text, args), args.depth)
        if args.format == "json":
            out.write(records.dumps_json(records.classification_to_dict(c)) + "\n")
        else:
            out.write(records.classification_to_text(c) + "\n")


def _cmd_family(args: argparse.Namespace, out: TextIO) -> None:
    seq = to_truncated(_element(args.name, args), args.depth)
    if args.format == "json":
        payload = {"base": seq.base, "depth": seq.depth, "entries": [format_word(w) for w in seq.entries]}
        out.write(records.dumps_json(payload) + "\n")
    else:
        out.write(dumps(seq))


def _cmd_harness(args: argparse.Namespace, out: TextIO) -> None:
    choices = inequivalent_choices(args.count, period=args.period, seed=args.seed)
    elements = [permutation_element(tau_of(f)) for f in choices]
    report = distinctness_harness(elements, args.n_max, args.depth)
    for p in report.pairs:
        if args.format == "json":
            out.write(records.dumps_json(records.pair_to_dict(p)) + "\n")
        else:
            out.write(records.pair_to_text(p) + "\n")
    if args.format == "json":
        out.write(records.dumps_json(records.harness_summary_dict(report)) + "\n")
    else:
        out.write(records.harness_summary_text(report) + "\n")


_COMMANDS: dict[str, Callable[[argparse.Namespace, TextIO], None]] = {
    "reduce": _cmd_reduce,
    "substitute": _cmd_substitute,
    "project": _cmd_project,
    "kernel": _cmd_kernel,
    "classify": _cmd_classify,
    "family": _cmd_family,
    "harness": _cmd_harness,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"harmonic: usage error: {exc}\n")
        return 2
    except DSLSyntaxError as exc:
        err.write(f"harmonic: {exc}\n")
        if exc.text and exc.line is None:
            err.write(f"  {exc.text}\n  {' ' * (exc.position - 1)}^\n")
        return 2
    except HarmonicError as exc:
        err.write(f"harmonic: error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
