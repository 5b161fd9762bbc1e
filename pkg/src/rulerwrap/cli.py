"""Command-line front end.

Input files are whitespace-separated positive decimal integers; lines
starting with ``#`` are comments; ``-`` means standard input.  Exit codes:
0 success, 1 domain or parse errors (diagnostics on stderr), 2 usage
errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from .core import DomainError, Ruler, RulerWrapError, Variant
from .experiments import (
    ExperimentConfig,
    occupancy_csv,
    occupancy_growth,
    run_random_trials,
    stats_csv,
)
from .greedy import adversarial_family, greedy_wrap
from .oracle import oracle_min_length
from .partition import max_parts_partition
from .render import render_svg
from .wrap import format_trace, quadratic_answer, wrap_linear, wrap_nlogn, wrap_quadratic


class ParseError(RulerWrapError):
    """Malformed token in a lengths file (reports line and column)."""


_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"[+-]?[0-9]+")


def parse_lengths(text: str) -> Ruler:
    """Whitespace-separated decimal lengths; ``#`` lines are comments."""
    values = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#"):
            continue
        for m in _TOKEN.finditer(line):
            token = m.group()
            if not _INT.fullmatch(token):
                raise ParseError(
                    f"line {line_no}, column {m.start() + 1}: not an integer: {token!r}"
                )
            values.append(int(token))
    return Ruler(values)


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text()


def _variant(args) -> Variant:
    return Variant(args.variant)


def _print_plan(ruler: Ruler, plan) -> None:
    positions = ruler.positions
    folds = " ".join(str(positions[f]) for f in plan.folds)
    print(f"folds: {folds}" if folds else "folds: (none)")
    print("parts:", " ".join(str(t) for t in plan.part_totals))


def _cmd_wrap(args) -> int:
    if args.trace and args.algo != "linear":
        print("error: --trace is only available with --algo linear", file=sys.stderr)
        return 2
    ruler = parse_lengths(_read_input(args.input))
    variant = _variant(args)
    if args.algo == "linear":
        run = wrap_linear(ruler, variant, trace=args.trace, want_plan=args.plan)
        if run.trace is not None:
            sys.stdout.write(format_trace(run.trace))
        answer = run.answer
    elif args.algo == "nlogn":
        answer = wrap_nlogn(ruler, variant)
    elif args.algo == "quadratic":
        answer = quadratic_answer(ruler, variant)
    else:
        answer = oracle_min_length(ruler, variant)
    print(answer.length)
    if args.plan:
        _print_plan(ruler, answer.plan)
    return 0


def _cmd_partition(args) -> int:
    ruler = parse_lengths(_read_input(args.input))
    result = max_parts_partition(ruler)
    rendered = " ".join("[" + " ".join(str(v) for v in part) + "]" for part in result.parts)
    print(f"{result.count} parts: {rendered}")
    return 0


def _cmd_greedy(args) -> int:
    ruler = parse_lengths(_read_input(args.input))
    variant = _variant(args)
    g = greedy_wrap(ruler.lengths, variant)
    exact = wrap_linear(ruler, variant, want_plan=False).answer.length
    ratio = Fraction(g.length, exact)
    print(f"greedy: {g.length}")
    print(f"folds: {g.folds}")
    print(f"exact: {exact}")
    print(f"ratio: {g.length}/{exact} = {float(ratio):.4f}")
    return 0


def _cmd_oracle_check(args) -> int:
    ruler = parse_lengths(_read_input(args.input))
    if ruler.n > args.max_n:
        print(f"error: n={ruler.n} exceeds --max-n {args.max_n}", file=sys.stderr)
        return 1
    ok = True
    print(f"n={ruler.n} total={ruler.total}")
    for variant in (Variant.RESTRICTED, Variant.UNRESTRICTED):
        lengths = {
            "quadratic": quadratic_answer(ruler, variant).length,
            "nlogn": wrap_nlogn(ruler, variant).length,
            "linear": wrap_linear(ruler, variant).answer.length,
            "oracle": oracle_min_length(ruler, variant).length,
        }
        agree = len(set(lengths.values())) == 1
        ok = ok and agree
        report = " ".join(f"{name}={value}" for name, value in lengths.items())
        print(f"{variant.value}: {report} {'agree' if agree else 'MISMATCH'}")
    print("OK" if ok else "MISMATCH")
    return 0 if ok else 1


def _cmd_experiment(args) -> int:
    cfg = ExperimentConfig(
        n=args.n,
        runs=args.runs,
        lo=args.lo,
        hi=args.hi,
        seed=args.seed,
        checkpoints=tuple(args.checkpoints) if args.checkpoints else (),
    )
    sys.stdout.write(stats_csv(run_random_trials(cfg)))
    return 0


def _cmd_occupancy(args) -> int:
    rows = occupancy_growth(args.ns, runs=args.runs, lo=args.lo, hi=args.hi, seed=args.seed)
    sys.stdout.write(occupancy_csv(rows))
    return 0


def _cmd_adversarial(args) -> int:
    ruler = adversarial_family(args.blocks)
    print(" ".join(str(v) for v in ruler.lengths))
    return 0


def _cmd_render(args) -> int:
    ruler = parse_lengths(_read_input(args.input))
    variant = _variant(args)
    pairs = wrap_quadratic(ruler)
    answer = quadratic_answer(ruler, variant)
    Path(args.output).write_text(render_svg(ruler, pairs, answer))
    return 0


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _add_variant(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--variant",
        choices=["restricted", "unrestricted"],
        default="restricted",
        help="final-flap rule (default: restricted)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rulerwrap",
        description="Wrap a carpenter's ruler into its minimum length, and friends.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wrap", help="minimum wrapping length of a ruler")
    _add_variant(p)
    p.add_argument(
        "--algo",
        choices=["linear", "nlogn", "quadratic", "oracle"],
        default="linear",
        help="which minimizer to run (default: linear)",
    )
    p.add_argument("--plan", action="store_true", help="also print fold positions and part totals")
    p.add_argument("--trace", action="store_true", help="print the array after every hinge (linear only)")
    p.add_argument("input", metavar="FILE|-", help="lengths file, or - for stdin")
    p.set_defaults(func=_cmd_wrap)

    p = sub.add_parser("partition", help="maximal non-decreasing-totals partition")
    p.add_argument("input", metavar="FILE|-")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("greedy", help="streaming greedy length and its ratio to exact")
    _add_variant(p)
    p.add_argument("input", metavar="FILE|-")
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("oracle-check", help="cross-check all algorithms against brute force")
    p.add_argument("--max-n", type=int, default=20, help="refuse instances larger than this")
    p.add_argument("input", metavar="FILE|-")
    p.set_defaults(func=_cmd_oracle_check)

    p = sub.add_parser("experiment", help="average wrapping length per checkpoint hinge (CSV)")
    p.add_argument("--n", type=int, default=10000)
    p.add_argument("--runs", type=int, default=200)
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--checkpoints", type=_csv_ints, default=None, metavar="i,j,...")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("occupancy", help="mean maximum live-pair count per size (CSV)")
    p.add_argument("--ns", type=_csv_ints, required=True, metavar="n1,n2,...")
    p.add_argument("--runs", type=int, default=20)
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=_cmd_occupancy)

    p = sub.add_parser("adversarial", help="emit a greedy-defeating instance")
    p.add_argument("--blocks", type=int, required=True, metavar="M")
    p.set_defaults(func=_cmd_adversarial)

    p = sub.add_parser("render", help="arc diagram as SVG")
    _add_variant(p)
    p.add_argument("input", metavar="FILE|-")
    p.add_argument("-o", "--output", required=True, metavar="OUT.svg")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (RulerWrapError, OSError) as exc:
        kind = "parse" if isinstance(exc, ParseError) else "domain" if isinstance(exc, DomainError) else "error"
        print(f"{kind}: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
