"""Command-line surface: bound, exact, gen, sweep.

Graph sources are file paths (format sniffed, or forced with --format) or
inline generator specs like gen:cycle:5, gen:turan:9:3, gen:gnp:12:0.3:42.
Exit codes: 0 ok, 1 usage error, 2 parse error, 3 internal invariant
violation.  CLIQUE_BOUNDS_PHI_CAP overrides the phi oracle vertex cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from typing import Sequence

from .formats import ParseError, emit_dimacs, emit_edge_list, parse
from .generators import GENERATOR_NAMES, GeneratorError, generate
from .oracles import DEFAULT_LIMITS, OracleLimits
from .report import (
    RENDERERS,
    GraphSource,
    ReportOptions,
    SweepConfig,
    run_report,
    run_sweep,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3

PHI_CAP_ENV = "CLIQUE_BOUNDS_PHI_CAP"


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract reserves 2 for parse
    # errors, so route usage problems to exit code 1 instead.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(f"{self.prog}: {message}", EXIT_USAGE)


def _load_source(token: str, fmt: str) -> GraphSource:
    if token.startswith("gen:"):
        parts = token.split(":")[1:]
        if not parts or not parts[0]:
            raise CliError(f"{token!r}: empty generator spec", EXIT_USAGE)
        try:
            graph = generate(parts[0], parts[1:])
        except GeneratorError as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc
        return GraphSource(name=token, graph=graph)
    try:
        if token == "-":
            text = sys.stdin.read()
            name = "<stdin>"
        else:
            with open(token, "r", encoding="utf-8") as handle:
                text = handle.read()
            name = token
    except OSError as exc:
        raise CliError(f"cannot read {token!r}: {exc}", EXIT_USAGE) from exc
    try:
        loaded = parse(text, fmt)
    except ParseError as exc:
        raise CliError(f"{name}: {exc}", EXIT_PARSE) from exc
    return GraphSource(name=name, graph=loaded.graph, labels=loaded.labels)


def _limits_from_env() -> OracleLimits:
    cap = os.environ.get(PHI_CAP_ENV)
    if cap is None:
        return DEFAULT_LIMITS
    try:
        value = int(cap)
    except ValueError:
        raise CliError(f"{PHI_CAP_ENV} must be an integer, got {cap!r}", EXIT_USAGE) from None
    try:
        return replace(DEFAULT_LIMITS, max_n_phi=value)
    except ValueError as exc:
        raise CliError(f"{PHI_CAP_ENV}: {exc}", EXIT_USAGE) from exc


def _add_report_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("sources", nargs="+", help="file path, '-' for stdin, or gen:<name>[:args...]")
    sub.add_argument("--format", choices=("auto", "dimacs", "edgelist"), default="auto")
    sub.add_argument("--output", choices=tuple(RENDERERS), default="human")
    sub.add_argument("--tie-seed", type=int, default=None, help="seeded-random tie-break (default: lowest id)")


def _cmd_report(args: argparse.Namespace, exact: bool) -> int:
    options = ReportOptions(
        exact=exact,
        limits=_limits_from_env(),
        tie_break_seed=args.tie_seed,
    )
    sources = [_load_source(token, args.format) for token in args.sources]
    records = list(run_report(sources, options))
    sys.stdout.write(RENDERERS[args.output](records))
    bad = [rec for rec in records if not rec.consistent]
    if bad:
        for rec in bad:
            print(f"invariant violation in record {rec.name!r}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        graph = generate(args.name, args.params, seed=args.seed)
    except GeneratorError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    text = emit_dimacs(graph) if args.format == "dimacs" else emit_edge_list(graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    if not 0.0 <= args.p <= 1.0:
        raise CliError("sweep: p must be in [0, 1]", EXIT_USAGE)
    if args.n < 1 or args.count < 1:
        raise CliError("sweep: n and count must be >= 1", EXIT_USAGE)
    result = run_sweep(SweepConfig(n=args.n, p=args.p, count=args.count, seed=args.seed))
    if args.output == "jsonl":
        payload = {
            "n": args.n,
            "p": args.p,
            "count": args.count,
            "seed": args.seed,
            "improved_count": result.improved_count,
            "improved_fraction": result.fraction,
            "mean_excess": result.mean_excess,
        }
        print(json.dumps(payload))
    else:
        print(
            f"G({args.n}, {args.p}) x {args.count} (seed {args.seed}): "
            f"{result.improved_count} improved over ceil(W) "
            f"({result.fraction:.1%}), mean excess {result.mean_excess:.2f}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliquebounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="weight and sequence bounds only")
    _add_report_arguments(bound)

    exact = sub.add_parser("exact", help="bounds plus exact phi/omega oracles")
    _add_report_arguments(exact)

    gen = sub.add_parser("gen", help="emit a generated graph")
    gen.add_argument("name", choices=GENERATOR_NAMES)
    gen.add_argument("params", nargs="*", help="generator parameters")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--format", choices=("dimacs", "edgelist"), default="dimacs")
    gen.add_argument("--out", default=None, help="output file (default: stdout)")

    sweep = sub.add_parser("sweep", help="random-ensemble improvement statistics")
    sweep.add_argument("--n", type=int, default=12)
    sweep.add_argument("--p", type=float, default=0.3)
    sweep.add_argument("--count", type=int, default=200)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--output", choices=("human", "jsonl"), default="human")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bound":
            return _cmd_report(args, exact=False)
        if args.command == "exact":
            return _cmd_report(args, exact=True)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        raise CliError(f"unknown command {args.command!r}", EXIT_USAGE)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
