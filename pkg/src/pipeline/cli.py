"""
Command-Line Interface
======================
argparse front end for convert, bench and verify.
Single Responsibility: Map arguments to pipelines and errors to exit codes.

Exit codes: 0 ok, 1 verification violation or conversion failure, 2 usage.
"""

import argparse
import re
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence

from src.core.exact_decimal import significant_digits
from src.core.ieee_codec import decode
from src.models.config import DEFAULT_ALGORITHMS, AppConfig
from src.models.dataset import DatasetError
from src.models.ieee import FloatFormat
from src.pipeline.bench_pipeline import BenchPipeline, PipelineError, format_csv
from src.pipeline.container import DependencyContainer, UnknownAlgorithmError
from src.pipeline.verify_pipeline import ScopeSyntaxError, VerifyPipeline, VerifyScope
from src.services.renderer import RenderPolicy, UnknownPolicyError, format_float
from src.services.roundtrip_oracle import LiteralSyntaxError, parse_exact
from src.utils.logger import Logger

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

ALGORITHMS = ("dragon2",) + DEFAULT_ALGORITHMS

_logger = Logger(prefix="CLI")


_SIGNED_LITERAL = re.compile(r"^-(?:inf(?:inity)?|nan|(?:\d+\.?\d*|\.\d+)(?:e[+-]?\d+)?)$", re.IGNORECASE)


def _names(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def pin_signed_literal(argv: Sequence[str]) -> list[str]:
    """
    Move a negative convert literal behind '--'.

    argparse only treats plain '-12' or '-1.5' tokens as values, so
    '-1.1e-4' or '-inf' would otherwise be read as unknown options.
    """
    argv = list(argv)
    commands = [i for i, token in enumerate(argv) if not token.startswith("-")]
    if not commands or argv[commands[0]] != "convert" or "--" in argv:
        return argv
    start = commands[0] + 1
    for index in range(start, len(argv)):
        if _SIGNED_LITERAL.match(argv[index]):
            return argv[:index] + argv[index + 1:] + ["--", argv[index]]
    return argv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shortest-float",
        description="Shortest round-trip float printing: convert, benchmark and verify.",
    )
    parser.add_argument("--quiet", action="store_true", help="only log errors")
    commands = parser.add_subparsers(dest="command", required=True)

    convert = commands.add_parser("convert", help="convert one decimal literal")
    convert.add_argument("value", help="decimal literal, parsed exactly into the format")
    convert.add_argument("--format", default="f64", choices=("f32", "f64"))
    convert.add_argument("--algo", default="dragon4", choices=ALGORITHMS)
    convert.add_argument("--policy", default="minimal", choices=tuple(p.value for p in RenderPolicy))

    bench = commands.add_parser("bench", help="time converters over a dataset")
    bench.add_argument("--data", default="unit", help="'unit' or a .f32le/.f64le/text file")
    bench.add_argument("--format", default="f64", choices=("f32", "f64"))
    bench.add_argument("--repeats", type=int, default=None)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--count", type=int, default=None, help="size of the generated unit dataset")
    bench.add_argument("--algos", type=_names, default=None, help="comma-separated converter names")
    bench.add_argument("--policies", type=_names, default=None, help="comma-separated policies")
    bench.add_argument("--csv", type=Path, default=None, help="CSV output path")

    verify = commands.add_parser("verify", help="check converters against the exact oracle")
    verify.add_argument("--scope", required=True,
                        help="'<format> random N [seed=S]' or '<format> exhaustive-strata [fractions=F]'")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--workers", type=int, default=None)

    return parser


def cmd_convert(container: DependencyContainer, args: argparse.Namespace) -> int:
    fmt = FloatFormat.from_name(args.format)
    try:
        bits = parse_exact(args.value, fmt)
    except LiteralSyntaxError as e:
        _logger.error(str(e))
        return EXIT_VIOLATION

    d = decode(bits, fmt)
    converter = container.converter(args.algo)
    rendered = format_float(d, RenderPolicy.from_name(args.policy), converter)
    print(rendered.text)
    if d.is_finite:
        dec = converter.convert(d)
        print(f"w={dec.significand} q={dec.q} digits={significant_digits(dec)} bits=0x{bits:0{fmt.total_bits // 4}X}")
    return EXIT_OK


def cmd_bench(container: DependencyContainer, args: argparse.Namespace) -> int:
    bench = container.config.bench
    container.config.bench = replace(
        bench,
        repeats=args.repeats if args.repeats is not None else bench.repeats,
        seed=args.seed if args.seed is not None else bench.seed,
    )
    reports = BenchPipeline(container=container).run(
        args.data,
        FloatFormat.from_name(args.format),
        algorithms=args.algos,
        policies=args.policies,
        count=args.count,
        csv_path=args.csv,
    )
    sys.stdout.write(format_csv(reports))
    return EXIT_OK


def cmd_verify(container: DependencyContainer, args: argparse.Namespace) -> int:
    settings = container.config.verify
    scope = VerifyScope.parse(
        args.scope,
        seed=args.seed if args.seed is not None else settings.seed,
        fractions=settings.strata_fractions,
    )
    summary = VerifyPipeline(container=container).run(scope, workers=args.workers)
    print(
        f"{summary.scope}: checked={summary.checked} violations={len(summary.violations)} "
        f"fallback_rate={summary.fallback_rate:.6f} dragon2_failure_rate={summary.dragon2_failure_rate:.6f}"
    )
    hex_width = scope.format.total_bits // 4
    for violation in summary.violations:
        print(violation.describe(hex_width))
    return EXIT_OK if summary.ok else EXIT_VIOLATION


_COMMANDS = {
    "convert": cmd_convert,
    "bench": cmd_bench,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, config: Optional[AppConfig] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] if not provided)
        config: Application configuration (default if not provided)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(pin_signed_literal(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config = config or AppConfig.default()
    config.quiet = config.quiet or args.quiet
    Logger.set_quiet(config.quiet)

    container = DependencyContainer(config)
    try:
        return _COMMANDS[args.command](container, args)
    except (UnknownAlgorithmError, UnknownPolicyError, ScopeSyntaxError, DatasetError) as e:
        _logger.error(str(e.args[0]) if e.args else str(e))
        return EXIT_USAGE
    except PipelineError as e:
        _logger.error(f"Pipeline failed: {e}")
        return EXIT_VIOLATION
