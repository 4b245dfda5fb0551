"""
Command-line interface for pencil-lab.
"""
import argparse
import sys
import time
from typing import Any, Dict, List, Optional, TextIO

from pydantic import ValidationError

from .config.loader import SpecLoader
from .config.models import RunConfig
from .config.validator import RunConfigValidator
from .core.commands import FAIL, CommandRunner
from .core.errors import PencilLabError
from .output.processor import OutputProcessor
from .utils.logging import get_logger, setup_logging
from .utils.threading import resolve_thread_count

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

COMMAND_HELP = {
    "roots": "Real roots nu_0(t) > ... > nu_n(t) at --t or along --grid",
    "interlace": "Interlacing and root-sum checks at --t or along --grid",
    "detrep": "Arrowhead determinant identity and dense eigenvalue oracle",
    "trace": "Trace identity sum exp(xi nu_k) = trace exp(xi A + t xi B)",
    "excon": "Sampled exponential convexity of t -> sum exp(xi nu_k(t))",
    "critical": "Critical points, critical values and the strip height h",
    "monodromy": "Branch permutation around a circle or closed polyline",
    "gaussian": "Gaussian composition check against sum exp(gamma nu_k^2)",
}


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-s", "--spec", dest="spec_path", required=True,
        help="Path to pencil spec file (JSON or YAML)"
    )
    parser.add_argument(
        "-f", "--format", choices=["json", "csv"], default="json",
        help="Report format (default: json)"
    )
    parser.add_argument(
        "-o", "--output", default=None,
        help="Write the report to this file instead of standard output"
    )
    parser.add_argument(
        "--seed", type=int, default=42,
        help="Seed of the PCG64 random stream (default: 42)"
    )
    parser.add_argument(
        "--tol", type=float, default=None,
        help="Tolerance override (default depends on the command)"
    )
    parser.add_argument(
        "--threads", type=int, default=None,
        help="Worker threads (default: $PENCIL_LAB_THREADS or 1)"
    )
    parser.add_argument(
        "--timing", action="store_true",
        help="Include elapsed_seconds in the report"
    )
    parser.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default="WARNING", help="Logging level (default: WARNING)"
    )
    parser.add_argument(
        "--log-dir", default=None,
        help="Directory for a timestamped log file"
    )


def _add_t_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--t", type=float, default=None, help="Real parameter value (default: 0)")
    group.add_argument("--grid", default=None, help="Parameter grid lo:hi:count")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with one subcommand per operation.

    Returns:
        Configured parser.
    """
    parser = argparse.ArgumentParser(
        prog="pencil-lab",
        description="pencil-lab - numerical experiments with hyperbolic pencils P(z) - tQ(z)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    commands = {}
    for name, help_text in COMMAND_HELP.items():
        commands[name] = subparsers.add_parser(name, help=help_text, description=help_text)
        _add_common_arguments(commands[name])

    for name in ("roots", "interlace", "detrep", "trace", "gaussian"):
        _add_t_arguments(commands[name])

    commands["detrep"].add_argument(
        "--samples", type=int, default=100,
        help="Random (z, t) pairs for the determinant identity (default: 100)"
    )
    commands["detrep"].add_argument(
        "--sign", type=int, choices=[1, -1], default=1,
        help="Sign of the arrowhead arm (default: 1)"
    )

    for name in ("trace", "excon"):
        commands[name].add_argument("--xi", type=float, default=None, help="Exponent scale (default: 1)")

    commands["excon"].add_argument(
        "--points", type=int, default=8,
        help="Maximal points per Gram matrix (default: 8)"
    )
    commands["excon"].add_argument(
        "--trials", type=int, default=50,
        help="Number of random point sets (default: 50)"
    )

    monodromy = commands["monodromy"]
    monodromy.add_argument("--center", default=None, help="Circle center re,im")
    monodromy.add_argument("--radius", type=float, default=None, help="Circle radius")
    monodromy.add_argument(
        "--orientation", type=int, choices=[1, -1], default=1,
        help="1 for counterclockwise, -1 for clockwise (default: 1)"
    )
    monodromy.add_argument(
        "--base-angle", type=float, default=None,
        help="Angle of the base point on the circle (default: real-axis crossing)"
    )
    monodromy.add_argument("--turns", type=int, default=1, help="Number of traversals (default: 1)")
    monodromy.add_argument(
        "--vertex", dest="vertices", action="append", default=None,
        help="Polyline vertex re,im; repeat for each vertex"
    )
    monodromy.add_argument("--steps", type=int, default=256, help="Nominal continuation steps (default: 256)")

    gaussian = commands["gaussian"]
    gaussian.add_argument("--gamma", type=float, default=None, help="Gaussian scale gamma > 0")
    gaussian.add_argument("--half-width", type=float, default=12.0, help="Quadrature half width (default: 12)")
    gaussian.add_argument("--count", type=int, default=2001, help="Quadrature nodes (default: 2001)")

    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """
    Convert parsed arguments into a RunConfig.

    Args:
        args: Parsed arguments.

    Returns:
        Validated RunConfig.

    Raises:
        ValidationError: If a parameter is malformed or not finite.
    """
    values: Dict[str, Any] = {
        key: value for key, value in vars(args).items()
        if value is not None and key not in ("output", "log_level", "log_dir",
                                             "center", "radius", "orientation", "base_angle", "turns")
    }
    if getattr(args, "center", None) is not None or getattr(args, "radius", None) is not None:
        values["circle"] = {
            "center": args.center if args.center is not None else "0,0",
            "radius": args.radius if args.radius is not None else 0.0,
            "orientation": args.orientation,
            "base_angle": args.base_angle,
            "turns": args.turns,
        }
    return RunConfig.model_validate(values)


def _diagnostic(error: BaseException, stream: TextIO) -> None:
    message = str(error).splitlines()[0] if str(error) else ""
    print(f"{type(error).__name__}: {message}", file=stream)


def run(config: RunConfig, stream: TextIO) -> int:
    """
    Load the spec, run the command and write the report.

    Args:
        config: Run configuration.
        stream: Destination of the report.

    Returns:
        Exit code 0 or 1 depending on the verdict.
    """
    logger = get_logger("cli")
    spec = SpecLoader().load_spec(config.spec_path)
    runner = CommandRunner(resolve_thread_count(config.threads))

    start = time.perf_counter()
    report = runner.run(spec, config)
    elapsed = time.perf_counter() - start
    logger.info(f"Command {config.command} finished in {elapsed:.3f} s")
    if config.timing:
        report["elapsed_seconds"] = elapsed

    OutputProcessor().process(report, config.format, stream)
    return EXIT_FAIL if report["verdict"] == FAIL else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for pencil-lab.

    Args:
        argv: Command-line arguments; sys.argv[1:] when None.

    Returns:
        Exit code (0 success, 1 failed verdict, 2 input or numerical error).
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level, args.log_dir)
    logger = get_logger("cli")

    try:
        config = build_config(args)
    except ValidationError as e:
        logger.debug(f"Invalid parameters: {e}")
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        print(f"ValidationError: {location}: {first['msg']}", file=sys.stderr)
        return EXIT_INPUT

    validation_errors = RunConfigValidator().validate(config)
    if validation_errors:
        for error in validation_errors:
            logger.debug(f"Configuration error: {error}")
        print(f"ConfigError: {validation_errors[0]}", file=sys.stderr)
        return EXIT_INPUT

    try:
        if args.output is None:
            return run(config, sys.stdout)
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            return run(config, f)
    except (PencilLabError, ValueError, OSError) as e:
        logger.debug(f"{type(e).__name__}: {e}")
        _diagnostic(e, sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.debug(f"Unexpected error: {e}", exc_info=True)
        _diagnostic(e, sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
