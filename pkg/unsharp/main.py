"""Command-line entry point."""
import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from unsharp.cli.commands import COMMANDS, EXIT_INPUT_ERROR
from unsharp.config import Settings, load_settings
from unsharp.exceptions import AxiomViolation, InputError
from unsharp.formats.render import OPERATIONS

logger = logging.getLogger(__name__)


def configure_logging(level_name: str) -> None:
    """Send log records to stderr at the given level."""
    log_level = getattr(logging, level_name, logging.INFO)
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )
    logging.getLogger("unsharp").setLevel(log_level)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per command handler."""
    parser = argparse.ArgumentParser(
        prog="unsharp",
        description="Effect algebras, unsharp implications, tense operators and induced time frames",
    )
    parser.add_argument("--seed", type=int, help="Seed of every sampled tier (default: UNSHARP_SEED or 20240229)")
    parser.add_argument("--jobs", type=int, help="Worker threads for the law suites")
    parser.add_argument("--report-format", choices=("text", "lines"), default="text", help="Report format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="Check the effect algebra axioms")
    p.add_argument("algebra", help="Algebra file")

    p = sub.add_parser("table", help="Print an operation table")
    p.add_argument("algebra", help="Algebra file")
    p.add_argument("--op", required=True, choices=list(OPERATIONS), help="Operation to tabulate")

    p = sub.add_parser("order", help="Print the cover relation of the induced order")
    p.add_argument("algebra", help="Algebra file")

    p = sub.add_parser("tense", help="Evaluate tense expressions over a frame")
    p.add_argument("algebra", help="Algebra file")
    p.add_argument("frame", help="Frame file")
    p.add_argument("props", help="Propositions file")
    p.add_argument("--expr", action="append", help="Expression to evaluate (repeatable)")
    p.add_argument("--expr-file", help="File with one expression per line")

    for name, text in (("induce", "Print the induced relation R*"), ("extend", "Print the extended frame and check it")):
        p = sub.add_parser(name, help=text)
        p.add_argument("algebra", help="Algebra file")
        p.add_argument("source", help="Frame file or operator table file")

    p = sub.add_parser("laws", help="Run the law suites")
    p.add_argument("algebra", help="Algebra file")
    p.add_argument("frame", nargs="?", help="Frame file")
    p.add_argument("props", nargs="?", help="Propositions file")
    return parser


def _settings(args: argparse.Namespace) -> Settings:
    settings = load_settings()
    overrides = {k: v for k, v in (("seed", args.seed), ("jobs", args.jobs)) if v is not None}
    return Settings.model_validate({**settings.model_dump(), **overrides})


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one CLI command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        0 if every check passed, 1 if a check failed, 2 on input errors
    """
    args = build_parser().parse_args(argv)
    try:
        settings = _settings(args)
    except ValidationError as e:
        print(f"error: invalid settings: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    configure_logging(settings.log_level)

    try:
        return COMMANDS[args.command](args, settings, sys.stdout)
    except (InputError, AxiomViolation, OSError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
