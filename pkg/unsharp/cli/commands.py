"""Command handlers for the unsharp CLI."""
import argparse
import logging
import sys
from typing import TextIO

from unsharp.config import Settings
from unsharp.exceptions import InputError
from unsharp.formats.expressions import ExpressionEvaluator, load_expressions
from unsharp.formats.parsers import (
    is_ops_text,
    load_algebra,
    load_frame,
    parse_frame,
    parse_ops,
    parse_props,
    parse_raw_algebra,
    read_text,
)
from unsharp.formats.render import cover_lines, evaluation_table, operation_table, relation_lines, serialize_frame
from unsharp.models.algebra import EffectAlgebra
from unsharp.models.report import Report
from unsharp.services.axioms import find_violation, verify_axioms
from unsharp.services.connectives import Connectives
from unsharp.services.frame_induction import FrameInductionService, frame_operators
from unsharp.services.laws import run_laws
from unsharp.services.protocols import ITenseOperators
from unsharp.services.tense import TenseService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _emit_report(report: Report, args: argparse.Namespace, out: TextIO) -> int:
    out.write(report.to_lines() if args.report_format == "lines" else report.to_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def verify(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """
    Check the effect algebra axioms of an algebra file.

    Prints "valid effect algebra; lattice" or "valid effect algebra; not a
    lattice" on success, or the first violated condition.

    Returns:
        0 if the table is an effect algebra, 1 otherwise
    """
    raw = parse_raw_algebra(read_text(args.algebra))
    violation = find_violation(raw)
    if violation is not None:
        out.write(f"not an effect algebra: {violation}\n")
        if violation.witness:
            out.write(f"witness: {' '.join(violation.witness)}\n")
        return EXIT_CHECK_FAILED
    algebra = verify_axioms(raw)
    out.write(f"valid effect algebra; {'lattice' if algebra.is_lattice() else 'not a lattice'}\n")
    return EXIT_OK


def table(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """Print the table of one binary operation."""
    out.write(operation_table(Connectives(load_algebra(args.algebra)), args.op))
    return EXIT_OK


def order(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """Print the cover relation of the induced order."""
    out.write(cover_lines(load_algebra(args.algebra).order))
    return EXIT_OK


def tense(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """
    Evaluate tense expressions over named propositions.

    Rows are the --expr expressions followed by those of --expr-file; with
    neither, one row per declared proposition.
    """
    algebra = load_algebra(args.algebra)
    frame = load_frame(args.frame)
    props = parse_props(read_text(args.props), algebra, frame.times)
    service = TenseService(algebra, frame, family_cap=settings.family_cap)
    service.require_serial()

    expressions = list(args.expr or [])
    if args.expr_file:
        expressions.extend(load_expressions(read_text(args.expr_file)))
    if not expressions:
        expressions = list(props)

    rows = ExpressionEvaluator(service, props).rows(expressions)
    out.write(evaluation_table(algebra.order, frame.times, rows))
    return EXIT_OK


def _operators(algebra: EffectAlgebra, path: str, settings: Settings) -> ITenseOperators:
    """Operators given by an operator table file, or induced by a frame file."""
    text = read_text(path)
    if is_ops_text(text):
        logger.info(f"Reading tense operators from table {path}")
        return parse_ops(text, algebra)
    return frame_operators(algebra, parse_frame(text), settings)


def induce(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """Print the induced relation R*, one "s t" pair per line."""
    algebra = load_algebra(args.algebra)
    service = FrameInductionService(_operators(algebra, args.source, settings), settings)
    out.write(relation_lines(service.sorted_relation()))
    return EXIT_OK


def extend(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """Print the extended frame, then the report on the extended operators."""
    algebra = load_algebra(args.algebra)
    service = FrameInductionService(_operators(algebra, args.source, settings), settings)
    out.write(serialize_frame(service.extend_frame()))
    return _emit_report(service.check_extension(), args, out)


def laws(args: argparse.Namespace, settings: Settings, out: TextIO = sys.stdout) -> int:
    """
    Run the law suites.

    Without a frame only the poset, algebra and connective suites run (on the
    given algebra and on seeded random algebras).
    """
    algebra = load_algebra(args.algebra)
    frame = props = None
    if args.frame:
        frame = load_frame(args.frame)
        props = list(parse_props(read_text(args.props), algebra, frame.times).values()) if args.props else []
    elif args.props:
        raise InputError("A propositions file needs a frame file")
    return _emit_report(run_laws(algebra, settings, frame, props), args, out)


COMMANDS = {
    "verify": verify,
    "table": table,
    "order": order,
    "tense": tense,
    "induce": induce,
    "extend": extend,
    "laws": laws,
}
