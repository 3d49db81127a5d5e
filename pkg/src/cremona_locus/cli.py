"""
Command-line front end.

    cremona-locus dim "L3(2;1^8)" [--oracle]
    cremona-locus fixed "L3(15; 13,10,9,7,6,3^2,2)"
    cremona-locus bs "L3(6; 3^8)" --json
    cremona-locus reduce "L3(3; 2^4)"
    cremona-locus verify "L3(2; 1^7)" --seed 7
    cremona-locus --fixtures fixtures/regression.fixtures

Exit codes: 0 success, 1 usage or parse error, 2 empty system,
3 verification failure or oracle error, 4 internal inconsistency.
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .core.baselocus import base_locus
from .core.reduction import (
    dimension,
    fixed_components,
    reduce_to_standard,
    reduction_diagram,
)
from .exceptions import (
    EmptySystemError,
    InconsistencyError,
    NotationParseError,
    OracleError,
    PreconditionError,
)
from .models.classes import NUM_POINTS, DivisorClass
from .models.report import BaseLocusResult, SystemReport
from .models.state import CheckName, CheckResult, CheckStatus
from .models.trace import FixedPart
from .services.oracle import h0_interpolation, make_configuration
from .utils.config import Settings, get_settings
from .utils.notation import parse_system, render_system
from .workflow import run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EMPTY = 2
EXIT_VERIFY = 3
EXIT_INCONSISTENT = 4

FIXTURE_SEPARATOR = "->"


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # Sub-commands must not overwrite values given before the command name.
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=default or False,
                        help="machine-readable output")
    parser.add_argument("--seed", type=int, default=default,
                        help="seed of the oracle configuration (default 42)")
    parser.add_argument("--prime", type=int, default=default,
                        help="prime of the oracle field (default 2147483647)")
    parser.add_argument("--oracle", action="store_true", default=default or False,
                        help="cross-check the dimension with the interpolation oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cremona-locus",
        description="Dimension, fixed part and base locus of L3(d; m_1..m_8).",
    )
    _add_common(parser, suppress=False)
    parser.add_argument("--fixtures", type=Path, metavar="PATH",
                        help="run a fixture file: one 'INPUT -> EXPECTED_JSON' per line")
    subparsers = parser.add_subparsers(dest="command")
    helps = {
        "dim": "vector-space dimension h0",
        "fixed": "fixed components and residual",
        "bs": "complete base locus",
        "reduce": "Cremona reduction diagram",
        "verify": "run the oracle verification battery",
    }
    for name, help_text in helps.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("system", help='system notation, e.g. "L3(15; 13,10,9,7,6,3^2,2)"')
        _add_common(sub, suppress=True)
    return parser


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def format_fixed(fixed: FixedPart, residual: DivisorClass) -> str:
    if fixed.is_empty:
        return f"no fixed components; residual {residual}"
    parts = [
        f"F{n} in {item.divisor} x{item.mult}" for n, item in enumerate(fixed.items, start=1)
    ]
    parts.append(f"residual {residual}")
    return "; ".join(parts)


def _format_labels(labels: Sequence[int]) -> str:
    labels = list(labels)
    if labels == list(range(labels[0], labels[0] + len(labels))):
        return f"{labels[0]}..{labels[-1]}"
    return ",".join(str(i) for i in labels)


def format_base_locus(locus: BaseLocusResult) -> List[str]:
    lines = [f"Base locus of {locus.system}:"]
    lines.append("  fixed: " + format_fixed(locus.fixed, locus.residual))
    terms = [
        (f"{curve.mult}*" if curve.mult > 1 else "") + str(curve.id) for curve in locus.curves
    ]
    if locus.dq8_mult:
        terms.append(f"{locus.dq8_mult} * D_Q8")
    if locus.point is not None:
        terms.append(f"{locus.point.mult} * P(points {_format_labels(locus.point.seven)})")
    if terms:
        lines.append("  curves and points: " + " + ".join(terms))
    elif locus.fixed.is_empty:
        lines.append("  base point free")
    else:
        lines.append("  residual is base point free")
    if locus.point is not None:
        lines.append(f"  P: {locus.point.description}")
    return lines


def format_diagram(rows) -> List[str]:
    header = " d  | " + " ".join(f"{f'm{i}':>4}" for i in range(1, NUM_POINTS + 1))
    lines = [header, "-" * len(header)]
    for row in rows:
        cells = []
        for label, m in enumerate(row.divisor.mults, start=1):
            mark = "*" if label in row.boxed else " "
            cells.append(f"{m:>3}{mark}")
        lines.append(f"{row.divisor.degree:>3} | " + " ".join(cells))
    return lines


def _fixed_json(fixed: FixedPart) -> List[Dict[str, Any]]:
    return [{"class": item.divisor.as_json(), "mult": item.mult} for item in fixed.items]


def locus_report(locus: BaseLocusResult, h0: Optional[int] = None) -> SystemReport:
    """JSON-ready report; trace_len counts the steps that reduce the input."""
    return SystemReport(
        system=locus.system,
        h0=h0,
        fixed=_fixed_json(locus.fixed),
        residual=locus.residual.as_json(),
        curves=[curve.as_json() for curve in locus.curves],
        dq8_mult=locus.dq8_mult,
        point=locus.point.as_json() if locus.point is not None else None,
        trace_len=len(reduce_to_standard(locus.system).trace),
    )


def full_report(system: DivisorClass) -> SystemReport:
    """Everything the exact pipeline knows about a system."""
    h0 = dimension(system)
    if h0 == 0:
        return SystemReport(system=system, h0=0, trace_len=len(reduce_to_standard(system).trace))
    return locus_report(base_locus(system), h0=h0)


def _emit(args: argparse.Namespace, report: SystemReport, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_dim(system: DivisorClass, args: argparse.Namespace, settings: Settings) -> int:
    h0 = dimension(system)
    suffix = " (empty)" if h0 == 0 else ""
    lines = [f"{system}: h0 = {h0}, projective dimension {h0 - 1}{suffix}"]
    report = SystemReport(system=system, h0=h0)
    code = EXIT_OK
    if args.oracle:
        cfg = make_configuration(settings.prime, settings.seed)
        oracle_h0 = h0_interpolation(system.degree, system.mults, cfg)
        match = oracle_h0 == h0
        lines.append(
            f"oracle h0 = {oracle_h0} ({'match' if match else 'MISMATCH'}; "
            f"seed {settings.seed}, prime {settings.prime})"
        )
        report.checks = [
            CheckResult(
                name=CheckName.DIMENSION,
                status=CheckStatus.PASS if match else CheckStatus.FAIL,
                detail=f"h0 by reduction {h0}, by interpolation {oracle_h0}",
            )
        ]
        if not match:
            code = EXIT_VERIFY
    _emit(args, report, lines)
    return code


def cmd_fixed(system: DivisorClass, args: argparse.Namespace, settings: Settings) -> int:
    fixed, residual = fixed_components(system)
    report = SystemReport(
        system=system, fixed=_fixed_json(fixed), residual=residual.as_json()
    )
    _emit(args, report, [format_fixed(fixed, residual)])
    return EXIT_OK


def cmd_bs(system: DivisorClass, args: argparse.Namespace, settings: Settings) -> int:
    h0 = dimension(system)
    if h0 == 0:
        raise EmptySystemError(f"{system} is empty")
    locus = base_locus(system)
    _emit(args, locus_report(locus, h0=h0), format_base_locus(locus))
    return EXIT_OK


def cmd_reduce(system: DivisorClass, args: argparse.Namespace, settings: Settings) -> int:
    result = reduce_to_standard(system)
    lines = format_diagram(reduction_diagram(result))
    if result.empty:
        lines.append("degree dropped below 0: the system is empty")
    else:
        lines.append(f"standard form: {render_system(result.standard)}")
    _emit(args, SystemReport(system=system, trace_len=len(result.trace)), lines)
    return EXIT_OK


def cmd_verify(system: DivisorClass, args: argparse.Namespace, settings: Settings) -> int:
    if dimension(system) == 0:
        raise EmptySystemError(f"{system} is empty")
    make_configuration(settings.prime, settings.seed)
    state = run_verification(system, settings.prime, settings.seed, echo=not args.json)
    if args.json:
        locus = state.get("locus")
        report = locus_report(locus, h0=dimension(system)) if locus else SystemReport(system=system)
        report.checks = sorted(state.get("checks", []), key=lambda c: list(CheckName).index(c.name))
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    return EXIT_OK if state.get("passed") else EXIT_VERIFY


COMMANDS = {
    "dim": cmd_dim,
    "fixed": cmd_fixed,
    "bs": cmd_bs,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def parse_fixture_line(line: str) -> Optional[Tuple[str, Dict[str, Any]]]:
    """Split 'INPUT -> EXPECTED_JSON'; None for blank lines and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    if FIXTURE_SEPARATOR not in stripped:
        raise ValueError(f"missing '{FIXTURE_SEPARATOR}' in fixture line: {stripped}")
    text, expected = stripped.split(FIXTURE_SEPARATOR, 1)
    return text.strip(), json.loads(expected)


def check_fixture(text: str, expected: Dict[str, Any]) -> List[str]:
    """Keys of `expected` whose value differs from the computed report."""
    actual = full_report(parse_system(text)).to_json_dict()
    problems = []
    for key, value in expected.items():
        if key not in actual:
            problems.append(f"unknown key {key!r}")
        elif actual[key] != value:
            problems.append(f"{key}: expected {json.dumps(value)}, got {json.dumps(actual[key])}")
    return problems


def _run_fixture(case: Tuple[int, str, Dict[str, Any]]) -> Tuple[int, str, List[str]]:
    number, text, expected = case
    try:
        problems = check_fixture(text, expected)
    except (NotationParseError, ValueError, EmptySystemError, InconsistencyError) as exc:
        problems = [f"{type(exc).__name__}: {exc}"]
    return number, text, problems


def run_fixtures(path: Path, settings: Settings) -> int:
    cases = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        parsed = parse_fixture_line(line)
        if parsed is not None:
            cases.append((number, parsed[0], parsed[1]))

    with ThreadPoolExecutor(max_workers=settings.fixture_workers) as pool:
        outcomes = list(pool.map(_run_fixture, cases))

    failures = 0
    for number, text, problems in outcomes:
        if problems:
            failures += 1
            print(f"FAIL line {number}: {text}")
            for problem in problems:
                print(f"     {problem}")
        else:
            print(f"ok   line {number}: {text}")
    print(f"{len(outcomes) - failures}/{len(outcomes)} fixtures passed")
    return EXIT_VERIFY if failures else EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = get_settings(prime=args.prime, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=settings.log_level, format="%(levelname)s %(name)s: %(message)s")

    try:
        if args.fixtures is not None:
            return run_fixtures(args.fixtures, settings)
        if not args.command:
            parser.print_usage(sys.stderr)
            print(f"{parser.prog}: error: a command or --fixtures is required", file=sys.stderr)
            return EXIT_USAGE
        system = parse_system(args.system)
        if system.internal:
            raise PreconditionError(f"{system} needs d >= 0 and all m_i >= 0")
        return COMMANDS[args.command](system, args, settings)
    except NotationParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print(exc.caret(), file=sys.stderr)
        return EXIT_USAGE
    except EmptySystemError as exc:
        print(f"empty system: {exc}")
        return EXIT_EMPTY
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except OracleError as exc:
        print(f"oracle error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
