"""Command-line entry point: check, scan and lfun."""

import argparse
import logging
import sys

from src.checker.results import Conclusion, Verdict
from src.errors import ComputationError, InputError
from src.report import render_invariants, render_scan, render_series, render_verdict
from src.runner import AUTO, DEFAULT_CONFIG, SIGNS, GrowthChecker, configure_logging

logger = logging.getLogger(__name__)

EXIT_VERIFIED = 0
EXIT_INCONCLUSIVE = 1
EXIT_NOT_VERIFIED = 2
EXIT_INPUT_ERROR = 3
EXIT_COMPUTATION_ERROR = 4


def exit_code(verdict: Verdict) -> int:
    if verdict.verified:
        return EXIT_VERIFIED
    if verdict.conclusion is Conclusion.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_NOT_VERIFIED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--curve", required=True, help='label from the curve table or "a1,a2,a3,a4,a6"')
    common.add_argument("--config", default=DEFAULT_CONFIG, help="YAML run configuration")
    common.add_argument("--curve-file", help="extra curve table in the bundled format")
    common.add_argument("--depth", type=int, help="level n of the Mazur-Tate elements")
    common.add_argument("--coeff-prec", type=int, help="precision cap M for non-constant coefficients")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="growth-check", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="run one checklist")
    check.add_argument("--d", type=int, required=True, help="K = Q(sqrt(-d))")
    check.add_argument("--prime", type=int, required=True)
    check.add_argument("--mode", choices=[AUTO, "ordinary", "supersingular", "sc"], default=AUTO)
    check.add_argument("--format", choices=["text", "json"], default="text")

    scan = commands.add_parser("scan", parents=[common], help="run a checklist over a (p, d) grid")
    scan.add_argument("--dmax", type=int, required=True, help="exclusive bound on prime d")
    scan.add_argument("--pmax", type=int, required=True, help="exclusive bound on prime p")
    scan.add_argument("--mode", choices=["ordinary", "supersingular", "sc"], default="ordinary")
    scan.add_argument("--format", choices=["table", "csv", "json"], default="table")

    lfun = commands.add_parser("lfun", parents=[common], help="print a p-adic L-function")
    lfun.add_argument("--prime", type=int, required=True)
    lfun.add_argument("--twist-d", type=int, help="twist by the discriminant of Q(sqrt(-d))")
    lfun.add_argument("--sign", choices=SIGNS, help="series at supersingular primes (default plus)")
    lfun.add_argument("--length", type=int, default=6, help="number of printed coefficients")
    return parser


def run(args: argparse.Namespace) -> int:
    checker = GrowthChecker(args.config, args.curve_file, depth=args.depth, coeff_prec=args.coeff_prec)
    if args.command == "check":
        verdict = checker.check(args.curve, args.d, args.prime, args.mode)
        print(render_verdict(verdict, args.format))
        return exit_code(verdict)
    if args.command == "scan":
        result = checker.scan(args.curve, args.dmax, args.pmax, args.mode)
        print(render_scan(result, args.format))
        return EXIT_VERIFIED

    report = checker.lfun(args.curve, args.prime, args.twist_d, args.sign)
    twist = f", twisted by Q(sqrt(-{report.d}))" if report.d is not None else ""
    print(f"{report.curve}, p = {report.p}{twist}, sign = {report.sign}")
    print(render_series(report.series, args.length))
    if report.invariants is not None:
        print(render_invariants(report.invariants))
    return EXIT_VERIFIED


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return run(args)
    except InputError as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ComputationError as e:
        logger.error(f"Computation failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
