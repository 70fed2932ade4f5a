"""
Command-line entry point.

    python app.py classify --surface data/k3_quartic.json --v "2;0;-2" --v-general
    python app.py local-model --e0 2 --type "(1,2)"
    python app.py verify-estimates --sweep --max-total 4 --max-entry 6
    python app.py count-points --model '{"n": [1, 1], "D": [[2, 2], [2, 2]]}' --primes 2,3,5
    python app.py report --surface data/k3_quartic.json --v "3;0;-3" --v-general
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from errors import InvalidInputError
from cli.commands import EXIT_INPUT, run
from cli.run_config import Command, RunConfig
from ffprobe.point_counter import parse_primes
from reporting.human_logger import HumanLogger


def _primes(text: str):
    try:
        return parse_primes(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, help="Seed for sampled points (default: MODULI_SEED)")
    parser.add_argument("--workers", type=int, help="Worker processes (default: MODULI_WORKERS)")
    parser.add_argument("--quiet", action="store_true", help="Only print the JSON document")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")


def _add_vector_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--surface", dest="surface_path", required=True, help="Surface JSON file")
    parser.add_argument("--v", dest="vector", required=True, help='Mukai vector, e.g. "2;0;-2"')
    parser.add_argument("--v-general", action="store_true", help="Assert that H is v-general")


def _add_model_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--model", help='Model JSON or a file with {"n": [...], "D": [[...]]}')
    parser.add_argument("--e0", type=int, help="<v0,v0> for a model given by --type")
    parser.add_argument("--type", dest="type_spec", help='Polystable type, e.g. "(1,1),(1,1)"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moduli",
        description="Classify moduli spaces of sheaves on K3 and abelian surfaces and check "
                    "the local-model computations behind the classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser(Command.CLASSIFY.value, help="Verdict for M_H(v)")
    _add_vector_inputs(classify)
    classify.add_argument("--effective", dest="effective", action="store_true", default=None,
                          help="Assert that c0 is effective (torsion case)")
    classify.add_argument("--not-effective", dest="effective", action="store_false",
                          help="Assert that c0 is not effective (torsion case)")
    _add_common(classify)

    local = sub.add_parser(Command.LOCAL_MODEL.value, help="Build a local model and probe it")
    _add_model_inputs(local)
    local.add_argument("--probes", type=int, help="Lagrangian points to probe (default 5)")
    _add_common(local)

    verify = sub.add_parser(Command.VERIFY_ESTIMATES.value, help="Check the stabiliser estimates")
    _add_model_inputs(verify)
    verify.add_argument("--sweep", action="store_true", help="Sweep all models within the bounds")
    verify.add_argument("--max-total", type=int, help="Sweep bound on sum of n_i")
    verify.add_argument("--max-entry", type=int, help="Sweep bound on entries of D")
    verify.add_argument("--full-range-parts", type=int, help="Full D grid up to this many indices")
    _add_common(verify)

    count = sub.add_parser(Command.COUNT_POINTS.value, help="Count points of F(n) over prime fields")
    _add_model_inputs(count)
    count.add_argument("--primes", type=_primes, required=True, help="Comma-separated primes")
    _add_common(count)

    report = sub.add_parser(Command.REPORT.value, help="Full report for one Mukai vector")
    _add_vector_inputs(report)
    report.add_argument("--primes", type=_primes, help="Also count points over these primes")
    _add_common(report)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    """Parse arguments, run the subcommand and return its exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_INPUT

    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s',
                        level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        config = RunConfig.from_args(args)
    except InvalidInputError as e:
        print(f"❌ {e}", file=err)
        return EXIT_INPUT
    return run(config, out, HumanLogger(err))
