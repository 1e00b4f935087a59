# -*- coding: utf-8 -*-

from argparse import ArgumentParser, Namespace, RawDescriptionHelpFormatter
from functools import lru_cache
from os import R_OK, access, getcwd
from os.path import isfile, join
from typing import Final, List, Optional, Sequence

from fcover.formats.report import REPORT_FORMAT_JSON, REPORT_FORMATS
from fcover.generators import KIND_GNP_UNIFORM, generator_kinds
from fcover.logging.logging import (
    DEFAULT_TIMED_ROTATING_WHEN,
    SEVERITIES,
    SEVERITY_NAME_WARNING,
    TIMED_ROTATING_WHEN,
)
from fcover.lp import DEFAULT_BACKEND, backend_names
from fcover.system.environ import env_key as env
from fcover.system.environ import get_typed_environ_value as get_eval

PROG: Final[str] = "fcover"
DESCRIPTION: Final[str] = "Forest cover and bounded forest cover solvers"
EPILOG = f"""
Apply general debugging options:
  {PROG} -D ...
"""

CMD_EXACT: Final[str] = "exact"
CMD_EXACT_HELP: Final[str] = "Exhaustive optimum of a small FC or BFC instance"
CMD_EXACT_EPILOG = f"""
Simply usage:
  {PROG} {CMD_EXACT} --input graph.fc
  {PROG} {CMD_EXACT} --input graph.bfc --lambda 10
"""

CMD_BINARY: Final[str] = "binary"
CMD_BINARY_HELP: Final[str] = "Matching-based 2-approximation for 0/1 weights"
CMD_BINARY_EPILOG = f"""
Simply usage:
  {PROG} {CMD_BINARY} --input graph.fc
"""

CMD_RANDOM: Final[str] = "random"
CMD_RANDOM_HELP: Final[str] = "Randomized (2+epsilon)-approximation"
CMD_RANDOM_EPILOG = f"""
Simply usage:
  {PROG} {CMD_RANDOM} --input graph.fc --epsilon 0.5 --seed 7
"""

CMD_ROUND: Final[str] = "round"
CMD_ROUND_HELP: Final[str] = "LP rounding 2-approximation"
CMD_ROUND_EPILOG = f"""
Simply usage:
  {PROG} {CMD_ROUND} --input graph.fc
  {PROG} {CMD_ROUND} --input graph.fc --dump-cuts cuts.txt
"""

CMD_BFC: Final[str] = "bfc"
CMD_BFC_HELP: Final[str] = "Bounded forest cover 6-approximation"
CMD_BFC_EPILOG = f"""
Simply usage:
  {PROG} {CMD_BFC} --input graph.bfc --lambda 10
"""

CMD_GEN: Final[str] = "gen"
CMD_GEN_HELP: Final[str] = "Generate an instance file"
CMD_GEN_EPILOG = f"""
Simply usage:
  {PROG} {CMD_GEN} --kind gnp-binary --n 6 --p 0.5 --seed 7 --out graph.fc
"""

CMD_BENCH: Final[str] = "bench"
CMD_BENCH_HELP: Final[str] = "Sweep generated instances and tabulate ratios"
CMD_BENCH_EPILOG = f"""
Simply usage:
  {PROG} {CMD_BENCH} --kind gnp-binary --n 8 --trials 100 --seed 1 --method binary
"""

CMD_VERIFY: Final[str] = "verify"
CMD_VERIFY_HELP: Final[str] = "Check a stored solution against its instance"
CMD_VERIFY_EPILOG = f"""
Simply usage:
  {PROG} {CMD_VERIFY} --input graph.fc --solution graph.sol
"""

CMDS: Final[Sequence[str]] = (
    CMD_EXACT,
    CMD_BINARY,
    CMD_RANDOM,
    CMD_ROUND,
    CMD_BFC,
    CMD_GEN,
    CMD_BENCH,
    CMD_VERIFY,
)

BENCH_METHODS: Final[Sequence[str]] = (CMD_BINARY, CMD_RANDOM, CMD_ROUND, CMD_BFC)

LOCAL_DOTENV_FILENAME: Final[str] = ".env.local"

DEFAULT_SEED: Final[int] = 0
DEFAULT_EPSILON: Final[float] = 0.5
DEFAULT_MAX_EXPERIMENTS: Final[int] = 10000
DEFAULT_TOL: Final[float] = 1e-7
DEFAULT_MAX_ITERATIONS: Final[int] = 0
DEFAULT_LAMBDA: Final[float] = 0.0
DEFAULT_GEN_N: Final[int] = 8
DEFAULT_GEN_P: Final[float] = 0.5
DEFAULT_GEN_BIAS: Final[float] = 0.5
DEFAULT_GEN_SCALE: Final[float] = 1.0
DEFAULT_GEN_WEIGHT: Final[float] = 1.0
DEFAULT_BENCH_TRIALS: Final[int] = 10
DEFAULT_BENCH_METHOD: Final[str] = CMD_ROUND
DEFAULT_BENCH_JOBS: Final[int] = 1

PRINTER_ATTR_KEY: Final[str] = "_printer"

VERBOSE_LEVEL_0: Final[int] = 0
VERBOSE_LEVEL_1: Final[int] = 1
VERBOSE_LEVEL_2: Final[int] = 2


@lru_cache
def version() -> str:
    # [IMPORTANT] Avoid 'circular import' issues
    from fcover import __version__

    return __version__


def add_dotenv_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--no-dotenv",
        action="store_true",
        default=get_eval(env("NO_DOTENV"), False),
        help="Do not use dot-env file",
    )
    parser.add_argument(
        "--dotenv-path",
        default=get_eval(env("DOTENV_PATH"), join(getcwd(), LOCAL_DOTENV_FILENAME)),
        metavar="file",
        help=f"Specifies the dot-env file (default: '{LOCAL_DOTENV_FILENAME}')",
    )


def add_input_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        "-i",
        default=get_eval(env("INPUT"), ""),
        metavar="file",
        help="Instance file ('p fc|bfc <n> <m>' header, 'e <u> <v> <w>' lines)",
    )


def add_output_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--out",
        "-o",
        default=get_eval(env("OUT"), ""),
        metavar="file",
        help="Write the report to this file instead of stdout",
    )
    parser.add_argument(
        "--report-format",
        choices=REPORT_FORMATS,
        default=get_eval(env("REPORT_FORMAT"), REPORT_FORMAT_JSON),
        help=f"Report encoding (default: '{REPORT_FORMAT_JSON}')",
    )
    parser.add_argument(
        "--solution-out",
        default=get_eval(env("SOLUTION_OUT"), ""),
        metavar="file",
        help="Also write the trees as a solution file",
    )


def add_lambda_argument(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--lambda",
        dest="lam",
        default=get_eval(env("LAMBDA"), DEFAULT_LAMBDA),
        metavar="bound",
        type=float,
        help="Tree weight bound of bounded forest cover",
    )


def add_seed_argument(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--seed",
        default=get_eval(env("SEED"), DEFAULT_SEED),
        metavar="int",
        type=int,
        help=f"Random seed (default: {DEFAULT_SEED})",
    )


def add_random_arguments(parser: ArgumentParser) -> None:
    add_seed_argument(parser)
    parser.add_argument(
        "--epsilon",
        default=get_eval(env("EPSILON"), DEFAULT_EPSILON),
        metavar="eps",
        type=float,
        help=f"Approximation slack in (0, 1] (default: {DEFAULT_EPSILON})",
    )
    parser.add_argument(
        "--max-experiments",
        default=get_eval(env("MAX_EXPERIMENTS"), DEFAULT_MAX_EXPERIMENTS),
        metavar="count",
        type=int,
        help=f"Experiment cap (default: {DEFAULT_MAX_EXPERIMENTS})",
    )


def add_lp_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--tol",
        default=get_eval(env("TOL"), DEFAULT_TOL),
        metavar="value",
        type=float,
        help=f"Subset constraint violation tolerance (default: {DEFAULT_TOL})",
    )
    parser.add_argument(
        "--max-iterations",
        default=get_eval(env("MAX_ITERATIONS"), DEFAULT_MAX_ITERATIONS),
        metavar="count",
        type=int,
        help="Cutting plane iteration cap (default: 10 * n^2)",
    )
    parser.add_argument(
        "--lp-backend",
        choices=backend_names(),
        default=get_eval(env("LP_BACKEND"), DEFAULT_BACKEND),
        help=f"LP solver (default: '{DEFAULT_BACKEND}')",
    )
    parser.add_argument(
        "--fixed-point-pruning",
        action="store_true",
        default=get_eval(env("FIXED_POINT_PRUNING"), False),
        help="Repeat pendant pruning until no low pendant remains",
    )
    parser.add_argument(
        "--dump-cuts",
        default=get_eval(env("DUMP_CUTS"), ""),
        metavar="file",
        help="Write the cut pool and final LP point as text ('-' for stderr)",
    )


def add_generator_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--kind",
        choices=generator_kinds(),
        default=get_eval(env("KIND"), KIND_GNP_UNIFORM),
        help=f"Instance family (default: '{KIND_GNP_UNIFORM}')",
    )
    parser.add_argument(
        "--n",
        default=get_eval(env("N"), DEFAULT_GEN_N),
        metavar="count",
        type=int,
        help=f"Vertex count (default: {DEFAULT_GEN_N})",
    )
    parser.add_argument(
        "--p",
        default=get_eval(env("P"), DEFAULT_GEN_P),
        metavar="prob",
        type=float,
        help=f"Edge probability (default: {DEFAULT_GEN_P})",
    )
    parser.add_argument(
        "--bias",
        default=get_eval(env("BIAS"), DEFAULT_GEN_BIAS),
        metavar="prob",
        type=float,
        help=f"Probability of weight 1 for gnp-binary (default: {DEFAULT_GEN_BIAS})",
    )
    parser.add_argument(
        "--scale",
        default=get_eval(env("SCALE"), DEFAULT_GEN_SCALE),
        metavar="weight",
        type=float,
        help=f"Largest weight for gnp-raw and tree (default: {DEFAULT_GEN_SCALE})",
    )
    parser.add_argument(
        "--weight",
        default=get_eval(env("WEIGHT"), DEFAULT_GEN_WEIGHT),
        metavar="weight",
        type=float,
        help=f"Edge weight of path, star, cycle (default: {DEFAULT_GEN_WEIGHT})",
    )


def _add_command(subparsers, name: str, help_text: str, epilog: str) -> ArgumentParser:
    # noinspection SpellCheckingInspection
    parser = subparsers.add_parser(
        name=name,
        help=help_text,
        formatter_class=RawDescriptionHelpFormatter,
        epilog=epilog,
    )
    assert isinstance(parser, ArgumentParser)
    return parser


def add_exact_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_EXACT, CMD_EXACT_HELP, CMD_EXACT_EPILOG)
    add_input_arguments(parser)
    add_lambda_argument(parser)
    add_output_arguments(parser)


def add_binary_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_BINARY, CMD_BINARY_HELP, CMD_BINARY_EPILOG)
    add_input_arguments(parser)
    add_output_arguments(parser)


def add_random_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_RANDOM, CMD_RANDOM_HELP, CMD_RANDOM_EPILOG)
    add_input_arguments(parser)
    add_random_arguments(parser)
    add_output_arguments(parser)


def add_round_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_ROUND, CMD_ROUND_HELP, CMD_ROUND_EPILOG)
    add_input_arguments(parser)
    add_lp_arguments(parser)
    add_output_arguments(parser)


def add_bfc_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_BFC, CMD_BFC_HELP, CMD_BFC_EPILOG)
    add_input_arguments(parser)
    add_lambda_argument(parser)
    add_lp_arguments(parser)
    add_output_arguments(parser)


def add_gen_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_GEN, CMD_GEN_HELP, CMD_GEN_EPILOG)
    add_generator_arguments(parser)
    add_seed_argument(parser)
    parser.add_argument(
        "--out",
        "-o",
        default=get_eval(env("OUT"), ""),
        metavar="file",
        help="Write the instance to this file instead of stdout",
    )


def add_bench_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_BENCH, CMD_BENCH_HELP, CMD_BENCH_EPILOG)
    add_generator_arguments(parser)
    add_random_arguments(parser)
    add_lambda_argument(parser)
    add_lp_arguments(parser)
    add_output_arguments(parser)
    parser.add_argument(
        "--trials",
        default=get_eval(env("TRIALS"), DEFAULT_BENCH_TRIALS),
        metavar="count",
        type=int,
        help=f"Number of generated instances (default: {DEFAULT_BENCH_TRIALS})",
    )
    parser.add_argument(
        "--method",
        choices=BENCH_METHODS,
        default=get_eval(env("METHOD"), DEFAULT_BENCH_METHOD),
        help=f"Algorithm under test (default: '{DEFAULT_BENCH_METHOD}')",
    )
    parser.add_argument(
        "--jobs",
        "-j",
        default=get_eval(env("JOBS"), DEFAULT_BENCH_JOBS),
        metavar="count",
        type=int,
        help=f"Worker processes (default: {DEFAULT_BENCH_JOBS})",
    )
    parser.add_argument(
        "--no-oracle",
        action="store_true",
        default=get_eval(env("NO_ORACLE"), False),
        help="Skip the exhaustive optimum even when the instance is small",
    )


def add_verify_parser(subparsers) -> None:
    parser = _add_command(subparsers, CMD_VERIFY, CMD_VERIFY_HELP, CMD_VERIFY_EPILOG)
    add_input_arguments(parser)
    add_lambda_argument(parser)
    add_output_arguments(parser)
    parser.add_argument(
        "--solution",
        default=get_eval(env("SOLUTION"), ""),
        metavar="file",
        help="Solution file ('s <kind> <n> <count>' then 't <vs> ; <es>' lines)",
    )


def default_argument_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog=PROG,
        description=DESCRIPTION,
        epilog=EPILOG,
        formatter_class=RawDescriptionHelpFormatter,
    )

    add_dotenv_arguments(parser)

    logging_group = parser.add_mutually_exclusive_group()
    logging_group.add_argument(
        "--colored-logging",
        "-c",
        action="store_true",
        default=get_eval(env("COLORED_LOGGING"), False),
        help="Use colored logging",
    )
    logging_group.add_argument(
        "--default-logging",
        action="store_true",
        default=get_eval(env("DEFAULT_LOGGING"), False),
        help="Use default logging",
    )
    logging_group.add_argument(
        "--simple-logging",
        "-s",
        action="store_true",
        default=get_eval(env("SIMPLE_LOGGING"), False),
        help="Use simple logging",
    )

    parser.add_argument(
        "--rotate-logging-prefix",
        default=get_eval(env("ROTATE_LOGGING_PREFIX"), ""),
        metavar="prefix",
        help="Rotate logging prefix",
    )
    parser.add_argument(
        "--rotate-logging-when",
        choices=TIMED_ROTATING_WHEN,
        default=get_eval(env("ROTATE_LOGGING_WHEN"), DEFAULT_TIMED_ROTATING_WHEN),
        help=f"Rotate logging when (default: '{DEFAULT_TIMED_ROTATING_WHEN}')",
    )

    parser.add_argument(
        "--use-uvloop",
        action="store_true",
        default=get_eval(env("USE_UVLOOP"), False),
        help="Replace the event loop with uvloop",
    )
    parser.add_argument(
        "--severity",
        choices=SEVERITIES,
        default=get_eval(env("SEVERITY"), SEVERITY_NAME_WARNING),
        help=f"Logging severity (default: '{SEVERITY_NAME_WARNING}')",
    )

    parser.add_argument(
        "--debug",
        "-d",
        action="store_true",
        default=get_eval(env("DEBUG"), False),
        help="Enable debugging mode and change logging severity to 'DEBUG'",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="count",
        default=get_eval(env("VERBOSE"), 0),
        help="Be more verbose/talkative during the operation",
    )
    parser.add_argument(
        "--version",
        "-V",
        action="version",
        version=version(),
    )

    parser.add_argument(
        "-D",
        action="store_true",
        default=False,
        help="Same as ['-c', '-d', '-vv'] flags",
    )

    subparsers = parser.add_subparsers(dest="cmd")
    add_exact_parser(subparsers)
    add_binary_parser(subparsers)
    add_random_parser(subparsers)
    add_round_parser(subparsers)
    add_bfc_parser(subparsers)
    add_gen_parser(subparsers)
    add_bench_parser(subparsers)
    add_verify_parser(subparsers)
    return parser


def _load_dotenv(
    cmdline: Optional[List[str]] = None,
    namespace: Optional[Namespace] = None,
) -> None:
    parser = ArgumentParser(add_help=False, allow_abbrev=False, exit_on_error=False)
    add_dotenv_arguments(parser)
    args = parser.parse_known_args(cmdline, namespace)[0]

    assert isinstance(args.no_dotenv, bool)
    assert isinstance(args.dotenv_path, str)

    if args.no_dotenv:
        return
    if not isfile(args.dotenv_path):
        return
    if not access(args.dotenv_path, R_OK):
        return

    try:
        from dotenv import load_dotenv

        load_dotenv(args.dotenv_path)
    except ModuleNotFoundError:
        pass


def _remove_dotenv_attrs(namespace: Namespace) -> Namespace:
    assert isinstance(namespace.no_dotenv, bool)
    assert isinstance(namespace.dotenv_path, str)

    del namespace.no_dotenv
    del namespace.dotenv_path

    assert not hasattr(namespace, "no_dotenv")
    assert not hasattr(namespace, "dotenv_path")

    return namespace


def get_default_arguments(
    cmdline: Optional[List[str]] = None,
    namespace: Optional[Namespace] = None,
) -> Namespace:
    # [IMPORTANT] Dotenv related options are processed first.
    _load_dotenv(cmdline, namespace)

    parser = default_argument_parser()
    args = parser.parse_known_args(cmdline, namespace)[0]

    # Remove unnecessary dotenv attrs
    return _remove_dotenv_attrs(args)
