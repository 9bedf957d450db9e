"""The command line entry point"""

import argparse
import logging
import sys
from typing import List, NoReturn, Optional

from ..evaluation import DEFAULT_PERIODS
from ..solvers import (
    DEFAULT_EPSILON,
    DEFAULT_NODE_LIMIT,
    DEFAULT_TIME_LIMIT,
    SolverMethod
)
from ..types import CacheSchedError

from .commands import (
    cmd_compare,
    cmd_generate,
    cmd_solve,
    cmd_sweep,
    cmd_validate,
    parse_methods
)
from .types import ExitCode

LOGGER = logging.getLogger(__name__)

SOLVER_NAMES = [method.value for method in SolverMethod] + [
    'local-search',
    'brute-force'
]
DEFAULT_METHODS = 'exact,greedy,local'


class ArgumentParser(argparse.ArgumentParser):
    """An argument parser exiting with the usage code on errors"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f'{self.prog}: error: {message}\n')


def _methods(value: str) -> List[SolverMethod]:
    try:
        return parse_methods(value)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from error


def _periods(value: str) -> List[int]:
    try:
        return [int(period) for period in value.split(',')]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f'bad periods {value!r}') from error


def _add_solver_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--time-limit',
        type=float,
        default=DEFAULT_TIME_LIMIT,
        help='seconds before a search stops'
    )
    parser.add_argument(
        '--node-limit',
        type=int,
        default=DEFAULT_NODE_LIMIT,
        help='branch-and-bound nodes before the search stops'
    )
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument(
        '--epsilon-link',
        action='store_true',
        help='assigned jobs must receive a weight of at least epsilon'
    )
    parser.add_argument(
        '--epsilon',
        type=float,
        default=float(DEFAULT_EPSILON),
        help='the minimum weight of an assigned job with --epsilon-link'
    )
    parser.add_argument(
        '--weight-by-interval',
        action='store_true',
        help='weight co-location by interval length'
    )


def build_parser() -> ArgumentParser:
    """The command line parser"""
    parser = ArgumentParser(
        prog='cachesched',
        description='Cache-aware static scheduling of periodic task sets'
    )
    parser.add_argument(
        '--log-level',
        default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR']
    )
    commands = parser.add_subparsers(dest='command', required=True)

    validate = commands.add_parser('validate', help='check an instance file')
    validate.add_argument('input')
    validate.set_defaults(handler=cmd_validate)

    solve = commands.add_parser('solve', help='solve an instance')
    solve.add_argument('input')
    solve.add_argument('--solver', choices=SOLVER_NAMES, default='exact')
    solve.add_argument('--output', default=None)
    solve.add_argument('--format', choices=['csv', 'summary'], default='csv')
    _add_solver_arguments(solve)
    solve.set_defaults(handler=cmd_solve)

    compare = commands.add_parser('compare', help='compare solver methods')
    compare.add_argument('input')
    compare.add_argument('--methods', type=_methods, default=DEFAULT_METHODS)
    compare.add_argument('--output', default=None)
    _add_solver_arguments(compare)
    compare.set_defaults(handler=cmd_compare)

    generate = commands.add_parser('generate', help='generate an instance')
    generate.add_argument('--spec-file', default=None)
    generate.add_argument('--tasks', type=int, default=None)
    generate.add_argument('--cores', type=int, default=None)
    generate.add_argument('--utilization', type=float, default=None)
    generate.add_argument('--cache-bytes', type=int, default=None)
    generate.add_argument('--wss-min', type=int, default=0)
    generate.add_argument('--wss-max', type=int, default=None)
    generate.add_argument('--density', type=float, default=0.5)
    generate.add_argument('--flows-min', type=int, default=1)
    generate.add_argument('--flows-max', type=int, default=3)
    generate.add_argument(
        '--periods',
        type=_periods,
        default=list(DEFAULT_PERIODS)
    )
    generate.add_argument('--seed', type=int, default=None)
    generate.add_argument('--output', default=None)
    generate.set_defaults(handler=cmd_generate)

    sweep = commands.add_parser('sweep', help='compare over many instances')
    sweep.add_argument('--spec-file', required=True)
    sweep.add_argument('--count', type=int, default=10)
    sweep.add_argument('--methods', type=_methods, default=DEFAULT_METHODS)
    sweep.add_argument('--output', default=None)
    sweep.add_argument('--database', default=None)
    sweep.add_argument('--workers', type=int, default=None)
    _add_solver_arguments(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run a command.

    Args:
        argv (Optional[List[str]], optional): The arguments. Defaults to
            the process arguments.

    Returns:
        int: The exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level))

    try:
        return int(args.handler(args))
    except (CacheSchedError, OSError) as error:
        code = ExitCode.from_error(error)
        for line in getattr(error, 'diagnostics', None) or [str(error)]:
            print(line, file=sys.stderr)
        LOGGER.debug('exit %s', code.value, exc_info=True)
        return code
    except ValueError as error:
        print(str(error), file=sys.stderr)
        return ExitCode.USAGE
