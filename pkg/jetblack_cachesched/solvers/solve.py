"""Solver dispatch"""

import logging

from .baseline import solve_wss_balance
from .branch_and_bound import solve_exact
from .brute_force import brute_force
from .greedy import solve_greedy
from .linearized import build_linearized_model
from .local_search import local_search
from .problem import Problem
from .types import SolveResult, SolverConfig, SolverMethod

LOGGER = logging.getLogger(__name__)


def solve(problem: Problem, config: SolverConfig) -> SolveResult:
    """Solve a problem with the configured method.

    Local search starts from the greedy result.

    Raises:
        GuardError: If the method's size guard is exceeded.
    """
    LOGGER.info(
        'solving %s jobs on %s intervals with %s',
        len(problem.jobs),
        len(problem.intervals),
        config.method.value
    )
    if config.method == SolverMethod.EXACT:
        result = solve_exact(build_linearized_model(problem, config), config)
    elif config.method == SolverMethod.GREEDY:
        result = solve_greedy(problem, config)
    elif config.method == SolverMethod.LOCAL_SEARCH:
        result = local_search(problem, solve_greedy(problem, config), config)
    elif config.method == SolverMethod.BRUTE_FORCE:
        result = brute_force(problem, config)
    elif config.method == SolverMethod.WSS_BALANCE:
        result = solve_wss_balance(problem, config)
    else:
        raise ValueError(f'unknown method {config.method}')
    LOGGER.info('%s', result)
    return result
