"""Hill climbing over relocate and swap moves"""

import logging
from typing import Dict, Iterator, List, Optional

from ..time_provider import Deadline

from .objective import problem_objective
from .problem import Problem
from .realize import Realization, realize_weights
from .types import (
    Assignment,
    Slot,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod
)

LOGGER = logging.getLogger(__name__)


def _moves(problem: Problem, placement: Dict[Slot, int]) -> Iterator[Dict[Slot, int]]:
    """Every neighbouring placement, in a fixed order"""
    for k in range(len(problem.intervals)):
        present = problem.windows.jobs_on(k)
        for i in present:
            current = placement.get((i, k))
            for cache in range(problem.core_count):
                if cache != current:
                    moved = dict(placement)
                    moved[(i, k)] = cache
                    yield moved
        for position, i in enumerate(present):
            for i_prime in present[position + 1:]:
                first = placement.get((i, k))
                second = placement.get((i_prime, k))
                if first is None or second is None or first == second:
                    continue
                swapped = dict(placement)
                swapped[(i, k)], swapped[(i_prime, k)] = second, first
                yield swapped


def _improve(
        problem: Problem,
        placement: Dict[Slot, int],
        current: int,
        config: SolverConfig
) -> Optional[Realization]:
    for candidate in _moves(problem, placement):
        assignment = Assignment.from_mapping(candidate)
        if problem_objective(problem, assignment, config) <= current:
            continue
        realized = realize_weights(problem, assignment, config, exact=False)
        if realized is None:
            continue
        if problem_objective(problem, realized[1], config) > current:
            return realized
    return None


def local_search(
        problem: Problem,
        start: SolveResult,
        config: SolverConfig
) -> SolveResult:
    """Improve a feasible result until no move helps.

    A move relocates one job on one interval to another cache, or swaps
    the caches of two jobs on one interval. The first move that strictly
    improves the objective after idle slots are released is taken.

    Args:
        problem (Problem): The problem.
        start (SolveResult): A feasible starting point.
        config (SolverConfig): The configuration. The time limit stops the
            search.

    Returns:
        SolveResult: A result at least as good as the start. The trace holds
            the objective after each accepted move.
    """
    if not start.has_solution or start.assignment is None:
        LOGGER.debug('nothing to improve: start is %s', start.status.value)
        return SolveResult(
            SolverMethod.LOCAL_SEARCH,
            start.status,
            upper_bound=start.upper_bound,
            runtime=start.runtime
        )

    deadline = Deadline(config.time_provider, config.time_limit)
    assignment = start.assignment
    current = problem_objective(problem, assignment, config)
    trace: List[int] = [current]
    limited = False

    while True:
        if deadline.expired():
            LOGGER.info('local search stopped at the time limit')
            limited = True
            break
        realized = _improve(problem, assignment.as_mapping(), current, config)
        if realized is None:
            break
        assignment = realized[1]
        current = problem_objective(problem, assignment, config)
        trace.append(current)
        LOGGER.debug('accepted move: Z=%s', current)

    final = realize_weights(problem, assignment, config, exact=True)
    if final is None:
        LOGGER.warning('exact weights failed, keeping the start')
        assignment, weights = start.assignment, start.weights
    else:
        weights, assignment = final

    objective = problem_objective(problem, assignment, config)
    return SolveResult(
        SolverMethod.LOCAL_SEARCH,
        SolveStatus.LIMIT_REACHED if limited else SolveStatus.FEASIBLE,
        assignment,
        weights,
        objective,
        start.upper_bound,
        nodes=len(trace) - 1,
        runtime=start.runtime + deadline.elapsed,
        trace=trace
    )
