"""Exhaustive search over every assignment"""

import heapq
import itertools
import logging
from typing import List, NamedTuple, Optional, Sequence, Set, Tuple

from ..time_provider import Deadline
from ..types import SearchSpaceTooLargeError

from .objective import group_objective, problem_objective
from .problem import Problem
from .realize import Realization, realize_weights, weights_feasible
from .types import (
    Assignment,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod,
    Triple
)

LOGGER = logging.getLogger(__name__)

UNASSIGNED = -1

Labeling = Tuple[int, ...]


class _Best(NamedTuple):
    realization: Realization
    value: int
    model_value: int


def search_space_size(problem: Problem) -> int:
    """The number of assignments, counting the unassigned option"""
    return (problem.core_count + 1) ** problem.windows.slot_count


def _is_canonical(labeling: Labeling) -> bool:
    """True if caches first appear in increasing order"""
    expected = 0
    for cache in labeling:
        if cache == UNASSIGNED or cache < expected:
            continue
        if cache > expected:
            return False
        expected += 1
    return True


def _interval_labelings(
        problem: Problem,
        k: int,
        weight_by_interval: bool
) -> List[Tuple[int, Labeling]]:
    """The cache-feasible labelings of interval k, best first"""
    present = problem.windows.jobs_on(k)
    labelings = []
    for labeling in itertools.product(
            range(UNASSIGNED, problem.core_count),
            repeat=len(present)
    ):
        if not _is_canonical(labeling):
            continue
        wss = [0] * problem.core_count
        for i, cache in zip(present, labeling):
            if cache != UNASSIGNED:
                wss[cache] += problem.wss(i)
        if any(size > problem.cache_capacity for size in wss):
            continue
        value = sum(
            group_objective(
                problem,
                [i for i, label in zip(present, labeling) if label == cache],
                k,
                weight_by_interval
            )
            for cache in range(problem.core_count)
        )
        labelings.append((value, labeling))
    labelings.sort(key=lambda item: (-item[0], item[1]))
    return labelings


def _assignment(
        problem: Problem,
        choices: Sequence[List[Tuple[int, Labeling]]],
        indices: Sequence[int]
) -> Assignment:
    triples: List[Triple] = []
    for k, index in enumerate(indices):
        _, labeling = choices[k][index]
        triples.extend(
            (i, cache, k)
            for i, cache in zip(problem.windows.jobs_on(k), labeling)
            if cache != UNASSIGNED
        )
    return Assignment(triples)


def brute_force(problem: Problem, config: SolverConfig) -> SolveResult:
    """Find the true maximum by enumeration.

    Every job may take any cache or none on each interval of its window.
    Labelings differing only by a renaming of caches on an interval are
    enumerated once. Combinations are visited in decreasing order of their
    objective counted before idle slots are released. Each feasible one is
    scored after release, and the search stops once no unvisited
    combination can beat the best released objective.

    Args:
        problem (Problem): The problem.
        config (SolverConfig): The configuration holding the search space
            cap.

    Raises:
        SearchSpaceTooLargeError: If the search space exceeds the cap.

    Returns:
        SolveResult: The optimum, limit-reached with the best found, or
            infeasible.
    """
    space = search_space_size(problem)
    if space > config.space_cap:
        raise SearchSpaceTooLargeError(
            f'the search space has {space} assignments, '
            f'the cap is {config.space_cap}'
        )

    deadline = Deadline(config.time_provider, config.time_limit)
    choices = [
        _interval_labelings(problem, k, config.weight_by_interval)
        for k in range(len(problem.intervals))
    ]
    if any(not labelings for labelings in choices):
        return SolveResult(
            SolverMethod.BRUTE_FORCE,
            SolveStatus.INFEASIBLE,
            nodes=space,
            runtime=deadline.elapsed
        )

    def total(indices: Tuple[int, ...]) -> int:
        return sum(choices[k][index][0] for k, index in enumerate(indices))

    start = tuple(0 for _ in choices)
    heap = [(-total(start), start)]
    seen: Set[Tuple[int, ...]] = {start}
    lp_solves = 0
    best: Optional[_Best] = None
    limited = False

    while heap and (best is None or -heap[0][0] > best.value):
        if deadline.expired():
            LOGGER.info('brute force stopped at the time limit')
            limited = True
            break
        negated, indices = heapq.heappop(heap)
        assignment = _assignment(problem, choices, indices)
        lp_solves += 1
        if weights_feasible(problem, assignment, config):
            realized = realize_weights(problem, assignment, config)
            if realized is not None:
                value = problem_objective(problem, realized[1], config)
                if best is None or value > best.value:
                    LOGGER.debug(
                        'Z=%s (%s before release) after %s checks',
                        value,
                        -negated,
                        lp_solves
                    )
                    best = _Best(realized, value, -negated)
        for k in range(len(indices)):
            if indices[k] + 1 < len(choices[k]):
                successor = indices[:k] + (indices[k] + 1,) + indices[k + 1:]
                if successor not in seen:
                    seen.add(successor)
                    heapq.heappush(heap, (-total(successor), successor))

    if best is None:
        return SolveResult(
            SolverMethod.BRUTE_FORCE,
            SolveStatus.LIMIT_REACHED if limited else SolveStatus.INFEASIBLE,
            upper_bound=float(-heap[0][0]) if limited and heap else None,
            nodes=space,
            lp_solves=lp_solves,
            runtime=deadline.elapsed
        )

    upper_bound = float(best.value)
    if limited and heap:
        upper_bound = float(max(best.value, -heap[0][0]))
    weights, cleared = best.realization
    return SolveResult(
        SolverMethod.BRUTE_FORCE,
        SolveStatus.LIMIT_REACHED if limited else SolveStatus.OPTIMAL,
        cleared,
        weights,
        best.value,
        upper_bound,
        model_objective=best.model_value,
        nodes=space,
        lp_solves=lp_solves,
        runtime=deadline.elapsed
    )
