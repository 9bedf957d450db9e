"""A greedy pair-packing heuristic"""

from fractions import Fraction
import logging
from typing import Dict, List, Optional

from .problem import Problem
from .objective import problem_objective
from .realize import realize_weights
from .types import (
    Assignment,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod,
    Triple
)

LOGGER = logging.getLogger(__name__)


class _Caches:
    """The residual capacity of each cache on one interval"""

    def __init__(self, problem: Problem) -> None:
        self.problem = problem
        self.wss = [0] * problem.core_count
        self.load = [Fraction(0)] * problem.core_count
        self.placed: Dict[int, int] = {}

    def fits(self, cache: int, jobs: List[int]) -> bool:
        """True if the jobs fit on the cache and its core"""
        wss = sum(self.problem.wss(i) for i in jobs)
        load = sum((self.problem.utilization(i) for i in jobs), Fraction(0))
        return (
            self.wss[cache] + wss <= self.problem.cache_capacity and
            self.load[cache] + load <= 1
        )

    def place(self, cache: int, jobs: List[int]) -> None:
        """Put the jobs on the cache"""
        for i in jobs:
            self.wss[cache] += self.problem.wss(i)
            self.load[cache] += self.problem.utilization(i)
            self.placed[i] = cache


def _pack_interval(problem: Problem, k: int) -> Optional[Dict[int, int]]:
    caches = _Caches(problem)
    ranked = sorted(
        enumerate(problem.pairs_on(k)),
        key=lambda item: (
            -item[1][2],
            problem.wss(item[1][0]) + problem.wss(item[1][1]),
            item[0]
        )
    )
    for _, (i, i_prime, _a) in ranked:
        first, second = caches.placed.get(i), caches.placed.get(i_prime)
        if first is not None and second is not None:
            continue
        if first is not None or second is not None:
            cache = first if first is not None else second
            other = i_prime if first is not None else i
            if caches.fits(cache, [other]):
                caches.place(cache, [other])
            continue
        for cache in range(problem.core_count):
            if caches.fits(cache, [i, i_prime]):
                caches.place(cache, [i, i_prime])
                break

    remaining = sorted(
        (i for i in problem.windows.jobs_on(k) if i not in caches.placed),
        key=lambda i: (-problem.wss(i), i)
    )
    for i in remaining:
        candidates = [
            cache for cache in range(problem.core_count)
            if caches.fits(cache, [i])
        ]
        if not candidates:
            LOGGER.debug('job %s cannot be placed on interval %s', i, k)
            return None
        best = max(
            candidates,
            key=lambda cache: (
                problem.cache_capacity - caches.wss[cache],
                -cache
            )
        )
        caches.place(best, [i])
    return caches.placed


def solve_greedy(problem: Problem, config: SolverConfig) -> SolveResult:
    """Pack high affinity pairs together, interval by interval.

    On each interval the positive affinity pairs are taken by decreasing
    affinity, then smaller combined working set, then pair order. A pair
    with neither job placed goes first-fit onto a cache with room for both;
    a pair with one job placed pulls the other onto its cache if it fits.
    The remaining jobs are placed worst-fit by residual cache capacity,
    largest working set first. A cache accepts a job only if the working
    sets fit and the fluid weights on its core stay within one.

    Args:
        problem (Problem): The problem.
        config (SolverConfig): The configuration.

    Returns:
        SolveResult: A feasible result, or an infeasible one if some job
            could not be placed.
    """
    start = config.time_provider.now()
    triples: List[Triple] = []
    for k in range(len(problem.intervals)):
        placed = _pack_interval(problem, k)
        if placed is None:
            return SolveResult(
                SolverMethod.GREEDY,
                SolveStatus.INFEASIBLE,
                runtime=config.time_provider.now() - start
            )
        triples.extend((i, cache, k) for i, cache in placed.items())

    assignment = Assignment(triples)
    realized = realize_weights(problem, assignment, config)
    runtime = config.time_provider.now() - start
    if realized is None:
        LOGGER.debug('greedy assignment has no weights')
        return SolveResult(
            SolverMethod.GREEDY,
            SolveStatus.INFEASIBLE,
            runtime=runtime
        )
    weights, cleared = realized
    return SolveResult(
        SolverMethod.GREEDY,
        SolveStatus.FEASIBLE,
        cleared,
        weights,
        problem_objective(problem, cleared, config),
        model_objective=problem_objective(problem, assignment, config),
        runtime=runtime
    )
