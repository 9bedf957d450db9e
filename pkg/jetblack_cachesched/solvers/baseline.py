"""An affinity-blind baseline spreading working sets over the caches"""

from fractions import Fraction
import logging
from typing import List

from .objective import problem_objective
from .problem import Problem
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


def solve_wss_balance(problem: Problem, config: SolverConfig) -> SolveResult:
    """Place jobs by next-fit-decreasing working set size, ignoring affinity.

    On each interval the jobs are taken largest working set first. A job
    goes on the current cache if it fits, else on the next cache, else on
    the least loaded cache it fits.
    """
    start = config.time_provider.now()
    m = problem.core_count
    triples: List[Triple] = []

    for k in range(len(problem.intervals)):
        wss = [0] * m
        load = [Fraction(0)] * m
        current = 0

        def fits(cache: int, job_id: int) -> bool:
            return (
                wss[cache] + problem.wss(job_id) <= problem.cache_capacity and
                load[cache] + problem.utilization(job_id) <= 1
            )

        for i in sorted(
                problem.windows.jobs_on(k),
                key=lambda job_id: (-problem.wss(job_id), job_id)
        ):
            if fits(current, i):
                cache = current
            elif current + 1 < m and fits(current + 1, i):
                current += 1
                cache = current
            else:
                candidates = [c for c in range(m) if fits(c, i)]
                if not candidates:
                    LOGGER.debug('job %s does not fit on interval %s', i, k)
                    return SolveResult(
                        SolverMethod.WSS_BALANCE,
                        SolveStatus.INFEASIBLE,
                        runtime=config.time_provider.now() - start
                    )
                cache = min(candidates, key=lambda c: (wss[c], c))
            wss[cache] += problem.wss(i)
            load[cache] += problem.utilization(i)
            triples.append((i, cache, k))

    assignment = Assignment(triples)
    realized = realize_weights(problem, assignment, config)
    runtime = config.time_provider.now() - start
    if realized is None:
        return SolveResult(
            SolverMethod.WSS_BALANCE,
            SolveStatus.INFEASIBLE,
            runtime=runtime
        )
    weights, cleared = realized
    return SolveResult(
        SolverMethod.WSS_BALANCE,
        SolveStatus.FEASIBLE,
        cleared,
        weights,
        problem_objective(problem, cleared, config),
        model_objective=problem_objective(problem, assignment, config),
        runtime=runtime
    )
