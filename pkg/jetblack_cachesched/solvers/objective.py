"""The co-location objective"""

from typing import Optional, Sequence

from ..affinity import AffinityMatrix, job_affinity
from ..tasks import IntervalSet, Job, job_windows

from .problem import Problem
from .types import Assignment, SolverConfig


def objective_value(
        assignment: Assignment,
        affinity: AffinityMatrix,
        jobs: Sequence[Job],
        intervals: IntervalSet,
        config: Optional[SolverConfig] = None
) -> int:
    """The affinity co-located on the same cache, summed over intervals.

    Each unordered pair of jobs sharing a cache on an interval contributes
    its affinity once, multiplied by the interval length when the
    configuration weights by interval.

    Args:
        assignment (Assignment): The assignment.
        affinity (AffinityMatrix): The task affinities.
        jobs (Sequence[Job]): The jobs.
        intervals (IntervalSet): The intervals.
        config (Optional[SolverConfig], optional): The configuration.

    Returns:
        int: The objective Z.
    """
    weight_by_interval = config is not None and config.weight_by_interval
    windows = job_windows(jobs, intervals)
    total = 0
    for _cache, k, members in assignment.groups():
        present = [i for i in members if k in windows[i]]
        multiplier = intervals.durations[k] if weight_by_interval else 1
        for position, i in enumerate(present):
            for i_prime in present[position + 1:]:
                total += multiplier * job_affinity(
                    affinity,
                    jobs[i],
                    jobs[i_prime]
                )
    return total


def problem_objective(
        problem: Problem,
        assignment: Assignment,
        config: Optional[SolverConfig] = None
) -> int:
    """The objective of an assignment for a problem"""
    return objective_value(
        assignment,
        problem.affinity,
        problem.jobs,
        problem.intervals,
        config
    )


def group_objective(
        problem: Problem,
        members: Sequence[int],
        k: int,
        weight_by_interval: bool
) -> int:
    """The objective contributed by one cache's jobs on interval k"""
    total = 0
    for position, i in enumerate(members):
        for i_prime in members[position + 1:]:
            total += problem.affinity_of(i, i_prime)
    return total * problem.pair_weight(k, weight_by_interval)


def ideal_objective(problem: Problem, weight_by_interval: bool = False) -> int:
    """The objective if every concurrent job shared one unbounded cache"""
    return sum(
        a * problem.pair_weight(k, weight_by_interval)
        for k in range(len(problem.intervals))
        for _i, _i_prime, a in problem.pairs_on(k)
    )
