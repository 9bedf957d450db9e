"""The scheduling problem shared by every solver"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..affinity import AffinityMatrix, job_affinity
from ..tasks import (
    DEFAULT_HYPER_PERIOD_GUARD,
    IntervalSet,
    Job,
    JobWindows,
    TaskSet,
    build_intervals,
    ensure_valid,
    generate_jobs,
    job_windows
)

Pair = Tuple[int, int, int]


class Problem:
    """A task set expanded over its hyper-period, with affinities"""

    def __init__(
            self,
            task_set: TaskSet,
            jobs: Sequence[Job],
            intervals: IntervalSet,
            windows: JobWindows,
            affinity: AffinityMatrix
    ) -> None:
        if affinity.task_count != len(task_set):
            raise ValueError(
                f'affinity matrix covers {affinity.task_count} tasks, '
                f'the task set has {len(task_set)}'
            )
        self.task_set = task_set
        self.jobs = tuple(jobs)
        self.intervals = intervals
        self.windows = windows
        self.affinity = affinity
        self._pairs: List[List[Pair]] = []
        for k in range(len(intervals)):
            present = windows.jobs_on(k)
            pairs = []
            for position, i in enumerate(present):
                for i_prime in present[position + 1:]:
                    a = job_affinity(affinity, self.jobs[i], self.jobs[i_prime])
                    if a > 0:
                        pairs.append((i, i_prime, a))
            self._pairs.append(pairs)

    @property
    def core_count(self) -> int:
        """The number of cores and caches"""
        return self.task_set.core_count

    @property
    def cache_capacity(self) -> int:
        """The capacity of each cache in bytes"""
        return self.task_set.cache_capacity

    def wss(self, job_id: int) -> int:
        """The working set size of a job"""
        return self.task_set[self.jobs[job_id].task_id].wss

    def utilization(self, job_id: int) -> Fraction:
        """The fluid weight C/P of a job"""
        job = self.jobs[job_id]
        return Fraction(job.wcet, job.period)

    def affinity_of(self, job_id: int, other_id: int) -> int:
        """The affinity between two jobs"""
        return job_affinity(
            self.affinity,
            self.jobs[job_id],
            self.jobs[other_id]
        )

    def pairs_on(self, k: int) -> List[Pair]:
        """The (i, i', a) job pairs with i < i' and a > 0 present on k"""
        return self._pairs[k]

    def pair_weight(self, k: int, weight_by_interval: bool) -> int:
        """The multiplier of pair terms on interval k"""
        return self.intervals.durations[k] if weight_by_interval else 1

    def affinity_mass(self) -> Dict[int, int]:
        """The total affinity of each job's task with the other tasks"""
        return {
            job.job_id: self.affinity.mass(job.task_id) for job in self.jobs
        }


def build_problem(
        task_set: TaskSet,
        affinity: AffinityMatrix,
        guard: int = DEFAULT_HYPER_PERIOD_GUARD
) -> Problem:
    """Validate a task set and expand it over its hyper-period.

    Raises:
        ValidationError: If the task set is not valid.

    Returns:
        Problem: The problem.
    """
    ensure_valid(task_set, guard)
    jobs = generate_jobs(task_set, guard)
    intervals = build_intervals(task_set, jobs, guard)
    windows = job_windows(jobs, intervals)
    return Problem(task_set, jobs, intervals, windows, affinity)
