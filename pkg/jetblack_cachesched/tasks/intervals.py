"""Hyper-period, job generation and interval partitioning"""

from bisect import bisect_left
from math import gcd
import logging
from typing import List, Sequence

from ..types import HyperPeriodOverflowError, ValidationError

from .types import (
    DEFAULT_HYPER_PERIOD_GUARD,
    IntervalSet,
    Job,
    JobWindows,
    TaskSet
)

LOGGER = logging.getLogger(__name__)


def hyper_period(
        task_set: TaskSet,
        guard: int = DEFAULT_HYPER_PERIOD_GUARD
) -> int:
    """The least common multiple of all periods.

    Args:
        task_set (TaskSet): The task set.
        guard (int, optional): The largest hyper-period accepted. Defaults
            to 2**32.

    Raises:
        ValidationError: If there are no tasks or a period is not positive.
        HyperPeriodOverflowError: If the hyper-period exceeds the guard.

    Returns:
        int: The hyper-period in ticks.
    """
    if not task_set.tasks:
        raise ValidationError(['no tasks'])

    result = 1
    seen: List[int] = []
    for task in task_set.tasks:
        if task.period < 1:
            raise ValidationError(
                [f'task {task.name!r}: period {task.period} must be >= 1']
            )
        result = result * task.period // gcd(result, task.period)
        if task.period not in seen:
            seen.append(task.period)
        if result > guard:
            raise HyperPeriodOverflowError(
                [
                    f'hyper-period exceeds {guard} ticks for periods '
                    f'{sorted(seen)}'
                ]
            )
    return result


def generate_jobs(
        task_set: TaskSet,
        guard: int = DEFAULT_HYPER_PERIOD_GUARD
) -> List[Job]:
    """Generate every job released in one hyper-period.

    Jobs are numbered in (release, task id) order.

    Args:
        task_set (TaskSet): The task set.
        guard (int, optional): The hyper-period guard.

    Returns:
        List[Job]: The jobs.
    """
    horizon = hyper_period(task_set, guard)
    releases = sorted(
        (release, task.id)
        for task in task_set.tasks
        for release in range(0, horizon, task.period)
    )
    jobs = [
        Job(
            job_id,
            task_id,
            release,
            release + task_set[task_id].period,
            task_set[task_id].wcet
        )
        for job_id, (release, task_id) in enumerate(releases)
    ]
    LOGGER.debug(
        'generated %s jobs over a hyper-period of %s',
        len(jobs),
        horizon
    )
    return jobs


def build_intervals(
        task_set: TaskSet,
        jobs: Sequence[Job],
        guard: int = DEFAULT_HYPER_PERIOD_GUARD
) -> IntervalSet:
    """Partition the hyper-period at every job release.

    The horizon is the latest deadline of the jobs, which is the
    hyper-period they were generated over.

    Args:
        task_set (TaskSet): The task set.
        jobs (Sequence[Job]): The jobs of one hyper-period.
        guard (int, optional): The hyper-period guard, used only when there
            are no jobs.

    Returns:
        IntervalSet: The intervals.
    """
    horizon = (
        max(job.deadline for job in jobs) if jobs
        else hyper_period(task_set, guard)
    )
    boundaries = sorted({job.release for job in jobs} | {horizon})
    return IntervalSet(boundaries)


def job_windows(jobs: Sequence[Job], intervals: IntervalSet) -> JobWindows:
    """Find the intervals covered by each job's [release, deadline).

    Intervals are half-open, so a window ending at a boundary does not
    include the interval starting there.

    Args:
        jobs (Sequence[Job]): The jobs, indexed by job id.
        intervals (IntervalSet): The intervals built from the same jobs.

    Returns:
        JobWindows: The windows.
    """
    windows = []
    for job in jobs:
        first = bisect_left(intervals.boundaries, job.release)
        last = bisect_left(intervals.boundaries, job.deadline)
        windows.append(range(first, last))
    return JobWindows(windows, len(intervals))
