"""Building and checking time-sliced schedules"""

from collections import defaultdict
from fractions import Fraction
import logging
from typing import Callable, DefaultDict, Dict, List, Sequence, Tuple

from ..lp import Number, WeightMatrix
from ..solvers import Assignment
from ..tasks import IntervalSet, Job, TaskSet
from ..types import OverloadError, Violation, ViolationReport

from .types import Schedule, TimeSlice

LOGGER = logging.getLogger(__name__)

OVERLOAD_TOLERANCE = Fraction(1, 10 ** 9)


def _exact(value: Number) -> Fraction:
    return Fraction(value)


def build_schedule(
        assignment: Assignment,
        weights: WeightMatrix,
        jobs: Sequence[Job],
        intervals: IntervalSet
) -> Schedule:
    """Lay out the jobs of each core and interval back to back.

    Within each (core, interval) the assigned jobs run from the start of
    the interval in ascending job order, each for its weight times the
    interval length. Jobs with zero weight get no slice.

    Args:
        assignment (Assignment): The cache assignment.
        weights (WeightMatrix): The weights.
        jobs (Sequence[Job]): The jobs.
        intervals (IntervalSet): The intervals.

    Raises:
        OverloadError: If the weights on a core and interval sum to more
            than one.

    Returns:
        Schedule: The schedule.
    """
    slices: List[TimeSlice] = []
    for core, k, members in assignment.groups():
        total = sum((_exact(weights[(i, k)]) for i in members), Fraction(0))
        if total > 1 + OVERLOAD_TOLERANCE:
            raise OverloadError(
                f'core {core} is loaded {float(total):g} on interval {k}'
            )
        cursor = Fraction(intervals.start(k))
        for i in members:
            length = _exact(weights[(i, k)]) * intervals.durations[k]
            if length <= 0:
                continue
            slices.append(
                TimeSlice(core, i, jobs[i].task_id, cursor, cursor + length, k)
            )
            cursor += length
    schedule = Schedule(slices, intervals.hyper_period)
    LOGGER.debug('built %r', schedule)
    return schedule


def _cores_by_interval(schedule: Schedule) -> Dict[int, Dict[int, int]]:
    cores: Dict[int, Dict[int, int]] = defaultdict(dict)
    for s in schedule:
        cores[s.job_id][s.interval] = s.core
    return cores


def count_migrations(schedule: Schedule) -> int:
    """The number of times a job runs on different cores in two adjacent
    intervals.

    Only pairs of intervals k and k + 1 in which the job executes in both
    are compared; a job idle on an interval between two cores is not
    counted as migrating.
    """
    migrations = 0
    for by_interval in _cores_by_interval(schedule).values():
        migrations += sum(
            1 for k, core in by_interval.items()
            if k + 1 in by_interval and by_interval[k + 1] != core
        )
    return migrations


def count_preemptions(schedule: Schedule) -> int:
    """The number of times a job stops before it has finished.

    Two consecutive slices of a job count once unless the second starts
    where the first ends on the same core.
    """
    preemptions = 0
    for job_id in schedule.job_ids():
        slices = schedule.slices_of(job_id)
        preemptions += sum(
            1 for before, after in zip(slices, slices[1:])
            if before.end != after.start or before.core != after.core
        )
    return preemptions


def validate_schedule(
        schedule: Schedule,
        task_set: TaskSet,
        jobs: Sequence[Job]
) -> ViolationReport:
    """Check a schedule end to end.

    Every job must execute exactly its WCET inside [release, deadline), no
    two slices may overlap on a core and no job may run on two cores at
    once.

    Args:
        schedule (Schedule): The schedule.
        task_set (TaskSet): The task set.
        jobs (Sequence[Job]): The jobs.

    Returns:
        ViolationReport: The violations, empty if the schedule is valid.
    """
    report: ViolationReport = []
    executed: DefaultDict[int, Fraction] = defaultdict(Fraction)
    by_core: DefaultDict[int, List[TimeSlice]] = defaultdict(list)

    for s in schedule:
        if s.start >= s.end:
            report.append(Violation(
                'slice',
                (s.core, s.job_id),
                float(s.start - s.end),
                f'slice of job {s.job_id} on core {s.core} is empty'
            ))
            continue
        if not 0 <= s.job_id < len(jobs):
            report.append(Violation(
                'job',
                (s.job_id,),
                float(s.duration),
                f'unknown job {s.job_id}'
            ))
            continue
        job = jobs[s.job_id]
        if s.task_id != job.task_id or not 0 <= s.task_id < len(task_set):
            report.append(Violation(
                'task',
                (s.job_id,),
                float(s.duration),
                f'job {s.job_id} belongs to task {job.task_id}, '
                f'not {s.task_id}'
            ))
        if not 0 <= s.core < task_set.core_count:
            report.append(Violation(
                'core',
                (s.core,),
                float(s.duration),
                f'slice of job {s.job_id} on unknown core {s.core}'
            ))
        if s.start < job.release or s.end > job.deadline:
            report.append(Violation(
                'window',
                (s.job_id,),
                float(max(job.release - s.start, s.end - job.deadline)),
                f'job {s.job_id} runs over [{s.start}, {s.end}) outside '
                f'[{job.release}, {job.deadline})'
            ))
        executed[s.job_id] += s.duration
        by_core[s.core].append(s)

    for core, slices in sorted(by_core.items()):
        report.extend(_overlaps(
            'overlap',
            slices,
            lambda first, second: f'core {core} runs jobs {first.job_id} '
            f'and {second.job_id} at {second.start}'
        ))

    for job in jobs:
        if executed[job.job_id] != job.wcet:
            report.append(Violation(
                'execution',
                (job.job_id,),
                float(abs(executed[job.job_id] - job.wcet)),
                f'job {job.job_id} executes {executed[job.job_id]} '
                f'instead of {job.wcet}'
            ))
        report.extend(_overlaps(
            'parallel',
            schedule.slices_of(job.job_id),
            lambda first, second: f'job {first.job_id} runs on cores '
            f'{first.core} and {second.core} at {second.start}'
        ))

    return report


def _overlaps(
        rule: str,
        slices: Sequence[TimeSlice],
        describe: Callable[[TimeSlice, TimeSlice], str]
) -> ViolationReport:
    report: ViolationReport = []
    ordered = sorted(slices, key=lambda s: (s.start, s.end))
    for first, second in zip(ordered, ordered[1:]):
        if second.start < first.end:
            report.append(Violation(
                rule,
                (first.job_id, second.job_id),
                float(first.end - second.start),
                describe(first, second)
            ))
    return report


def schedule_metrics(schedule: Schedule) -> Tuple[int, int]:
    """The migrations and preemptions of a schedule"""
    return count_migrations(schedule), count_preemptions(schedule)
