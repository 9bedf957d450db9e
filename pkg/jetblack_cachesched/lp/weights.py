"""The temporal weight program: interval capacity, weight bounds and job
completion"""

from fractions import Fraction
import logging
from typing import Dict, Sequence

from ..tasks import IntervalSet, Job, JobWindows, job_windows
from ..types import Violation, ViolationReport

from .types import (
    DEFAULT_CHECK_TOLERANCE,
    LinearProgram,
    Number,
    Relation,
    Sense,
    WeightMatrix
)

LOGGER = logging.getLogger(__name__)


def add_weight_variables(
        lp: LinearProgram,
        jobs: Sequence[Job],
        windows: JobWindows
) -> Dict[tuple, int]:
    """Add one weight variable in [0, 1] per (job, interval) slot.

    Returns:
        Dict[tuple, int]: The variable index of each slot.
    """
    index = {}
    for job in jobs:
        for k in windows[job.job_id]:
            index[(job.job_id, k)] = lp.add_variable(
                ('w', job.job_id, k),
                0,
                1
            )
    return index


def add_weight_rows(
        lp: LinearProgram,
        jobs: Sequence[Job],
        intervals: IntervalSet,
        windows: JobWindows,
        core_count: int,
        index: Dict[tuple, int]
) -> None:
    """Add the interval capacity and job completion rows"""
    for k in range(len(intervals)):
        lp.add_row(
            {index[(i, k)]: 1 for i in windows.jobs_on(k)},
            Relation.LE,
            core_count,
            ('eq1', k)
        )
    for job in jobs:
        lp.add_row(
            {
                index[(job.job_id, k)]: intervals.durations[k]
                for k in windows[job.job_id]
            },
            Relation.EQ,
            job.wcet,
            ('eq3', job.job_id)
        )


def build_weight_lp(
        jobs: Sequence[Job],
        intervals: IntervalSet,
        windows: JobWindows,
        core_count: int
) -> LinearProgram:
    """Build the feasibility program for the job weights.

    Args:
        jobs (Sequence[Job]): The jobs.
        intervals (IntervalSet): The intervals.
        windows (JobWindows): The job windows.
        core_count (int): The number of cores.

    Returns:
        LinearProgram: A program with a constant objective.
    """
    lp = LinearProgram(Sense.MAXIMIZE)
    index = add_weight_variables(lp, jobs, windows)
    add_weight_rows(lp, jobs, intervals, windows, core_count, index)
    return lp


def weights_from_values(
        lp: LinearProgram,
        values: Sequence[Number]
) -> WeightMatrix:
    """Extract the weight matrix from a solved program's values"""
    return WeightMatrix({
        (label[1], label[2]): values[index]
        for index, label in enumerate(lp.labels)
        if isinstance(label, tuple) and label[0] == 'w' and len(label) == 3
    })


def fluid_weights(jobs: Sequence[Job], windows: JobWindows) -> WeightMatrix:
    """The constant rate weights C/P on every interval of each window.

    Args:
        jobs (Sequence[Job]): The jobs.
        windows (JobWindows): The windows.

    Returns:
        WeightMatrix: Exact rational weights.
    """
    return WeightMatrix({
        (job.job_id, k): Fraction(job.wcet, job.period)
        for job in jobs
        for k in windows[job.job_id]
    })


def check_weights(
        weights: WeightMatrix,
        jobs: Sequence[Job],
        intervals: IntervalSet,
        core_count: int,
        tolerance: float = DEFAULT_CHECK_TOLERANCE
) -> ViolationReport:
    """Check the weight bounds, interval capacity and job completion.

    Args:
        weights (WeightMatrix): The weights.
        jobs (Sequence[Job]): The jobs.
        intervals (IntervalSet): The intervals.
        core_count (int): The number of cores.
        tolerance (float, optional): The absolute tolerance. Defaults to
            1e-6.

    Returns:
        ViolationReport: The violations, empty if all hold.
    """
    windows = job_windows(jobs, intervals)
    report: ViolationReport = []

    for (i, k), value in weights.items():
        if not 0 <= i < len(jobs) or k not in windows[i]:
            if value != 0:
                report.append(Violation(
                    'window',
                    (i, k),
                    float(abs(value)),
                    f'job {i} has weight outside its window on interval {k}'
                ))
            continue
        if value < -tolerance or value > 1 + tolerance:
            report.append(Violation(
                'eq2',
                (i, k),
                float(max(-value, value - 1)),
                f'weight {float(value):g} of job {i} outside [0, 1]'
            ))

    for k in range(len(intervals)):
        total = sum(weights[(i, k)] for i in windows.jobs_on(k))
        if total > core_count + tolerance:
            report.append(Violation(
                'eq1',
                (k,),
                float(total - core_count),
                f'interval {k} weights sum to {float(total):g} > {core_count}'
            ))

    for job in jobs:
        executed = sum(
            weights[(job.job_id, k)] * intervals.durations[k]
            for k in windows[job.job_id]
        )
        if abs(executed - job.wcet) > tolerance:
            report.append(Violation(
                'eq3',
                (job.job_id,),
                float(abs(executed - job.wcet)),
                f'job {job.job_id} executes {float(executed):g} '
                f'instead of {job.wcet}'
            ))

    return report
