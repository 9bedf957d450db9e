"""Assignment checks"""

from collections import defaultdict
from typing import DefaultDict, Sequence, Tuple

from ..lp import Number, WeightMatrix, check_weights
from ..tasks import IntervalSet, Job, JobWindows, TaskSet
from ..types import Violation, ViolationReport

from .types import Assignment, LinkMode, SolverConfig


def check_assignment(
        assignment: Assignment,
        weights: WeightMatrix,
        jobs: Sequence[Job],
        intervals: IntervalSet,
        windows: JobWindows,
        task_set: TaskSet,
        config: SolverConfig
) -> ViolationReport:
    """Check cache capacity, single cache assignment, the weight link,
    per-core interval capacity and the temporal constraints.

    Args:
        assignment (Assignment): The assignment.
        weights (WeightMatrix): The weights.
        jobs (Sequence[Job]): The jobs.
        intervals (IntervalSet): The intervals.
        windows (JobWindows): The job windows.
        task_set (TaskSet): The task set.
        config (SolverConfig): The configuration holding the link policy
            and tolerance.

    Returns:
        ViolationReport: The violations, empty if the pair is feasible.
    """
    tolerance = config.check_tolerance
    report: ViolationReport = []
    cache_wss: DefaultDict[Tuple[int, int], int] = defaultdict(int)
    core_load: DefaultDict[Tuple[int, int], Number] = defaultdict(int)

    for i, j, k in assignment:
        if not 0 <= i < len(jobs) or k not in windows[i]:
            report.append(Violation(
                'window',
                (i, j, k),
                1.0,
                f'job {i} is assigned outside its window on interval {k}'
            ))
            continue
        if not 0 <= j < task_set.core_count:
            report.append(Violation(
                'cache',
                (i, j, k),
                1.0,
                f'job {i} is assigned to unknown cache {j}'
            ))
            continue
        cache_wss[(j, k)] += task_set[jobs[i].task_id].wss
        core_load[(j, k)] += weights[(i, k)]

    for (j, k), wss in sorted(cache_wss.items()):
        if wss > task_set.cache_capacity:
            report.append(Violation(
                'eq4',
                (j, k),
                float(wss - task_set.cache_capacity),
                f'cache {j} holds {wss} bytes on interval {k}, capacity '
                f'{task_set.cache_capacity}'
            ))

    for (j, k), load in sorted(core_load.items()):
        if load > 1 + tolerance:
            report.append(Violation(
                'core',
                (j, k),
                float(load - 1),
                f'core {j} is loaded {float(load):g} on interval {k}'
            ))

    policy = config.link_policy
    for i, k in windows.slots():
        caches = assignment.caches_of(i, k)
        if len(caches) > 1:
            report.append(Violation(
                'eq5',
                (i, k),
                float(len(caches) - 1),
                f'job {i} is assigned to caches {list(caches)} on interval {k}'
            ))
        weight = weights[(i, k)]
        if not caches and weight > tolerance:
            report.append(Violation(
                'link',
                (i, k),
                float(weight),
                f'job {i} runs on interval {k} without a cache'
            ))
        if (
                caches and
                policy.mode == LinkMode.EPSILON and
                weight < policy.epsilon - tolerance
        ):
            report.append(Violation(
                'link',
                (i, k),
                float(policy.epsilon - weight),
                f'job {i} is assigned on interval {k} with weight '
                f'{float(weight):g} below epsilon'
            ))

    report.extend(
        check_weights(
            weights,
            jobs,
            intervals,
            task_set.core_count,
            tolerance
        )
    )
    return report
