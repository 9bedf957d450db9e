"""Task set validation"""

from typing import List

from ..types import ValidationError

from .intervals import hyper_period
from .types import DEFAULT_HYPER_PERIOD_GUARD, TaskSet


def validate_task_set(
        task_set: TaskSet,
        guard: int = DEFAULT_HYPER_PERIOD_GUARD
) -> List[str]:
    """Check a task set against the task model rules.

    Utilization is not checked here; a set with U > m is well formed but
    infeasible.

    Args:
        task_set (TaskSet): The task set.
        guard (int, optional): The hyper-period guard.

    Returns:
        List[str]: One diagnostic per failed rule, empty if valid.
    """
    diagnostics: List[str] = []
    if not task_set.tasks:
        diagnostics.append('no tasks')
    if task_set.core_count < 1:
        diagnostics.append(
            f'platform: cores {task_set.core_count} must be >= 1'
        )
    if task_set.cache_capacity < 1:
        diagnostics.append(
            f'platform: l1 capacity {task_set.cache_capacity} must be >= 1'
        )

    for expected_id, task in enumerate(task_set.tasks):
        if task.id != expected_id:
            diagnostics.append(
                f'task {task.name!r}: id {task.id} should be {expected_id}'
            )
        if task.period < 1:
            diagnostics.append(
                f'task {task.name!r}: period {task.period} must be >= 1'
            )
        if task.wcet < 1:
            diagnostics.append(
                f'task {task.name!r}: wcet {task.wcet} must be >= 1'
            )
        if task.wcet > task.period:
            diagnostics.append(
                f'task {task.name!r}: wcet {task.wcet} exceeds '
                f'period {task.period}'
            )
        if task.wss < 0:
            diagnostics.append(
                f'task {task.name!r}: wss {task.wss} must be >= 0'
            )
        if task.wss > task_set.cache_capacity:
            diagnostics.append(
                f'task {task.name!r}: wss {task.wss} exceeds l1 capacity '
                f'{task_set.cache_capacity}'
            )

    if task_set.tasks and all(task.period >= 1 for task in task_set.tasks):
        try:
            hyper_period(task_set, guard)
        except ValidationError as error:
            diagnostics.extend(error.diagnostics)

    return diagnostics


def ensure_valid(
        task_set: TaskSet,
        guard: int = DEFAULT_HYPER_PERIOD_GUARD
) -> None:
    """Raise if the task set is not valid.

    Raises:
        ValidationError: With every diagnostic found.
    """
    diagnostics = validate_task_set(task_set, guard)
    if diagnostics:
        raise ValidationError(diagnostics)
