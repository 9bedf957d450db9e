"""Task model"""

from .intervals import (
    build_intervals,
    generate_jobs,
    hyper_period,
    job_windows
)
from .types import (
    DEFAULT_HYPER_PERIOD_GUARD,
    IntervalSet,
    Job,
    JobWindows,
    Task,
    TaskSet
)
from .validation import ensure_valid, validate_task_set

__all__ = [
    'build_intervals',
    'generate_jobs',
    'hyper_period',
    'job_windows',

    'DEFAULT_HYPER_PERIOD_GUARD',
    'IntervalSet',
    'Job',
    'JobWindows',
    'Task',
    'TaskSet',

    'ensure_valid',
    'validate_task_set'
]
