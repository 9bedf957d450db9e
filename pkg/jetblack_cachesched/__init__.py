"""jetblack_cachesched"""

from .affinity import AffinityMatrix, CommunicationFlow, DataSection
from .cli import format_instance, load_instance, parse_instance
from .evaluation import GeneratorSpec, Instance, compare_solvers, generate_task_set
from .persistence import FileReportStore, SqlReportStore
from .schedule import Schedule, build_schedule, validate_schedule
from .solvers import (
    LinkMode,
    LinkPolicy,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod,
    build_problem,
    solve
)
from .tasks import Task, TaskSet
from .types import (
    CacheSchedError,
    GuardError,
    InstanceFormatError,
    ReportStore,
    ValidationError
)

__all__ = [
    'AffinityMatrix',
    'CommunicationFlow',
    'DataSection',

    'format_instance',
    'load_instance',
    'parse_instance',

    'GeneratorSpec',
    'Instance',
    'compare_solvers',
    'generate_task_set',

    'FileReportStore',
    'SqlReportStore',

    'Schedule',
    'build_schedule',
    'validate_schedule',

    'LinkMode',
    'LinkPolicy',
    'SolveResult',
    'SolveStatus',
    'SolverConfig',
    'SolverMethod',
    'build_problem',
    'solve',

    'Task',
    'TaskSet',

    'CacheSchedError',
    'GuardError',
    'InstanceFormatError',
    'ReportStore',
    'ValidationError'
]
