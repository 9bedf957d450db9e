"""Command line types"""

from enum import IntEnum

from ..solvers import SolveStatus
from ..types import (
    GuardError,
    InfeasibleError,
    InstanceFormatError,
    ValidationError
)


class ExitCode(IntEnum):
    """Process exit codes"""
    OK = 0
    FORMAT = 1
    VALIDATION = 2
    INFEASIBLE = 3
    LIMIT = 4
    GUARD = 5
    USAGE = 64

    @classmethod
    def from_status(cls, status: SolveStatus) -> 'ExitCode':
        """The exit code of a solve outcome"""
        if status == SolveStatus.INFEASIBLE:
            return cls.INFEASIBLE
        elif status == SolveStatus.LIMIT_REACHED:
            return cls.LIMIT
        return cls.OK

    @classmethod
    def from_error(cls, error: Exception) -> 'ExitCode':
        """The exit code of an error"""
        if isinstance(error, ValidationError):
            return cls.VALIDATION
        elif isinstance(error, GuardError):
            return cls.GUARD
        elif isinstance(error, InfeasibleError):
            return cls.INFEASIBLE
        elif isinstance(error, (InstanceFormatError, OSError)):
            return cls.FORMAT
        raise error
