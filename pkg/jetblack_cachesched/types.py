"""Types"""

from abc import ABCMeta, abstractmethod
from typing import TYPE_CHECKING, Any, Iterable, List, NamedTuple, Optional

if TYPE_CHECKING:
    from .evaluation.types import ComparisonReport


class Violation(NamedTuple):
    """A single failed constraint in a violation report.

    Attributes:
        rule (str): The rule that failed, e.g. 'eq1' or 'overlap'.
        index (Any): The index the rule was evaluated at.
        slack (float): How far the constraint is violated.
        message (str): A human readable description.
    """
    rule: str
    index: Any
    slack: float
    message: str

    def __str__(self) -> str:
        return f'{self.rule}{self.index}: {self.message} (slack={self.slack:g})'


ViolationReport = List[Violation]


class CacheSchedError(Exception):
    """The base class for all errors raised by the package"""


class InstanceFormatError(CacheSchedError):
    """An instance document could not be read or parsed"""


class ValidationError(CacheSchedError):
    """An instance failed one or more validation rules"""

    def __init__(
            self,
            diagnostics: Iterable[str],
            message: Optional[str] = None
    ) -> None:
        self.diagnostics = list(diagnostics)
        super().__init__(message or '; '.join(self.diagnostics))


class HyperPeriodOverflowError(ValidationError):
    """The hyper-period exceeds the configured guard"""


class InfeasibleError(CacheSchedError):
    """No assignment satisfies the constraints"""


class GuardError(CacheSchedError):
    """A configured size guard was exceeded"""


class ModelTooLargeError(GuardError):
    """The linearized model has more variables than allowed"""


class SearchSpaceTooLargeError(GuardError):
    """The exhaustive search space is larger than allowed"""


class OverloadError(CacheSchedError):
    """A core was given more than its capacity within an interval"""


class ReportStore(metaclass=ABCMeta):
    """The abstract class for comparison report stores"""

    @abstractmethod
    async def save_report(self, report: 'ComparisonReport') -> None:
        """Save a comparison report.

        Args:
            report (ComparisonReport): The report.
        """

    @abstractmethod
    async def save_reports(self, reports: Iterable['ComparisonReport']) -> None:
        """Save several reports, in order.

        Args:
            reports (Iterable[ComparisonReport]): The reports.
        """
