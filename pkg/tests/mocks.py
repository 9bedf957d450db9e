"""Mocks"""

from typing import Iterable, List

from jetblack_cachesched import ReportStore
from jetblack_cachesched.evaluation import ComparisonReport
from jetblack_cachesched.time_provider import TimeProvider


class MockTimeProvider(TimeProvider):
    """A clock that advances by a fixed step every time it is read"""

    def __init__(self, start: float = 0.0, step: float = 0.0) -> None:
        super().__init__()
        self.timestamp = start
        self.step = step

    def now(self) -> float:
        timestamp = self.timestamp
        self.timestamp += self.step
        return timestamp


class MockReportStore(ReportStore):
    """A store keeping reports in memory"""

    def __init__(self) -> None:
        self.reports: List[ComparisonReport] = []

    async def save_report(self, report: ComparisonReport) -> None:
        self.reports.append(report)

    async def save_reports(self, reports: Iterable[ComparisonReport]) -> None:
        self.reports.extend(reports)
