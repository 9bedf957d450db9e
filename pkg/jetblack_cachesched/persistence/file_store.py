"""File storage"""

import csv
import io
from pathlib import Path
from typing import Iterable, Union

import aiofiles

from ..evaluation import REPORT_HEADER, ComparisonReport
from ..types import ReportStore

STORE_HEADER = ['instance'] + REPORT_HEADER


class FileReportStore(ReportStore):
    """A store appending report rows to a CSV file"""

    def __init__(self, path: Union[str, Path]) -> None:
        if not isinstance(path, Path):
            path = Path(path)

        if not path.exists():
            with path.open('wt', encoding='utf8') as file_ptr:
                file_ptr.write(','.join(STORE_HEADER) + '\n')
        elif not path.is_file():
            raise RuntimeError(f'report file "{path}" is not a file.')

        self.path = path

    @staticmethod
    def _format(report: ComparisonReport) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        for row in report:
            writer.writerow([report.instance] + row.as_row())
        return buf.getvalue()

    async def save_report(self, report: ComparisonReport) -> None:
        await self.save_reports([report])

    async def save_reports(self, reports: Iterable[ComparisonReport]) -> None:
        text = ''.join(self._format(report) for report in reports)
        async with aiofiles.open(self.path, 'at', encoding='utf8') as file_ptr:
            await file_ptr.write(text)
            await file_ptr.flush()
