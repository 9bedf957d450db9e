"""A sqlite3 store"""

import sqlite3
from typing import Any, Iterable, List, Mapping, Tuple

import aiosqlite

from ..evaluation import ComparisonReport
from ..types import ReportStore

CREATE_REPORT_TABLE_SQL = """
CREATE TABLE IF NOT EXISTS method_reports
(
    instance VARCHAR(64) NOT NULL,
    method VARCHAR(16) NOT NULL,
    status VARCHAR(16) NOT NULL,
    objective INT NULL,
    bound REAL NULL,
    gap REAL NULL,
    runtime_ms REAL NOT NULL,
    migrations INT NULL,
    capture_ratio REAL NULL,
    peak_wss INT NULL,
    violations INT NOT NULL,
    error VARCHAR(1024) NULL,
    PRIMARY KEY (instance, method)
)
"""

REPORT_INSERT = """
INSERT OR REPLACE INTO method_reports(instance, method, status, objective, bound, gap, runtime_ms, migrations, capture_ratio, peak_wss, violations, error)
VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
"""

REPORT_QUERY = """
SELECT instance, method, status, objective
FROM method_reports
ORDER BY instance, method
"""


class SqlReportStore(ReportStore):
    """A report store backed by sqlite"""

    def __init__(
            self,
            conn_args: List[Any],
            conn_kwargs: Mapping[str, Any]
    ) -> None:
        self.conn_args = conn_args
        self.conn_kwargs = conn_kwargs
        conn = sqlite3.connect(*self.conn_args, **self.conn_kwargs)
        cursor = conn.cursor()
        cursor.execute(CREATE_REPORT_TABLE_SQL)
        conn.commit()
        conn.close()

    async def save_report(self, report: ComparisonReport) -> None:
        await self.save_reports([report])

    async def save_reports(self, reports: Iterable[ComparisonReport]) -> None:
        async with aiosqlite.connect(*self.conn_args, **self.conn_kwargs) as db:
            for report in reports:
                await db.executemany(
                    REPORT_INSERT,
                    [
                        (report.instance, *row)
                        for row in report
                    ]
                )
            await db.commit()

    async def summary(self) -> List[Tuple[str, str, str, Any]]:
        """The (instance, method, status, objective) of every saved row"""
        async with aiosqlite.connect(*self.conn_args, **self.conn_kwargs) as db:
            async with db.execute(REPORT_QUERY) as cursor:
                return [tuple(row) for row in await cursor.fetchall()]  # type: ignore
