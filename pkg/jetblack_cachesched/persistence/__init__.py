"""Persistence"""

from .file_store import FileReportStore
from .sql_store import SqlReportStore

__all__ = [
    'FileReportStore',
    'SqlReportStore'
]
