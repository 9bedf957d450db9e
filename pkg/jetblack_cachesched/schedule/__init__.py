"""Time-sliced schedules"""

from .builder import (
    build_schedule,
    count_migrations,
    count_preemptions,
    schedule_metrics,
    validate_schedule
)
from .export import SCHEDULE_HEADER, format_schedule_csv, parse_schedule_csv
from .types import Schedule, TimeSlice

__all__ = [
    'build_schedule',
    'count_migrations',
    'count_preemptions',
    'schedule_metrics',
    'validate_schedule',

    'SCHEDULE_HEADER',
    'format_schedule_csv',
    'parse_schedule_csv',

    'Schedule',
    'TimeSlice'
]
