"""Reading and writing schedules as CSV"""

import csv
from fractions import Fraction
import io
from typing import Dict, List, Mapping, Tuple

from ..types import InstanceFormatError

from .types import Schedule, TimeSlice

SCHEDULE_HEADER = [
    'core',
    'job',
    'task',
    'start_num',
    'start_den',
    'end_num',
    'end_den',
    'interval'
]


def format_schedule_csv(
        schedule: Schedule,
        summary: Mapping[str, object]
) -> str:
    """Render a schedule with a trailing commented summary.

    The hyper-period is always part of the summary so the schedule can be
    read back.

    Args:
        schedule (Schedule): The schedule.
        summary (Mapping[str, object]): Extra summary entries, e.g. Z and
            status, written in the given order.

    Returns:
        str: The CSV text.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(SCHEDULE_HEADER)
    for s in schedule:
        writer.writerow([
            s.core,
            s.job_id,
            s.task_id,
            s.start.numerator,
            s.start.denominator,
            s.end.numerator,
            s.end.denominator,
            s.interval
        ])
    for key, value in summary.items():
        if key != 'hyper_period':
            buf.write(f'# {key}={value}\n')
    buf.write(f'# hyper_period={schedule.hyper_period}\n')
    return buf.getvalue()


def parse_schedule_csv(text: str) -> Tuple[Schedule, Dict[str, str]]:
    """Read a schedule written by format_schedule_csv.

    Args:
        text (str): The CSV text.

    Raises:
        InstanceFormatError: If the text is not a schedule export.

    Returns:
        Tuple[Schedule, Dict[str, str]]: The schedule and the summary.
    """
    rows: List[str] = []
    summary: Dict[str, str] = {}
    for line in text.splitlines():
        if line.startswith('#'):
            key, sep, value = line[1:].strip().partition('=')
            if not sep:
                raise InstanceFormatError(f'bad summary line {line!r}')
            summary[key.strip()] = value.strip()
        elif line.strip():
            rows.append(line)

    reader = csv.reader(rows)
    header = next(reader, None)
    if header != SCHEDULE_HEADER:
        raise InstanceFormatError(f'unexpected header {header}')
    if 'hyper_period' not in summary:
        raise InstanceFormatError('missing hyper_period summary')

    slices = []
    try:
        for row in reader:
            if len(row) != len(SCHEDULE_HEADER):
                raise InstanceFormatError(f'bad row {row}')
            core, job, task, start_num, start_den, end_num, end_den, k = (
                int(value) for value in row
            )
            slices.append(
                TimeSlice(
                    core,
                    job,
                    task,
                    Fraction(start_num, start_den),
                    Fraction(end_num, end_den),
                    k
                )
            )
        hyper_period = int(summary['hyper_period'])
    except (ValueError, ZeroDivisionError) as error:
        raise InstanceFormatError(f'bad schedule value: {error}') from error

    return Schedule(slices, hyper_period), summary
