"""Tests for the schedule CSV export"""

from fractions import Fraction

import pytest

from jetblack_cachesched.schedule import (
    SCHEDULE_HEADER,
    Schedule,
    TimeSlice,
    build_schedule,
    format_schedule_csv,
    parse_schedule_csv,
    validate_schedule
)
from jetblack_cachesched.solvers import SolverConfig, solve
from jetblack_cachesched.types import InstanceFormatError

from ..instances import small_problem


def test_format_schedule() -> None:
    """Test the rows, their order and the trailing summary"""
    schedule = Schedule(
        [
            TimeSlice(1, 2, 1, Fraction(0), Fraction(1, 3), 0),
            TimeSlice(0, 0, 0, Fraction(2), Fraction(4), 0),
            TimeSlice(0, 1, 0, Fraction(0), Fraction(2), 0)
        ],
        4
    )
    text = format_schedule_csv(schedule, {'Z': 8, 'status': 'optimal'})
    assert text == (
        'core,job,task,start_num,start_den,end_num,end_den,interval\n'
        '0,1,0,0,1,2,1,0\n'
        '0,0,0,2,1,4,1,0\n'
        '1,2,1,0,1,1,3,0\n'
        '# Z=8\n'
        '# status=optimal\n'
        '# hyper_period=4\n'
    )

    parsed, summary = parse_schedule_csv(text)
    assert parsed == schedule
    assert summary == {'Z': '8', 'status': 'optimal', 'hyper_period': '4'}


def test_parse_errors() -> None:
    """Test text that is not a schedule export is rejected"""
    header = ','.join(SCHEDULE_HEADER)
    with pytest.raises(InstanceFormatError):
        parse_schedule_csv('a,b,c\n# hyper_period=4\n')
    with pytest.raises(InstanceFormatError):
        parse_schedule_csv(f'{header}\n')
    with pytest.raises(InstanceFormatError):
        parse_schedule_csv(f'{header}\n0,0,0,0,1\n# hyper_period=4\n')
    with pytest.raises(InstanceFormatError):
        parse_schedule_csv(f'{header}\n0,0,0,0,0,1,1,0\n# hyper_period=4\n')
    with pytest.raises(InstanceFormatError):
        parse_schedule_csv(f'{header}\n# no summary\n')


@pytest.mark.parametrize('seed', range(60))
def test_solved_schedules_read_back(seed: int) -> None:
    """Test a solved instance's schedule survives export and stays valid"""
    problem = small_problem(seed)
    result = solve(problem, SolverConfig())
    if result.assignment is None or result.weights is None:
        return
    schedule = build_schedule(
        result.assignment,
        result.weights,
        problem.jobs,
        problem.intervals
    )
    text = format_schedule_csv(
        schedule,
        {'Z': result.objective, 'status': result.status.value}
    )
    parsed, summary = parse_schedule_csv(text)

    assert parsed == schedule
    assert summary['Z'] == str(result.objective)
    assert int(summary['hyper_period']) == problem.intervals.hyper_period
    assert validate_schedule(parsed, problem.task_set, problem.jobs) == []
