"""Tests for hyper-periods, jobs and intervals"""

import pytest

from jetblack_cachesched.tasks import (
    IntervalSet,
    build_intervals,
    generate_jobs,
    hyper_period,
    job_windows
)
from jetblack_cachesched.types import HyperPeriodOverflowError, ValidationError

from ..instances import make_task_set


def test_hyper_period() -> None:
    """Test the hyper-period is the lcm of the periods"""
    assert hyper_period(make_task_set([(4, 1, 0), (6, 1, 0)], 1, 1)) == 12
    assert hyper_period(make_task_set([(5, 1, 0)], 1, 1)) == 5
    assert hyper_period(
        make_task_set([(2, 1, 0), (3, 1, 0), (5, 1, 0)], 1, 1)
    ) == 30


def test_hyper_period_guard() -> None:
    """Test the guard stops the lcm before it overflows"""
    task_set = make_task_set([(7, 1, 0), (11, 1, 0), (13, 1, 0)], 1, 1)
    with pytest.raises(HyperPeriodOverflowError) as error:
        hyper_period(task_set, guard=100)
    assert '[7, 11, 13]' in error.value.diagnostics[0]
    assert hyper_period(task_set, guard=1001) == 1001


def test_hyper_period_no_tasks() -> None:
    """Test an empty task set has no hyper-period"""
    with pytest.raises(ValidationError):
        hyper_period(make_task_set([], 1, 1))


def test_generate_jobs() -> None:
    """Test jobs are released periodically and ordered by release"""
    task_set = make_task_set([(4, 2, 0), (6, 1, 0)], 1, 1)
    jobs = generate_jobs(task_set)
    assert [(job.release, job.task_id) for job in jobs] == [
        (0, 0), (0, 1), (4, 0), (6, 1), (8, 0)
    ]
    assert [job.job_id for job in jobs] == list(range(5))
    assert jobs[2].deadline == 8
    assert jobs[3].period == 6

    single = generate_jobs(make_task_set([(4, 2, 0)], 1, 1))
    assert len(single) == 1

    jobs = generate_jobs(make_task_set([(4, 2, 0), (8, 2, 0)], 1, 1))
    assert len(jobs) == 3


def test_build_intervals() -> None:
    """Test the hyper-period is cut at every release"""
    task_set = make_task_set([(4, 1, 0), (6, 1, 0)], 1, 1)
    intervals = build_intervals(task_set, generate_jobs(task_set))
    assert intervals == IntervalSet([0, 4, 6, 8, 12])
    assert list(intervals) == [(0, 4), (4, 6), (6, 8), (8, 12)]
    assert intervals.durations == (4, 2, 2, 4)
    assert intervals.hyper_period == 12
    assert intervals.index_of(6) == 2
    with pytest.raises(ValueError):
        intervals.index_of(5)

    task_set = make_task_set([(5, 1, 0)], 1, 1)
    assert list(build_intervals(task_set, generate_jobs(task_set))) == [(0, 5)]


def test_build_intervals_horizon() -> None:
    """Test the horizon comes from the jobs and the guard applies without
    them"""
    task_set = make_task_set([(4, 1, 0), (6, 1, 0)], 1, 1)
    jobs = generate_jobs(task_set, 12)
    assert build_intervals(task_set, jobs, 12).hyper_period == 12
    assert build_intervals(task_set, jobs, 1).hyper_period == 12
    with pytest.raises(HyperPeriodOverflowError):
        build_intervals(task_set, [], 11)


def test_job_windows() -> None:
    """Test windows are half open runs of intervals"""
    task_set = make_task_set([(4, 1, 0), (8, 1, 0)], 1, 1)
    jobs = generate_jobs(task_set)
    intervals = build_intervals(task_set, jobs)
    windows = job_windows(jobs, intervals)

    assert list(intervals) == [(0, 4), (4, 8)]
    # jobs: T1@0, T2@0, T1@4
    assert list(windows[0]) == [0]
    assert list(windows[1]) == [0, 1]
    assert list(windows[2]) == [1]
    assert windows.jobs_on(0) == (0, 1)
    assert windows.jobs_on(1) == (1, 2)
    assert windows.slot_count == 4
    assert list(windows.slots()) == [(0, 0), (1, 0), (1, 1), (2, 1)]


def test_windows_cover_the_hyper_period() -> None:
    """Test every job's window spans exactly its release to its deadline"""
    task_set = make_task_set([(3, 1, 0), (4, 1, 0), (6, 2, 0)], 2, 1)
    jobs = generate_jobs(task_set)
    intervals = build_intervals(task_set, jobs)
    windows = job_windows(jobs, intervals)
    for job in jobs:
        window = windows[job.job_id]
        assert intervals.start(window[0]) == job.release
        assert intervals.end(window[-1]) == job.deadline
