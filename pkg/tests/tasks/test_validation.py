"""Tests for task set validation"""

import pytest

from jetblack_cachesched.tasks import Task, TaskSet, ensure_valid, validate_task_set
from jetblack_cachesched.types import ValidationError

from ..instances import make_task_set


def test_valid_task_set() -> None:
    """Test a well formed set has no diagnostics, even when overloaded"""
    assert not validate_task_set(
        make_task_set([(4, 2, 8192), (4, 1, 4096)], 2, 16384)
    )
    assert not validate_task_set(
        make_task_set([(2, 2, 0), (2, 2, 0)], 1, 1)
    )


def test_invalid_task_set() -> None:
    """Test one diagnostic per failed rule"""
    diagnostics = validate_task_set(
        make_task_set([(4, 5, 0), (4, 1, 16385)], 1, 16384)
    )
    assert len(diagnostics) == 2
    assert "task 'T1'" in diagnostics[0] and 'exceeds period' in diagnostics[0]
    assert "task 'T2'" in diagnostics[1] and 'l1 capacity' in diagnostics[1]


def test_invalid_platform() -> None:
    """Test the platform is checked"""
    diagnostics = validate_task_set(make_task_set([(4, 1, 0)], 0, 0))
    assert len(diagnostics) == 2


def test_bad_ids_and_zero_wcet() -> None:
    """Test task ids must be positional and wcet positive"""
    task_set = TaskSet((Task(1, 'A', 4, 0),), 1, 1)
    diagnostics = validate_task_set(task_set)
    assert any('id 1 should be 0' in line for line in diagnostics)
    assert any('wcet 0 must be >= 1' in line for line in diagnostics)


def test_ensure_valid() -> None:
    """Test the diagnostics are raised together"""
    with pytest.raises(ValidationError) as error:
        ensure_valid(make_task_set([], 1, 1))
    assert error.value.diagnostics == ['no tasks']

    with pytest.raises(ValidationError) as error:
        ensure_valid(
            make_task_set([(7, 1, 0), (11, 1, 0)], 1, 1),
            guard=50
        )
    assert 'hyper-period exceeds 50' in error.value.diagnostics[0]
