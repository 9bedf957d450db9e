"""Tests for the co-location objective"""

from jetblack_cachesched.solvers import (
    Assignment,
    SolverConfig,
    ideal_objective,
    objective_value,
    problem_objective
)

from ..instances import make_problem, worked_problem


def test_single_pair() -> None:
    """Test a pair counts only when it shares a cache"""
    problem = make_problem([(4, 1, 0), (4, 1, 0)], 2, 1, {(0, 1): 3})
    assert problem_objective(problem, Assignment([(0, 0, 0), (1, 0, 0)])) == 3
    assert problem_objective(problem, Assignment([(0, 0, 0), (1, 1, 0)])) == 0
    assert problem_objective(problem, Assignment()) == 0


def test_worked_instance() -> None:
    """Test everything on one cache captures every pair"""
    problem = worked_problem()
    assignment = Assignment(
        (i, 0, k)
        for k in range(len(problem.intervals))
        for i in problem.windows.jobs_on(k)
    )
    assert problem_objective(problem, assignment) == 8
    assert ideal_objective(problem) == 8

    weighted = SolverConfig(weight_by_interval=True)
    assert problem_objective(problem, assignment, weighted) == 32
    assert ideal_objective(problem, True) == 32


def test_same_task_jobs_do_not_count() -> None:
    """Test two jobs of one task never add affinity"""
    problem = make_problem([(2, 1, 0), (4, 1, 0)], 1, 1, {(0, 1): 2})
    # jobs: T1@0, T2@0, T1@2 and T2 spans both intervals
    assignment = Assignment([(0, 0, 0), (1, 0, 0), (1, 0, 1), (2, 0, 1)])
    assert problem_objective(problem, assignment) == 4
    assert problem.affinity_of(0, 2) == 0


def test_assignment_views() -> None:
    """Test the lookups of an assignment"""
    assignment = Assignment.from_mapping({(0, 0): 1, (1, 0): 1, (2, 1): 0})
    assert assignment.cache_of(0, 0) == 1
    assert assignment.cache_of(0, 1) is None
    assert assignment.jobs_on(1, 0) == (0, 1)
    assert list(assignment.groups()) == [(0, 1, (2,)), (1, 0, (0, 1))]
    assert assignment.without([(0, 0)]) == Assignment([(1, 1, 0), (2, 0, 1)])
    assert assignment.relabeled({0: 1, 1: 0}).cache_of(0, 0) == 0


def test_objective_value_from_parts() -> None:
    """Test the objective from its parts matches the problem objective"""
    problem = worked_problem()
    assignment = Assignment([(0, 0, 0), (1, 0, 0), (2, 1, 0), (3, 1, 1)])
    assert objective_value(
        assignment,
        problem.affinity,
        problem.jobs,
        problem.intervals
    ) == problem_objective(problem, assignment) == 3
    assert objective_value(
        assignment,
        problem.affinity,
        problem.jobs,
        problem.intervals,
        SolverConfig(weight_by_interval=True)
    ) == 12
