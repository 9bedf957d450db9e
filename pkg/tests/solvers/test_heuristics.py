"""Tests for the greedy, local search and working set heuristics"""

import pytest

from jetblack_cachesched.solvers import (
    Assignment,
    Problem,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod,
    brute_force,
    check_assignment,
    ideal_objective,
    local_search,
    problem_objective,
    realize_weights,
    solve,
    solve_greedy,
    solve_wss_balance
)

from jetblack_cachesched.types import ViolationReport

from ..instances import make_problem, small_problem, worked_problem


def _violations(
        problem: Problem,
        result: SolveResult,
        config: SolverConfig
) -> ViolationReport:
    assert result.assignment is not None and result.weights is not None
    return check_assignment(
        result.assignment,
        result.weights,
        problem.jobs,
        problem.intervals,
        problem.windows,
        problem.task_set,
        config
    )


def test_greedy_worked_instance() -> None:
    """Test greedy finds the optimum of the worked instance"""
    problem = worked_problem()
    config = SolverConfig(SolverMethod.GREEDY)
    result = solve_greedy(problem, config)
    assert result.status == SolveStatus.FEASIBLE
    assert result.objective == 8
    assert not _violations(problem, result, config)


def test_greedy_single_core() -> None:
    """Test one core holding everything captures every pair"""
    problem = make_problem(
        [(4, 1, 1000), (4, 1, 1000), (4, 1, 1000)],
        1,
        4096,
        {(0, 1): 1, (1, 2): 2}
    )
    result = solve_greedy(problem, SolverConfig(SolverMethod.GREEDY))
    assert result.assignment is not None
    assert all(j == 0 for _, j, _ in result.assignment)
    assert result.objective == ideal_objective(problem) == 3


def test_greedy_triangle() -> None:
    """Test greedy on a triangle where only one pair fits per cache"""
    problem = make_problem(
        [(4, 1, 4096), (4, 1, 4096), (4, 1, 4096)],
        2,
        8192,
        {(0, 1): 2, (0, 2): 2}
    )
    greedy = solve_greedy(problem, SolverConfig(SolverMethod.GREEDY))
    optimum = brute_force(problem, SolverConfig(SolverMethod.BRUTE_FORCE))
    assert greedy.objective == optimum.objective == 2


def test_greedy_infeasible() -> None:
    """Test greedy reports a job it cannot place"""
    problem = make_problem([(4, 1, 5000), (4, 1, 5000)], 1, 8192, {})
    result = solve_greedy(problem, SolverConfig(SolverMethod.GREEDY))
    assert result.status == SolveStatus.INFEASIBLE


def test_local_search_from_optimum() -> None:
    """Test a start without improving moves is returned unchanged"""
    problem = worked_problem()
    config = SolverConfig(SolverMethod.LOCAL_SEARCH)
    start = solve_greedy(problem, config)
    result = local_search(problem, start, config)
    assert result.status == SolveStatus.FEASIBLE
    assert result.assignment == start.assignment
    assert result.objective == 8
    assert result.trace == [8]
    assert result.nodes == 0


def test_local_search_improves() -> None:
    """Test moves are taken from a start that separates every pair"""
    problem = worked_problem()
    config = SolverConfig(SolverMethod.LOCAL_SEARCH)
    scattered = Assignment([
        (0, 0, 0), (1, 1, 0), (2, 1, 0),
        (2, 0, 1), (3, 1, 1), (4, 0, 1)
    ])
    realized = realize_weights(problem, scattered, config)
    assert realized is not None
    start = SolveResult(
        SolverMethod.GREEDY,
        SolveStatus.FEASIBLE,
        realized[1],
        realized[0],
        problem_objective(problem, scattered)
    )
    assert start.objective == 0

    result = local_search(problem, start, config)
    assert result.objective is not None and result.objective > 0
    assert result.trace[0] == 0
    assert all(
        before < after for before, after in zip(result.trace, result.trace[1:])
    )
    assert result.nodes == len(result.trace) - 1
    assert not _violations(problem, result, config)


def test_local_search_without_start() -> None:
    """Test an infeasible start stays infeasible"""
    problem = worked_problem()
    config = SolverConfig(SolverMethod.LOCAL_SEARCH)
    start = SolveResult(SolverMethod.GREEDY, SolveStatus.INFEASIBLE)
    assert local_search(problem, start, config).status == SolveStatus.INFEASIBLE


@pytest.mark.parametrize('seed', range(50))
def test_local_search_never_worse(seed: int) -> None:
    """Test local search only climbs and stays below the optimum"""
    problem = small_problem(seed)
    config = SolverConfig()
    greedy = solve(problem, config.with_method(SolverMethod.GREEDY))
    local = solve(problem, config.with_method(SolverMethod.LOCAL_SEARCH))
    oracle = solve(problem, config.with_method(SolverMethod.BRUTE_FORCE))

    if greedy.objective is None:
        return
    assert local.objective is not None
    assert local.trace[0] == greedy.objective
    assert local.trace == sorted(local.trace)
    assert local.objective >= greedy.objective
    assert oracle.objective is not None
    assert oracle.objective >= local.objective
    assert not _violations(problem, local, config)


def test_wss_balance() -> None:
    """Test the working set baseline is feasible"""
    problem = worked_problem()
    config = SolverConfig(SolverMethod.WSS_BALANCE)
    result = solve(problem, config)
    assert result.status == SolveStatus.FEASIBLE
    assert not _violations(problem, result, config)
