"""Tests for assignment checks and weight realization"""

from fractions import Fraction

from jetblack_cachesched.lp import WeightMatrix
from jetblack_cachesched.solvers import (
    Assignment,
    LinkMode,
    LinkPolicy,
    Problem,
    SolverConfig,
    check_assignment,
    fluid_realization,
    realize_weights,
    solve,
    weights_feasible
)
from jetblack_cachesched.types import ViolationReport

from ..instances import make_problem, worked_problem


def _check(
        problem: Problem,
        assignment: Assignment,
        weights: WeightMatrix,
        config: SolverConfig
) -> ViolationReport:
    return check_assignment(
        assignment,
        weights,
        problem.jobs,
        problem.intervals,
        problem.windows,
        problem.task_set,
        config
    )


def test_exact_output_passes() -> None:
    """Test a solved assignment has no violations"""
    problem = worked_problem()
    config = SolverConfig()
    result = solve(problem, config)
    assert result.assignment is not None and result.weights is not None
    assert not _check(problem, result.assignment, result.weights, config)


def test_double_assignment() -> None:
    """Test a job on two caches at once is reported"""
    problem = worked_problem()
    config = SolverConfig()
    result = solve(problem, config)
    assert result.assignment is not None and result.weights is not None
    doubled = Assignment(list(result.assignment) + [(0, 1, 0)])
    report = _check(problem, doubled, result.weights, config)
    assert [(v.rule, v.index) for v in report] == [('eq5', (0, 0))]


def test_weight_without_cache() -> None:
    """Test a job running without a cache is reported"""
    problem = worked_problem()
    config = SolverConfig()
    result = solve(problem, config)
    assert result.assignment is not None and result.weights is not None
    report = _check(
        problem,
        result.assignment.without([(1, 0)]),
        result.weights,
        config
    )
    assert [(v.rule, v.index) for v in report] == [('link', (1, 0))]


def test_cache_and_core_overflow() -> None:
    """Test working set and core load limits are reported"""
    problem = make_problem(
        [(4, 3, 6000), (4, 3, 6000)],
        2,
        8192,
        {(0, 1): 1}
    )
    config = SolverConfig()
    together = Assignment([(0, 0, 0), (1, 0, 0)])
    weights = WeightMatrix({(0, 0): Fraction(3, 4), (1, 0): Fraction(3, 4)})
    rules = [v.rule for v in _check(problem, together, weights, config)]
    assert rules == ['eq4', 'core']


def test_epsilon_link() -> None:
    """Test an assigned job needs a minimum weight in epsilon mode"""
    problem = make_problem([(4, 1, 0)], 1, 1, {})
    assignment = Assignment([(0, 0, 0)])
    weights = WeightMatrix({(0, 0): Fraction(1, 4)})
    one_sided = SolverConfig()
    epsilon = SolverConfig(
        link_policy=LinkPolicy(LinkMode.EPSILON, Fraction(1, 2))
    )
    assert not _check(problem, assignment, weights, one_sided)
    assert [v.rule for v in _check(problem, assignment, weights, epsilon)] == [
        'link'
    ]


def test_fluid_realization() -> None:
    """Test fluid weights are used when every core fits them"""
    problem = worked_problem()
    config = SolverConfig()
    together = Assignment(
        (i, 0, k)
        for k in range(len(problem.intervals))
        for i in problem.windows.jobs_on(k)
    )
    weights = fluid_realization(problem, together, config)
    assert weights is not None
    assert weights[(2, 0)] == weights[(2, 1)] == Fraction(1, 4)


def test_realize_shifts_work() -> None:
    """Test weights move between intervals when a core is too busy"""
    # jobs: A@0 over both intervals, B@0, B@4
    problem = make_problem([(8, 5, 0), (4, 3, 0)], 2, 1, {(0, 1): 1})
    config = SolverConfig()
    assignment = Assignment([(0, 0, 0), (1, 0, 0), (0, 0, 1), (2, 1, 1)])
    assert fluid_realization(problem, assignment, config) is None
    assert weights_feasible(problem, assignment, config)

    realized = realize_weights(problem, assignment, config)
    assert realized is not None
    weights, cleared = realized
    assert cleared == assignment
    assert weights[(0, 0)] == Fraction(1, 4)
    assert weights[(0, 1)] == 1
    assert weights[(1, 0)] == weights[(2, 1)] == Fraction(3, 4)
    assert not _check(problem, cleared, weights, config)


def test_realize_releases_idle_slots() -> None:
    """Test a slot forced to zero weight is unassigned"""
    # jobs: A@0, B@0 over both intervals, A@4
    problem = make_problem([(4, 4, 0), (8, 4, 0)], 2, 1, {(0, 1): 1})
    assignment = Assignment([(0, 0, 0), (1, 0, 0), (1, 1, 1), (2, 0, 1)])

    realized = realize_weights(problem, assignment, SolverConfig())
    assert realized is not None
    weights, cleared = realized
    assert cleared == assignment.without([(1, 0)])
    assert weights[(1, 1)] == 1

    epsilon = SolverConfig(link_policy=LinkPolicy(LinkMode.EPSILON))
    assert realize_weights(problem, assignment, epsilon) is None


def test_realize_needs_every_job() -> None:
    """Test a job with no cache on any interval has no weights"""
    problem = make_problem([(4, 1, 0), (4, 1, 0)], 1, 1, {})
    assert realize_weights(problem, Assignment([(0, 0, 0)]), SolverConfig()) is None
