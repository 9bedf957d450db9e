"""Tests for the linearized model"""

import itertools

import pytest

from jetblack_cachesched.lp import LpStatus, solve_lp
from jetblack_cachesched.solvers import (
    Assignment,
    LinkMode,
    LinkPolicy,
    Problem,
    SolverConfig,
    build_linearized_model,
    model_variable_count,
    problem_objective,
    weights_feasible
)
from jetblack_cachesched.types import ModelTooLargeError

from ..instances import make_problem, worked_problem


def test_zero_affinity_has_no_products() -> None:
    """Test an instance without flows has a constant objective"""
    problem = make_problem([(4, 1, 0), (4, 1, 0)], 2, 1, {})
    model = build_linearized_model(problem, SolverConfig())
    assert model.product_count == 0
    assert not any(model.lp.objective)


def test_one_product_per_cache() -> None:
    """Test a single pair gets one product variable per cache"""
    problem = make_problem([(4, 1, 0), (4, 1, 0)], 2, 1, {(0, 1): 1})
    model = build_linearized_model(problem, SolverConfig())
    assert model.product_count == 2
    assert sorted(model.y) == [(0, 1, 0, 0), (0, 1, 1, 0)]


def test_worked_instance_counts() -> None:
    """Test the variable and row counts of the worked instance"""
    problem = worked_problem()
    model = build_linearized_model(problem, SolverConfig())
    assert len(model.w) == 6
    assert len(model.x) == 12
    assert len(model.s) == 12
    assert model.product_count == 8
    assert model.lp.variable_count == model_variable_count(problem) == 38
    assert len(model.lp.rows) == 69

    epsilon = build_linearized_model(
        problem,
        SolverConfig(link_policy=LinkPolicy(LinkMode.EPSILON))
    )
    assert len(epsilon.lp.rows) == 69 + 6


def test_variable_cap() -> None:
    """Test the model refuses to grow beyond the cap"""
    with pytest.raises(ModelTooLargeError):
        build_linearized_model(worked_problem(), SolverConfig(variable_cap=37))


def _all_on(problem: Problem, cache: int) -> Assignment:
    return Assignment(
        (i, cache, k)
        for k in range(len(problem.intervals))
        for i in problem.windows.jobs_on(k)
    )


def test_fixed_assignment_matches_objective() -> None:
    """Test the products equal the objective once x is integral"""
    problem = worked_problem()
    model = build_linearized_model(problem, SolverConfig())

    together = _all_on(problem, 0)
    apart = Assignment([
        (0, 0, 0), (1, 0, 0), (2, 1, 0),
        (2, 0, 1), (3, 0, 1), (4, 1, 1)
    ])
    for assignment, expected in ((together, 8), (apart, 4)):
        outcome = solve_lp(
            model.lp.with_bounds(model.fixed(assignment))
        )
        assert outcome.status == LpStatus.OPTIMAL
        assert outcome.objective == pytest.approx(expected)
        assert problem_objective(problem, assignment) == expected
        assert outcome.values is not None
        assert model.assignment_from(outcome.values) == assignment


def test_core_capacity_forbids_overload() -> None:
    """Test a core cannot run more than one unit of work per interval"""
    problem = make_problem([(4, 3, 0), (4, 3, 0)], 2, 1, {(0, 1): 1})
    model = build_linearized_model(problem, SolverConfig())
    outcome = solve_lp(
        model.lp.with_bounds(model.fixed(_all_on(problem, 0)))
    )
    assert outcome.status == LpStatus.INFEASIBLE


def test_symmetry_fixings() -> None:
    """Test the r-th job of an interval may only use the first r+1 caches"""
    problem = worked_problem()
    model = build_linearized_model(problem, SolverConfig())
    fixings = model.symmetry_fixings()
    assert fixings == {
        model.x[(0, 1, 0)]: (0, 0),
        model.x[(2, 1, 1)]: (0, 0)
    }

    relaxed = solve_lp(model.lp)
    restricted = solve_lp(model.lp.with_bounds(fixings))
    assert relaxed.objective is not None and restricted.objective is not None
    assert restricted.objective <= relaxed.objective + 1e-6
    assert restricted.objective >= 8 - 1e-6


@pytest.mark.parametrize('problem', [
    make_problem([(2, 1, 0), (2, 1, 0)], 2, 1, {(0, 1): 3}),
    make_problem(
        [(4, 2, 4096), (4, 1, 4096), (4, 1, 4096)],
        2,
        8192,
        {(0, 1): 2, (0, 2): 4, (1, 2): 1}
    ),
    make_problem([(2, 1, 0), (4, 2, 0)], 2, 1, {(0, 1): 1}),
    make_problem([(2, 1, 0), (4, 3, 0)], 2, 1, {(0, 1): 2})
])
@pytest.mark.parametrize('config', [
    SolverConfig(),
    SolverConfig(link_policy=LinkPolicy(LinkMode.EPSILON, 0.25)),
    SolverConfig(weight_by_interval=True)
])
def test_every_fixed_assignment_is_exact(
        problem: Problem,
        config: SolverConfig
) -> None:
    """Test the model agrees with the objective and the weight program on
    every assignment, including slots left unassigned"""
    model = build_linearized_model(problem, config)
    slots = list(problem.windows.slots())
    assert len(slots) <= 4
    for caches in itertools.product(
            range(-1, problem.core_count),
            repeat=len(slots)
    ):
        assignment = Assignment(
            (i, cache, k) for (i, k), cache in zip(slots, caches) if cache >= 0
        )
        outcome = solve_lp(model.lp.with_bounds(model.fixed(assignment)))
        if weights_feasible(problem, assignment, config):
            assert outcome.status == LpStatus.OPTIMAL
            assert outcome.objective == pytest.approx(
                problem_objective(problem, assignment, config)
            )
        else:
            assert outcome.status == LpStatus.INFEASIBLE
