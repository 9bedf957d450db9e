"""Exact solution of the linearized model by branch-and-bound"""

import logging
from typing import Dict, List, NamedTuple, Optional, Sequence

from ..lp import LpStatus, Number, solve_lp
from ..time_provider import Deadline

from .greedy import solve_greedy
from .linearized import (
    Bounds,
    LinearizedModel,
    floor_bound,
    fractionality,
    is_integral
)
from .objective import problem_objective
from .realize import realize_weights
from .types import (
    Assignment,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod,
    Triple
)

LOGGER = logging.getLogger(__name__)


class _Node(NamedTuple):
    bounds: Bounds
    bound: Number
    values: Sequence[Number]


class _Incumbent(NamedTuple):
    assignment: Assignment
    value: int
    model_value: int


def _branch_variable(
        model: LinearizedModel,
        values: Sequence[Number],
        masses: Dict[int, int]
) -> Optional[int]:
    candidates = [
        variable for variable in model.x.values()
        if not is_integral(values[variable])
    ]
    if not candidates:
        return None
    return min(
        candidates,
        key=lambda variable: (
            -fractionality(values[variable]),
            -masses[model.job_of[variable]],
            variable
        )
    )


def _release_variable(
        model: LinearizedModel,
        bounds: Bounds,
        assignment: Assignment,
        kept: Optional[Assignment],
        masses: Dict[int, int]
) -> Optional[int]:
    """The free assignment variable to branch on when an integral node
    loses objective to released slots.

    Variables of released slots come first, then the other assigned ones,
    then the unassigned ones.
    """
    def rank(triple: Triple) -> int:
        if triple not in assignment:
            return 2
        return 1 if kept is not None and triple in kept else 0

    candidates = [
        (rank(triple), -masses[triple[0]], variable)
        for triple, variable in model.x.items()
        if variable not in bounds or bounds[variable][0] != bounds[variable][1]
    ]
    return min(candidates)[2] if candidates else None


def solve_exact(model: LinearizedModel, config: SolverConfig) -> SolveResult:
    """Maximize the co-location objective.

    The search is depth-first over the assignment variables, bounded by the
    relaxation of the linearized model, and starts from the greedy
    assignment. Both children of a node are solved and the better one is
    explored first; on equal bounds the branch setting the variable to one
    comes first.

    An integral node is scored after its weights are realized and its idle
    slots released. The model counts pairs on idle slots, so its value is
    only a bound; while the released value falls short of the node bound
    the search keeps branching on the free assignment variables.

    Args:
        model (LinearizedModel): The model.
        config (SolverConfig): The configuration. The node and time limits
            stop the search.

    Returns:
        SolveResult: Optimal, or limit-reached with the incumbent and an
            upper bound, or infeasible.
    """
    problem = model.problem
    deadline = Deadline(config.time_provider, config.time_limit)
    masses = problem.affinity_mass()

    incumbent: Optional[_Incumbent] = None
    greedy = solve_greedy(problem, config)
    if (
            greedy.has_solution and
            greedy.assignment is not None and
            greedy.objective is not None
    ):
        incumbent = _Incumbent(
            greedy.assignment,
            greedy.objective,
            (
                greedy.objective if greedy.model_objective is None
                else greedy.model_objective
            )
        )
        LOGGER.debug('greedy incumbent Z=%s', greedy.objective)

    def incumbent_value() -> int:
        return -1 if incumbent is None else incumbent.value

    root_bounds = model.symmetry_fixings()
    root = solve_lp(
        model.lp.with_bounds(root_bounds),
        config.tolerance,
        pivot_cap=config.pivot_cap
    )
    lp_solves = 1
    if root.status == LpStatus.INFEASIBLE:
        LOGGER.info('the relaxation is infeasible')
        return SolveResult(
            SolverMethod.EXACT,
            SolveStatus.INFEASIBLE,
            lp_solves=lp_solves,
            runtime=deadline.elapsed
        )
    if not root.is_optimal or root.values is None or root.objective is None:
        LOGGER.warning('the relaxation stopped with %s', root.status.value)
        return _finish(
            model,
            config,
            incumbent,
            None,
            True,
            0,
            lp_solves,
            deadline
        )

    root_bound = float(root.objective)
    stack: List[_Node] = [_Node(root_bounds, root.objective, root.values)]
    nodes = 0
    limited = False

    while stack:
        if nodes >= config.node_limit or deadline.expired():
            LOGGER.info(
                'search stopped after %s nodes and %.3fs',
                nodes,
                deadline.elapsed
            )
            limited = True
            break
        node = stack.pop()
        nodes += 1
        if floor_bound(node.bound) <= incumbent_value():
            continue

        variable = _branch_variable(model, node.values, masses)
        if variable is None:
            assignment = model.assignment_from(node.values)
            realized = realize_weights(problem, assignment, config)
            kept = None if realized is None else realized[1]
            value = -1
            if kept is not None:
                value = problem_objective(problem, kept, config)
                if value > incumbent_value():
                    LOGGER.debug('node %s: new incumbent Z=%s', nodes, value)
                    incumbent = _Incumbent(
                        kept,
                        value,
                        problem_objective(problem, assignment, config)
                    )
            if value >= floor_bound(node.bound):
                continue
            variable = _release_variable(
                model,
                node.bounds,
                assignment,
                kept,
                masses
            )
            if variable is None:
                continue

        children = []
        for setting in (0, 1):
            bounds = dict(node.bounds)
            bounds[variable] = (setting, setting)
            outcome = solve_lp(
                model.lp.with_bounds(bounds),
                config.tolerance,
                pivot_cap=config.pivot_cap
            )
            lp_solves += 1
            if outcome.status == LpStatus.ITERATION_LIMIT:
                limited = True
                continue
            if (
                    outcome.is_optimal and
                    outcome.values is not None and
                    outcome.objective is not None and
                    floor_bound(outcome.objective) > incumbent_value()
            ):
                children.append(
                    (
                        float(outcome.objective),
                        setting,
                        _Node(bounds, outcome.objective, outcome.values)
                    )
                )
        children.sort(key=lambda child: (child[0], child[1]))
        stack.extend(child[2] for child in children)

    upper_bound = root_bound
    if limited:
        open_bounds = [float(node.bound) for node in stack]
        upper_bound = min(
            root_bound,
            max(open_bounds + [float(max(incumbent_value(), 0))])
        )

    return _finish(
        model,
        config,
        incumbent,
        upper_bound,
        limited,
        nodes,
        lp_solves,
        deadline
    )


def _finish(
        model: LinearizedModel,
        config: SolverConfig,
        incumbent: Optional[_Incumbent],
        upper_bound: Optional[float],
        limited: bool,
        nodes: int,
        lp_solves: int,
        deadline: Deadline
) -> SolveResult:
    if incumbent is None:
        return SolveResult(
            SolverMethod.EXACT,
            SolveStatus.LIMIT_REACHED if limited else SolveStatus.INFEASIBLE,
            upper_bound=upper_bound,
            nodes=nodes,
            lp_solves=lp_solves,
            runtime=deadline.elapsed
        )

    realized = realize_weights(
        model.problem,
        incumbent.assignment,
        config,
        exact=True
    )
    if realized is None:
        LOGGER.error('no weights exist for the incumbent %s', incumbent)
        return SolveResult(
            SolverMethod.EXACT,
            SolveStatus.INFEASIBLE,
            upper_bound=upper_bound,
            nodes=nodes,
            lp_solves=lp_solves,
            runtime=deadline.elapsed
        )

    weights, cleared = realized
    objective = problem_objective(model.problem, cleared, config)
    LOGGER.info(
        'exact search: Z=%s bound=%s nodes=%s lp_solves=%s',
        objective,
        upper_bound,
        nodes,
        lp_solves
    )
    return SolveResult(
        SolverMethod.EXACT,
        SolveStatus.LIMIT_REACHED if limited else SolveStatus.OPTIMAL,
        cleared,
        weights,
        objective,
        upper_bound,
        model_objective=incumbent.model_value,
        nodes=nodes,
        lp_solves=lp_solves,
        runtime=deadline.elapsed
    )
