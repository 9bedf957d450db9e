"""Weights for a fixed cache assignment"""

from collections import defaultdict
from fractions import Fraction
import logging
from typing import DefaultDict, Dict, List, Optional, Sequence, Tuple

from ..lp import (
    LinearProgram,
    LpOutcome,
    Number,
    Relation,
    Sense,
    WeightMatrix,
    solve_lp
)

from .problem import Problem
from .types import Assignment, LinkMode, Slot, SolverConfig

LOGGER = logging.getLogger(__name__)

Realization = Tuple[WeightMatrix, Assignment]


def fits_caches(problem: Problem, assignment: Assignment) -> bool:
    """True if every job has at most one cache per interval and no cache
    overflows"""
    load: DefaultDict[Tuple[int, int], int] = defaultdict(int)
    for i, j, k in assignment:
        if k not in problem.windows[i] or not 0 <= j < problem.core_count:
            return False
        if len(assignment.caches_of(i, k)) > 1:
            return False
        load[(j, k)] += problem.wss(i)
    return all(wss <= problem.cache_capacity for wss in load.values())


def fluid_realization(
        problem: Problem,
        assignment: Assignment,
        config: SolverConfig
) -> Optional[WeightMatrix]:
    """The fluid weights, if they satisfy every constraint of the
    assignment"""
    core_load: DefaultDict[Tuple[int, int], Fraction] = defaultdict(Fraction)
    weights: Dict[Slot, Fraction] = {}
    for i, k in problem.windows.slots():
        cache = assignment.cache_of(i, k)
        if cache is None:
            return None
        weight = problem.utilization(i)
        if (
                config.link_policy.mode == LinkMode.EPSILON and
                weight < config.link_policy.epsilon
        ):
            return None
        core_load[(cache, k)] += weight
        weights[(i, k)] = weight
    if any(load > 1 for load in core_load.values()):
        return None
    return WeightMatrix(weights)


def fixed_assignment_lp(
        problem: Problem,
        assignment: Assignment,
        config: SolverConfig
) -> Optional[Tuple[LinearProgram, Dict[Slot, int]]]:
    """The weight program with the assignment fixed.

    Unassigned slots have no variable, so their weight is zero.

    Returns:
        Optional[Tuple[LinearProgram, Dict[Slot, int]]]: The program and the
            variable of each assigned slot, or None if some job has no
            assigned slot at all.
    """
    lp = LinearProgram(Sense.MAXIMIZE)
    low = (
        config.link_policy.epsilon
        if config.link_policy.mode == LinkMode.EPSILON
        else 0
    )
    index: Dict[Slot, int] = {}
    for i, k in assignment.slots():
        index[(i, k)] = lp.add_variable(('w', i, k), low, 1)

    groups: DefaultDict[Tuple[int, int], List[int]] = defaultdict(list)
    for (i, k), variable in index.items():
        groups[(assignment.as_mapping()[(i, k)], k)].append(variable)
    for (j, k), variables in sorted(groups.items()):
        lp.add_row({v: 1 for v in variables}, Relation.LE, 1, ('core', j, k))

    for k in range(len(problem.intervals)):
        row = {
            index[(i, k)]: 1
            for i in problem.windows.jobs_on(k)
            if (i, k) in index
        }
        if row:
            lp.add_row(row, Relation.LE, problem.core_count, ('eq1', k))

    for job in problem.jobs:
        row = {
            index[(job.job_id, k)]: problem.intervals.durations[k]
            for k in problem.windows[job.job_id]
            if (job.job_id, k) in index
        }
        if not row:
            return None
        lp.add_row(row, Relation.EQ, job.wcet, ('eq3', job.job_id))

    return lp, index


def weights_feasible(
        problem: Problem,
        assignment: Assignment,
        config: SolverConfig
) -> bool:
    """True if some weights satisfy all constraints for the assignment"""
    if not fits_caches(problem, assignment):
        return False
    if fluid_realization(problem, assignment, config) is not None:
        return True
    built = fixed_assignment_lp(problem, assignment, config)
    if built is None:
        return False
    outcome = solve_lp(
        built[0],
        config.tolerance,
        pivot_cap=config.pivot_cap
    )
    return outcome.is_optimal


def _maximize(
        lp: LinearProgram,
        variable: int,
        config: SolverConfig,
        exact: bool
) -> LpOutcome:
    program = lp.with_bounds({})
    program.objective = [0] * lp.variable_count
    program.objective[variable] = 1
    return solve_lp(
        program,
        config.tolerance,
        pivot_cap=config.pivot_cap,
        exact=exact
    )


def realize_weights(
        problem: Problem,
        assignment: Assignment,
        config: SolverConfig,
        exact: bool = True
) -> Optional[Realization]:
    """Find weights for an assignment and release idle slots.

    The fluid weights are used when they fit. Otherwise the fixed
    assignment program is solved; in one-sided mode every assigned slot
    that can take a positive weight is then given one by averaging vertex
    solutions, and the slots whose weight is forced to zero are removed from
    the assignment.

    Args:
        problem (Problem): The problem.
        assignment (Assignment): The assignment.
        config (SolverConfig): The configuration.
        exact (bool, optional): Solve over Fractions. Defaults to True.

    Returns:
        Optional[Realization]: The weights and the assignment without idle
            slots, or None if no weights exist.
    """
    if not fits_caches(problem, assignment):
        return None

    fluid = fluid_realization(problem, assignment, config)
    if fluid is not None:
        return fluid, assignment

    built = fixed_assignment_lp(problem, assignment, config)
    if built is None:
        return None
    lp, index = built
    tolerance: Number = 0 if exact else config.tolerance

    outcome = solve_lp(
        lp,
        config.tolerance,
        pivot_cap=config.pivot_cap,
        exact=exact
    )
    if not outcome.is_optimal or outcome.values is None:
        return None
    samples: List[Sequence[Number]] = [outcome.values]

    if config.link_policy.mode == LinkMode.ONE_SIDED:
        idle = [v for v, value in enumerate(outcome.values) if value <= tolerance]
        while idle:
            target = idle.pop(0)
            extra = _maximize(lp, target, config, exact)
            if (
                    extra.is_optimal and
                    extra.values is not None and
                    extra.values[target] > tolerance
            ):
                samples.append(extra.values)
                idle = [v for v in idle if extra.values[v] <= tolerance]

    values = [
        sum((sample[v] for sample in samples), Fraction(0) if exact else 0.0) /
        len(samples)
        for v in range(lp.variable_count)
    ]
    weights = WeightMatrix({
        slot: values[variable]
        for slot, variable in index.items()
        if values[variable] > tolerance
    })
    released = [
        slot for slot, variable in index.items()
        if values[variable] <= tolerance
    ]
    if released:
        LOGGER.debug('releasing idle slots %s', released)
    return weights, assignment.without(released)
