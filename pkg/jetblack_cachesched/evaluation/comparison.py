"""Comparing solver methods on one instance"""

from collections import defaultdict
import csv
import io
import logging
from typing import DefaultDict, Optional, Sequence, Tuple

from ..lp import solve_lp
from ..schedule import build_schedule, count_migrations
from ..solvers import (
    Problem,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod,
    build_linearized_model,
    build_problem,
    check_assignment,
    ideal_objective,
    solve
)
from ..types import CacheSchedError, OverloadError

from .types import REPORT_HEADER, ComparisonReport, Instance, MethodReport

LOGGER = logging.getLogger(__name__)


def relaxation_bound(problem: Problem, config: SolverConfig) -> Optional[float]:
    """The root relaxation bound, or None if the model cannot be built or
    solved"""
    try:
        model = build_linearized_model(problem, config)
    except CacheSchedError as error:
        LOGGER.warning('no relaxation bound: %s', error)
        return None
    outcome = solve_lp(
        model.lp.with_bounds(model.symmetry_fixings()),
        config.tolerance,
        pivot_cap=config.pivot_cap
    )
    if not outcome.is_optimal or outcome.objective is None:
        return None
    return float(outcome.objective)


def peak_wss(problem: Problem, result: SolveResult) -> int:
    """The largest working set held by one cache on one interval"""
    if result.assignment is None:
        return 0
    load: DefaultDict[Tuple[int, int], int] = defaultdict(int)
    for i, j, k in result.assignment:
        load[(j, k)] += problem.wss(i)
    return max(load.values(), default=0)


def capture_ratio(objective: int, ideal: int) -> float:
    """The share of the ideal objective captured, one when both are zero"""
    if ideal == 0:
        return 1.0
    return objective / ideal


def _run_method(
        problem: Problem,
        method: SolverMethod,
        config: SolverConfig
) -> Tuple[Optional[SolveResult], Optional[str]]:
    try:
        return solve(problem, config.with_method(method)), None
    except CacheSchedError as error:
        LOGGER.warning('%s failed: %s', method.value, error)
        return None, str(error)


def compare_solvers(
        instance: Instance,
        methods: Sequence[SolverMethod],
        config: SolverConfig
) -> ComparisonReport:
    """Run each method on the instance under the same configuration.

    The bound of every row is the root relaxation bound, tightened to the
    exact objective when the exact method proves optimality. A method that
    raises is recorded with status error and does not stop the others.

    Args:
        instance (Instance): The instance.
        methods (Sequence[SolverMethod]): The methods, in report order.
        config (SolverConfig): The shared configuration.

    Raises:
        ValidationError: If the instance is invalid.

    Returns:
        ComparisonReport: One row per method.
    """
    problem = build_problem(instance.task_set, instance.affinity)
    ideal = ideal_objective(problem, config.weight_by_interval)
    bound = relaxation_bound(problem, config)

    results = [
        (method, *_run_method(problem, method, config)) for method in methods
    ]
    for method, result, _ in results:
        if (
                method == SolverMethod.EXACT and
                result is not None and
                result.status == SolveStatus.OPTIMAL and
                result.objective is not None
        ):
            best = float(result.objective)
            bound = best if bound is None else min(bound, best)

    rows = []
    for method, result, error in results:
        if result is None:
            rows.append(MethodReport(method.value, 'error', error=error))
            continue
        runtime_ms = result.runtime * 1000
        if result.assignment is None or result.weights is None:
            rows.append(
                MethodReport(
                    method.value,
                    result.status.value,
                    bound=bound,
                    runtime_ms=runtime_ms
                )
            )
            continue
        objective = result.objective or 0
        violations = check_assignment(
            result.assignment,
            result.weights,
            problem.jobs,
            problem.intervals,
            problem.windows,
            problem.task_set,
            config
        )
        if violations:
            LOGGER.warning(
                '%s produced %s violations: %s',
                method.value,
                len(violations),
                violations[0]
            )
        try:
            migrations: Optional[int] = count_migrations(
                build_schedule(
                    result.assignment,
                    result.weights,
                    problem.jobs,
                    problem.intervals
                )
            )
        except OverloadError as error:
            LOGGER.warning('%s has no schedule: %s', method.value, error)
            migrations = None
        gap = None
        if bound is not None:
            gap = max(bound - objective, 0.0) / bound if bound > 0 else 0.0
        rows.append(
            MethodReport(
                method.value,
                result.status.value,
                objective,
                bound,
                gap,
                runtime_ms,
                migrations,
                capture_ratio(objective, ideal),
                peak_wss(problem, result),
                len(violations)
            )
        )

    report = ComparisonReport(instance.name, rows, ideal, bound)
    LOGGER.info('compared %s methods on %s', len(rows), instance.name)
    return report


def format_report_csv(report: ComparisonReport) -> str:
    """Render a report as CSV"""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(REPORT_HEADER)
    for row in report:
        writer.writerow(row.as_row())
    return buf.getvalue()
