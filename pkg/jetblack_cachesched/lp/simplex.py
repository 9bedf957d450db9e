"""A dense two-phase simplex.

Variables are shifted to their lower bounds, finite upper bounds become
rows, equality rows are split into two inequalities and every row is
normalized to a non-negative right hand side. Phase I minimizes the sum of
the artificial variables; phase II optimizes the real objective. The
tableau is a numpy array of floats or, when solving exactly, of Fractions.
"""

from fractions import Fraction
import logging
import math
from typing import Any, Callable, List, Optional, Sequence, Tuple

import numpy as np

from .types import (
    DEFAULT_LP_TOLERANCE,
    DEFAULT_PIVOT_CAP,
    LinearProgram,
    LpOutcome,
    LpStatus,
    Number,
    Relation,
    Sense
)

LOGGER = logging.getLogger(__name__)

# After this many consecutive degenerate pivots entering columns are chosen
# by Bland's rule until the solve ends.
DEGENERATE_STREAK = 32

Row = Tuple[List[Any], Relation, Any]


class _IterationLimit(Exception):
    """The pivot cap was reached"""


class _Tableau:
    """Constraint rows followed by a single objective row"""

    def __init__(
            self,
            matrix: np.ndarray,
            basis: List[int],
            tolerance: Any,
            pivot_cap: int
    ) -> None:
        self.matrix = matrix
        self.basis = basis
        self.tolerance = tolerance
        self.pivot_cap = pivot_cap
        self.pivots = 0
        self.bland = False
        self.exact = matrix.dtype == object

    @property
    def row_count(self) -> int:
        """The number of constraint rows"""
        return self.matrix.shape[0] - 1

    def set_objective(self, costs: Sequence[Any]) -> None:
        """Install a maximization objective in reduced cost form"""
        zero = Fraction(0) if self.exact else 0.0
        row = np.array(
            [-cost for cost in costs] + [zero],
            dtype=self.matrix.dtype
        )
        for r, column in enumerate(self.basis):
            if costs[column] != 0:
                row = row + costs[column] * self.matrix[r]
        self.matrix[-1] = row

    def pivot(self, r: int, e: int) -> None:
        """Pivot on row r and column e"""
        if self.pivots >= self.pivot_cap:
            raise _IterationLimit
        matrix = self.matrix
        matrix[r] = matrix[r] / matrix[r, e]
        column = matrix[:, e].copy()
        column[r] = 0
        matrix -= np.outer(column, matrix[r])
        if not self.exact:
            matrix[np.abs(matrix) < self.tolerance * 1e-3] = 0.0
            rhs = matrix[:-1, -1]
            rhs[rhs < 0] = 0.0
        self.basis[r] = e
        self.pivots += 1

    def entering(self, columns: int) -> Optional[int]:
        """The entering column, or None at optimality"""
        reduced = self.matrix[-1, :columns]
        if columns == 0:
            return None
        if self.bland:
            candidates = np.nonzero(
                (reduced < -self.tolerance).astype(bool)
            )[0]
            return int(candidates[0]) if len(candidates) else None
        column = int(np.argmin(reduced))
        return column if reduced[column] < -self.tolerance else None

    def leaving(self, e: int) -> Tuple[Optional[int], Any]:
        """The leaving row by the minimum ratio test, ties by basis index"""
        column = self.matrix[:-1, e]
        rhs = self.matrix[:-1, -1]
        rows = np.nonzero((column > self.tolerance).astype(bool))[0]
        if len(rows) == 0:
            return None, None
        ratios = rhs[rows] / column[rows]
        best = ratios.min()
        tied = rows[(ratios <= best + self.tolerance).astype(bool)]
        r = min(tied, key=lambda row: self.basis[row])
        return int(r), best

    def run(self, columns: int) -> LpStatus:
        """Pivot until optimal or unbounded"""
        streak = 0
        while True:
            e = self.entering(columns)
            if e is None:
                return LpStatus.OPTIMAL
            r, ratio = self.leaving(e)
            if r is None:
                return LpStatus.UNBOUNDED
            if ratio <= self.tolerance:
                streak += 1
                if streak >= DEGENERATE_STREAK and not self.bland:
                    LOGGER.debug('switching to Bland\'s rule')
                    self.bland = True
            else:
                streak = 0
            self.pivot(r, e)


def _to_fraction(value: Number) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _standard_rows(
        lp: LinearProgram,
        free: Sequence[int],
        lows: Sequence[Any],
        highs: Sequence[Any],
        convert: Callable[[Number], Any],
        tolerance: Any
) -> Optional[List[Row]]:
    """Rows over the free columns with b >= 0, or None if trivially
    infeasible"""
    column_of = {variable: column for column, variable in enumerate(free)}
    zero = convert(0)
    rows: List[Row] = []

    def append(dense: List[Any], relation: Relation, rhs: Any) -> None:
        if rhs < 0:
            dense = [-value for value in dense]
            rhs = -rhs
            relation = Relation.GE if relation == Relation.LE else Relation.LE
        if relation == Relation.GE and rhs <= tolerance:
            dense = [-value for value in dense]
            rhs = zero
            relation = Relation.LE
        rows.append((dense, relation, rhs))

    for constraint in lp.rows:
        dense = [zero] * len(free)
        rhs = convert(constraint.rhs)
        for variable, coefficient in constraint.coefficients.items():
            coefficient = convert(coefficient)
            rhs -= coefficient * lows[variable]
            column = column_of.get(variable)
            if column is not None:
                dense[column] += coefficient
        if all(abs(value) <= tolerance for value in dense):
            if constraint.relation != Relation.GE and rhs < -tolerance:
                return None
            if constraint.relation != Relation.LE and rhs > tolerance:
                return None
            continue
        if constraint.relation == Relation.EQ:
            append(dense, Relation.LE, rhs)
            append(list(dense), Relation.GE, rhs)
        else:
            append(dense, constraint.relation, rhs)

    for column, variable in enumerate(free):
        if highs[variable] != math.inf:
            dense = [zero] * len(free)
            dense[column] = convert(1)
            append(dense, Relation.LE, highs[variable] - lows[variable])

    return rows


def solve_lp(
        lp: LinearProgram,
        tolerance: float = DEFAULT_LP_TOLERANCE,
        *,
        pivot_cap: int = DEFAULT_PIVOT_CAP,
        exact: bool = False
) -> LpOutcome:
    """Solve a linear program.

    Args:
        lp (LinearProgram): The program.
        tolerance (float, optional): The absolute tolerance for pivot and
            feasibility tests. Ignored when exact. Defaults to 1e-9.
        pivot_cap (int, optional): The maximum number of pivots. Defaults to
            10**6.
        exact (bool, optional): If true the tableau holds Fractions and all
            tests are exact. Defaults to False.

    Raises:
        ValueError: If the program is malformed.

    Returns:
        LpOutcome: The status and, when optimal, the values and objective.
    """
    lp.validate()
    convert: Callable[[Number], Any] = _to_fraction if exact else float
    tol: Any = Fraction(0) if exact else tolerance
    dtype: Any = object if exact else float

    count = lp.variable_count
    lows = [convert(value) for value in lp.lows]
    highs = [
        value if value == math.inf else convert(value)
        for value in lp.highs
    ]
    free = [v for v in range(count) if highs[v] - lows[v] > tol]

    rows = _standard_rows(lp, free, lows, highs, convert, tol)
    if rows is None:
        return LpOutcome(LpStatus.INFEASIBLE)

    free_count = len(free)
    slack_count = len(rows)
    artificial_rows = [
        r for r, (_, relation, _) in enumerate(rows)
        if relation == Relation.GE
    ]
    artificial_start = free_count + slack_count
    width = artificial_start + len(artificial_rows) + 1

    matrix = np.full(
        (len(rows) + 1, width),
        convert(0),
        dtype=dtype
    )
    basis: List[int] = []
    artificial_of = {r: artificial_start + i for i,
                     r in enumerate(artificial_rows)}
    for r, (dense, relation, rhs) in enumerate(rows):
        matrix[r, :free_count] = dense
        matrix[r, -1] = rhs
        if relation == Relation.LE:
            matrix[r, free_count + r] = convert(1)
            basis.append(free_count + r)
        else:
            matrix[r, free_count + r] = convert(-1)
            matrix[r, artificial_of[r]] = convert(1)
            basis.append(artificial_of[r])

    tableau = _Tableau(matrix, basis, tol, pivot_cap)

    try:
        if artificial_rows:
            costs = [convert(0)] * (width - 1)
            for column in artificial_of.values():
                costs[column] = convert(-1)
            tableau.set_objective(costs)
            tableau.run(width - 1)
            scale = max([convert(1)] + [abs(row[2]) for row in rows])
            if tableau.matrix[-1, -1] < -tol * scale:
                LOGGER.debug(
                    'phase I residual %s: infeasible',
                    tableau.matrix[-1, -1]
                )
                return LpOutcome(
                    LpStatus.INFEASIBLE,
                    pivots=tableau.pivots
                )
            _drive_out_artificials(tableau, artificial_start)

        costs = [convert(0)] * (artificial_start)
        sign = 1 if lp.sense == Sense.MAXIMIZE else -1
        for column, variable in enumerate(free):
            costs[column] = sign * convert(lp.objective[variable])
        tableau.set_objective(costs)
        status = tableau.run(artificial_start)
    except _IterationLimit:
        LOGGER.warning('simplex stopped after %s pivots', tableau.pivots)
        return LpOutcome(LpStatus.ITERATION_LIMIT, pivots=tableau.pivots)

    if status == LpStatus.UNBOUNDED:
        return LpOutcome(LpStatus.UNBOUNDED, pivots=tableau.pivots)

    values = list(lows)
    for r, column in enumerate(tableau.basis):
        if column < free_count:
            values[free[column]] = lows[free[column]] + tableau.matrix[r, -1]
    if not exact:
        values = [
            min(max(value, low), high)
            for value, low, high in zip(values, lows, highs)
        ]
    objective = sum(
        (convert(cost) * value for cost, value in zip(lp.objective, values)),
        convert(0)
    )
    return LpOutcome(LpStatus.OPTIMAL, values, objective, tableau.pivots)


def _drive_out_artificials(tableau: _Tableau, artificial_start: int) -> None:
    """Pivot basic artificials out, drop redundant rows and the artificial
    columns"""
    redundant = []
    for r in range(tableau.row_count):
        if tableau.basis[r] < artificial_start:
            continue
        row = tableau.matrix[r, :artificial_start]
        candidates = np.nonzero(
            (abs(row) > tableau.tolerance).astype(bool)
        )[0]
        if len(candidates):
            tableau.pivot(r, int(candidates[0]))
        else:
            redundant.append(r)

    if redundant:
        tableau.matrix = np.delete(tableau.matrix, redundant, axis=0)
        tableau.basis = [
            column for r, column in enumerate(tableau.basis)
            if r not in redundant
        ]
    tableau.matrix = np.delete(
        tableau.matrix,
        range(artificial_start, tableau.matrix.shape[1] - 1),
        axis=1
    )
