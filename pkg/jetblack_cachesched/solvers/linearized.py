"""The linearized cache assignment model.

Each product of two assignment variables on the same cache is replaced by a
variable y with the rows y <= x, y <= x' and y >= x + x' - 1. The weight
program is embedded, and the per-core load is carried by split variables
s[i, j, k] holding the part of w[i, k] executed on core j.
"""

import logging
import math
from typing import Dict, Mapping, Sequence, Tuple

from ..lp import LinearProgram, Number, Relation, Sense, WeightMatrix
from ..lp.weights import add_weight_rows, add_weight_variables
from ..types import ModelTooLargeError

from .problem import Problem
from .types import Assignment, LinkMode, Slot, SolverConfig, Triple

LOGGER = logging.getLogger(__name__)

PairKey = Tuple[int, int, int, int]
Bounds = Dict[int, Tuple[Number, Number]]


def model_variable_count(problem: Problem) -> int:
    """The number of variables the linearized model would have"""
    m = problem.core_count
    slots = problem.windows.slot_count
    pairs = sum(len(problem.pairs_on(k)) for k in range(len(problem.intervals)))
    return slots * (2 * m + 1) + pairs * m


class LinearizedModel:
    """The linear relaxation of the cache assignment problem"""

    def __init__(
            self,
            problem: Problem,
            lp: LinearProgram,
            x: Mapping[Triple, int],
            y: Mapping[PairKey, int],
            w: Mapping[Slot, int],
            s: Mapping[Triple, int]
    ) -> None:
        self.problem = problem
        self.lp = lp
        self.x = dict(x)
        self.y = dict(y)
        self.w = dict(w)
        self.s = dict(s)
        self.job_of = {variable: triple[0] for triple, variable in self.x.items()}

    @property
    def product_count(self) -> int:
        """The number of product variables"""
        return len(self.y)

    def assignment_from(
            self,
            values: Sequence[Number],
            threshold: float = 0.5
    ) -> Assignment:
        """The assignment whose x values exceed the threshold"""
        return Assignment(
            triple for triple, variable in self.x.items()
            if values[variable] > threshold
        )

    def weights_from(self, values: Sequence[Number]) -> WeightMatrix:
        """The weight matrix of a solution"""
        return WeightMatrix({
            slot: values[variable] for slot, variable in self.w.items()
        })

    def fixed(self, assignment: Assignment) -> Bounds:
        """Bounds fixing every x variable to the given assignment"""
        return {
            variable: (1, 1) if triple in assignment else (0, 0)
            for triple, variable in self.x.items()
        }

    def symmetry_fixings(self) -> Bounds:
        """Bounds removing cache relabelings.

        On each interval the r-th present job (counting from zero) may only
        use caches 0 to r.
        """
        bounds: Bounds = {}
        for k in range(len(self.problem.intervals)):
            for rank, i in enumerate(self.problem.windows.jobs_on(k)):
                for j in range(rank + 1, self.problem.core_count):
                    bounds[self.x[(i, j, k)]] = (0, 0)
        return bounds


def build_linearized_model(
        problem: Problem,
        config: SolverConfig
) -> LinearizedModel:
    """Build the linearized model of a problem.

    Args:
        problem (Problem): The problem.
        config (SolverConfig): The configuration holding the link policy,
            the interval weighting and the variable cap.

    Raises:
        ModelTooLargeError: If the model would exceed the variable cap.

    Returns:
        LinearizedModel: The model.
    """
    count = model_variable_count(problem)
    if count > config.variable_cap:
        raise ModelTooLargeError(
            f'the linearized model needs {count} variables, '
            f'the cap is {config.variable_cap}'
        )

    m = problem.core_count
    intervals = problem.intervals
    windows = problem.windows
    lp = LinearProgram(Sense.MAXIMIZE)

    w = add_weight_variables(lp, problem.jobs, windows)
    x: Dict[Triple, int] = {}
    s: Dict[Triple, int] = {}
    for i, k in windows.slots():
        for j in range(m):
            x[(i, j, k)] = lp.add_variable(('x', i, j, k), 0, 1)
            s[(i, j, k)] = lp.add_variable(('s', i, j, k), 0, 1)

    y: Dict[PairKey, int] = {}
    for k in range(len(intervals)):
        multiplier = problem.pair_weight(k, config.weight_by_interval)
        for i, i_prime, a in problem.pairs_on(k):
            for j in range(m):
                y[(i, i_prime, j, k)] = lp.add_variable(
                    ('y', i, i_prime, j, k),
                    0,
                    1,
                    a * multiplier
                )

    add_weight_rows(lp, problem.jobs, intervals, windows, m, w)

    for k in range(len(intervals)):
        for j in range(m):
            lp.add_row(
                {x[(i, j, k)]: problem.wss(i) for i in windows.jobs_on(k)},
                Relation.LE,
                problem.cache_capacity,
                ('eq4', j, k)
            )

    policy = config.link_policy
    for i, k in windows.slots():
        lp.add_row(
            {x[(i, j, k)]: 1 for j in range(m)},
            Relation.LE,
            1,
            ('eq5', i, k)
        )
        link = {x[(i, j, k)]: -1 for j in range(m)}
        link[w[(i, k)]] = 1
        lp.add_row(link, Relation.LE, 0, ('link', i, k))
        if policy.mode == LinkMode.EPSILON:
            floor = {x[(i, j, k)]: -policy.epsilon for j in range(m)}
            floor[w[(i, k)]] = 1
            lp.add_row(floor, Relation.GE, 0, ('link-eps', i, k))
        split = {s[(i, j, k)]: 1 for j in range(m)}
        split[w[(i, k)]] = -1
        lp.add_row(split, Relation.EQ, 0, ('split', i, k))
        for j in range(m):
            lp.add_row(
                {s[(i, j, k)]: 1, x[(i, j, k)]: -1},
                Relation.LE,
                0,
                ('split-x', i, j, k)
            )

    for k in range(len(intervals)):
        for j in range(m):
            lp.add_row(
                {s[(i, j, k)]: 1 for i in windows.jobs_on(k)},
                Relation.LE,
                1,
                ('core', j, k)
            )

    for (i, i_prime, j, k), variable in y.items():
        first, second = x[(i, j, k)], x[(i_prime, j, k)]
        lp.add_row({variable: 1, first: -1}, Relation.LE, 0, ('y-x', i, i_prime, j, k))
        lp.add_row({variable: 1, second: -1}, Relation.LE, 0, ('y-x2', i, i_prime, j, k))
        lp.add_row(
            {variable: 1, first: -1, second: -1},
            Relation.GE,
            -1,
            ('y-xx', i, i_prime, j, k)
        )

    LOGGER.debug(
        'linearized model: %s variables (%s products), %s rows',
        lp.variable_count,
        len(y),
        len(lp.rows)
    )
    return LinearizedModel(problem, lp, x, y, w, s)


def is_integral(value: Number, tolerance: float = 1e-6) -> bool:
    """True if the value is within tolerance of 0 or 1"""
    return min(abs(value), abs(1 - value)) <= tolerance


def fractionality(value: Number) -> float:
    """The distance of a value from the nearest of 0 and 1"""
    return float(min(abs(value), abs(1 - value)))


def floor_bound(bound: Number) -> int:
    """The largest integer objective a relaxation bound admits"""
    return math.floor(float(bound) + 1e-6)
