"""Linear programming"""

from .simplex import solve_lp
from .types import (
    DEFAULT_CHECK_TOLERANCE,
    DEFAULT_LP_TOLERANCE,
    DEFAULT_PIVOT_CAP,
    Constraint,
    LinearProgram,
    LpOutcome,
    LpStatus,
    Number,
    Relation,
    Sense,
    WeightMatrix
)
from .weights import (
    build_weight_lp,
    check_weights,
    fluid_weights,
    weights_from_values
)

__all__ = [
    'solve_lp',

    'DEFAULT_CHECK_TOLERANCE',
    'DEFAULT_LP_TOLERANCE',
    'DEFAULT_PIVOT_CAP',
    'Constraint',
    'LinearProgram',
    'LpOutcome',
    'LpStatus',
    'Number',
    'Relation',
    'Sense',
    'WeightMatrix',

    'build_weight_lp',
    'check_weights',
    'fluid_weights',
    'weights_from_values'
]
