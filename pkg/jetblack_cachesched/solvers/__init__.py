"""Cache assignment solvers"""

from .baseline import solve_wss_balance
from .branch_and_bound import solve_exact
from .brute_force import brute_force, search_space_size
from .checks import check_assignment
from .greedy import solve_greedy
from .linearized import (
    LinearizedModel,
    build_linearized_model,
    model_variable_count
)
from .local_search import local_search
from .objective import (
    group_objective,
    ideal_objective,
    objective_value,
    problem_objective
)
from .problem import Problem, build_problem
from .realize import fluid_realization, realize_weights, weights_feasible
from .solve import solve
from .types import (
    DEFAULT_EPSILON,
    DEFAULT_NODE_LIMIT,
    DEFAULT_SPACE_CAP,
    DEFAULT_TIME_LIMIT,
    DEFAULT_VARIABLE_CAP,
    Assignment,
    LinkMode,
    LinkPolicy,
    SolveResult,
    SolveStatus,
    SolverConfig,
    SolverMethod
)

__all__ = [
    'solve_wss_balance',
    'solve_exact',
    'brute_force',
    'search_space_size',
    'check_assignment',
    'solve_greedy',

    'LinearizedModel',
    'build_linearized_model',
    'model_variable_count',

    'local_search',

    'group_objective',
    'ideal_objective',
    'objective_value',
    'problem_objective',

    'Problem',
    'build_problem',

    'fluid_realization',
    'realize_weights',
    'weights_feasible',

    'solve',

    'DEFAULT_EPSILON',
    'DEFAULT_NODE_LIMIT',
    'DEFAULT_SPACE_CAP',
    'DEFAULT_TIME_LIMIT',
    'DEFAULT_VARIABLE_CAP',
    'Assignment',
    'LinkMode',
    'LinkPolicy',
    'SolveResult',
    'SolveStatus',
    'SolverConfig',
    'SolverMethod'
]
