"""Linear program types"""

from enum import Enum, auto
from fractions import Fraction
import math
from typing import (
    Dict,
    Hashable,
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union
)

Number = Union[int, float, Fraction]

DEFAULT_LP_TOLERANCE = 1e-9
DEFAULT_CHECK_TOLERANCE = 1e-6
DEFAULT_PIVOT_CAP = 10 ** 6


class Relation(Enum):
    """The relation of a constraint row"""
    LE = '<='
    EQ = '='
    GE = '>='


class Sense(Enum):
    """The optimization direction"""
    MAXIMIZE = auto()
    MINIMIZE = auto()


class LpStatus(Enum):
    """The outcome of a solve"""
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNBOUNDED = 'unbounded'
    ITERATION_LIMIT = 'iteration-limit'


class Constraint(NamedTuple):
    """A row: sum(coefficients[v] * x[v]) relation rhs"""
    coefficients: Mapping[int, Number]
    relation: Relation
    rhs: Number
    name: Hashable = None


class LinearProgram:
    """A linear program with bounded variables and sparse rows"""

    def __init__(self, sense: Sense = Sense.MAXIMIZE) -> None:
        self.sense = sense
        self.objective: List[Number] = []
        self.lows: List[Number] = []
        self.highs: List[Number] = []
        self.labels: List[Hashable] = []
        self.rows: List[Constraint] = []
        self._index: Dict[Hashable, int] = {}

    @property
    def variable_count(self) -> int:
        """The number of variables"""
        return len(self.objective)

    def add_variable(
            self,
            label: Hashable,
            low: Number = 0,
            high: Number = math.inf,
            cost: Number = 0
    ) -> int:
        """Add a variable.

        Args:
            label (Hashable): A unique label.
            low (Number, optional): The lower bound. Defaults to 0.
            high (Number, optional): The upper bound. Defaults to inf.
            cost (Number, optional): The objective coefficient.

        Returns:
            int: The variable index.
        """
        if label in self._index:
            raise ValueError(f'duplicate variable {label!r}')
        index = len(self.objective)
        self.objective.append(cost)
        self.lows.append(low)
        self.highs.append(high)
        self.labels.append(label)
        self._index[label] = index
        return index

    def index(self, label: Hashable) -> int:
        """The index of the variable with the given label"""
        return self._index[label]

    def has_variable(self, label: Hashable) -> bool:
        """True if a variable with the label exists"""
        return label in self._index

    def add_row(
            self,
            coefficients: Mapping[int, Number],
            relation: Relation,
            rhs: Number,
            name: Hashable = None
    ) -> int:
        """Add a constraint row and return its index"""
        self.rows.append(
            Constraint(dict(coefficients), relation, rhs, name)
        )
        return len(self.rows) - 1

    def rows_named(self, prefix: str) -> Iterator[Constraint]:
        """The rows whose name is a tuple starting with prefix"""
        for row in self.rows:
            if isinstance(row.name, tuple) and row.name[0] == prefix:
                yield row

    def with_bounds(
            self,
            overrides: Mapping[int, Tuple[Number, Number]]
    ) -> 'LinearProgram':
        """A copy sharing rows and objective, with some bounds replaced"""
        other = LinearProgram(self.sense)
        other.objective = self.objective
        other.labels = self.labels
        other.rows = self.rows
        other._index = self._index
        other.lows = list(self.lows)
        other.highs = list(self.highs)
        for index, (low, high) in overrides.items():
            other.lows[index] = low
            other.highs[index] = high
        return other

    def validate(self) -> None:
        """Check that rows and bounds are well formed.

        Raises:
            ValueError: If a row references an unknown variable, a bound is
                not finite from below, or a lower bound exceeds its upper
                bound.
        """
        count = self.variable_count
        for row in self.rows:
            for index in row.coefficients:
                if not 0 <= index < count:
                    raise ValueError(
                        f'row {row.name!r} references variable {index}'
                    )
        for index, (low, high) in enumerate(zip(self.lows, self.highs)):
            if low == -math.inf:
                raise ValueError(
                    f'variable {self.labels[index]!r} has no lower bound'
                )
            if low > high:
                raise ValueError(
                    f'variable {self.labels[index]!r} has bounds '
                    f'{low} > {high}'
                )


class LpOutcome(NamedTuple):
    """The result of solving a linear program"""
    status: LpStatus
    values: Optional[Sequence[Number]] = None
    objective: Optional[Number] = None
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        """True if the program was solved to optimality"""
        return self.status == LpStatus.OPTIMAL


class WeightMatrix:
    """The share of a processor each job receives on each interval.

    Entries default to zero, which is the value outside a job's window.
    """

    def __init__(
            self,
            weights: Optional[Mapping[Tuple[int, int], Number]] = None
    ) -> None:
        self._weights: Dict[Tuple[int, int], Number] = dict(weights or {})

    def __getitem__(self, key: Tuple[int, int]) -> Number:
        return self._weights.get(key, 0)

    def __contains__(self, key: object) -> bool:
        return key in self._weights

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightMatrix) and
            self._weights == other._weights
        )

    def __repr__(self) -> str:
        return f'WeightMatrix({self._weights!r})'

    def items(self) -> Iterator[Tuple[Tuple[int, int], Number]]:
        """The explicit entries in (job, interval) order"""
        return iter(sorted(self._weights.items()))

    def as_dict(self) -> Dict[Tuple[int, int], Number]:
        """A copy of the explicit entries"""
        return dict(self._weights)
