"""Solver types"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
    Union
)

from ..lp import DEFAULT_CHECK_TOLERANCE, DEFAULT_LP_TOLERANCE, DEFAULT_PIVOT_CAP
from ..lp import WeightMatrix
from ..time_provider import DefaultTimeProvider, TimeProvider

DEFAULT_EPSILON = Fraction(1, 1024)
DEFAULT_VARIABLE_CAP = 200_000
DEFAULT_SPACE_CAP = 10 ** 7
DEFAULT_TIME_LIMIT = 60.0
DEFAULT_NODE_LIMIT = 100_000

Slot = Tuple[int, int]
Triple = Tuple[int, int, int]


class LinkMode(Enum):
    """How job weights are linked to cache assignments"""
    ONE_SIDED = 'one-sided'
    EPSILON = 'epsilon'


class SolverMethod(Enum):
    """The available solvers"""
    EXACT = 'exact'
    GREEDY = 'greedy'
    LOCAL_SEARCH = 'local'
    BRUTE_FORCE = 'brute'
    WSS_BALANCE = 'wss-balance'

    @classmethod
    def from_name(cls, name: str) -> SolverMethod:
        """Convert from a command line name.

        Args:
            name (str): The name, e.g. 'exact' or 'local-search'.

        Raises:
            ValueError: If there was no mapping.

        Returns:
            SolverMethod: The method.
        """
        if name == 'local-search':
            return cls.LOCAL_SEARCH
        elif name == 'brute-force':
            return cls.BRUTE_FORCE
        return cls(name)


class SolveStatus(Enum):
    """The outcome of a solve"""
    OPTIMAL = 'optimal'
    FEASIBLE = 'feasible'
    INFEASIBLE = 'infeasible'
    LIMIT_REACHED = 'limit-reached'


class LinkPolicy:
    """The link between weights and assignments.

    In one-sided mode a job with a positive weight on an interval must be
    assigned to a cache there. In epsilon mode an assigned job must
    additionally receive a weight of at least epsilon.
    """

    def __init__(
            self,
            mode: LinkMode = LinkMode.ONE_SIDED,
            epsilon: Union[Fraction, float] = DEFAULT_EPSILON
    ) -> None:
        if mode == LinkMode.EPSILON and not 0 < epsilon <= 1:
            raise ValueError(f'epsilon {epsilon} must be in (0, 1]')
        self.mode = mode
        self.epsilon = (
            Fraction(str(epsilon)) if isinstance(epsilon, float)
            else Fraction(epsilon)
        )

    def __repr__(self) -> str:
        if self.mode == LinkMode.EPSILON:
            return f'LinkPolicy({self.mode.value}, epsilon={self.epsilon})'
        return f'LinkPolicy({self.mode.value})'


class SolverConfig:
    """The solver configuration"""

    def __init__(
            self,
            method: SolverMethod = SolverMethod.EXACT,
            *,
            time_limit: float = DEFAULT_TIME_LIMIT,
            node_limit: int = DEFAULT_NODE_LIMIT,
            seed: int = 0,
            weight_by_interval: bool = False,
            link_policy: Optional[LinkPolicy] = None,
            tolerance: float = DEFAULT_LP_TOLERANCE,
            check_tolerance: float = DEFAULT_CHECK_TOLERANCE,
            variable_cap: int = DEFAULT_VARIABLE_CAP,
            space_cap: int = DEFAULT_SPACE_CAP,
            pivot_cap: int = DEFAULT_PIVOT_CAP,
            time_provider: Optional[TimeProvider] = None
    ) -> None:
        for name, value in (
                ('time_limit', time_limit),
                ('node_limit', node_limit),
                ('variable_cap', variable_cap),
                ('space_cap', space_cap),
                ('pivot_cap', pivot_cap)
        ):
            if value <= 0:
                raise ValueError(f'{name} must be positive, got {value}')
        self.method = method
        self.time_limit = time_limit
        self.node_limit = node_limit
        self.seed = seed
        self.weight_by_interval = weight_by_interval
        self.link_policy = link_policy or LinkPolicy()
        self.tolerance = tolerance
        self.check_tolerance = check_tolerance
        self.variable_cap = variable_cap
        self.space_cap = space_cap
        self.pivot_cap = pivot_cap
        self.time_provider = time_provider or DefaultTimeProvider()

    def with_method(self, method: SolverMethod) -> SolverConfig:
        """A copy of the configuration using another method"""
        return SolverConfig(
            method,
            time_limit=self.time_limit,
            node_limit=self.node_limit,
            seed=self.seed,
            weight_by_interval=self.weight_by_interval,
            link_policy=self.link_policy,
            tolerance=self.tolerance,
            check_tolerance=self.check_tolerance,
            variable_cap=self.variable_cap,
            space_cap=self.space_cap,
            pivot_cap=self.pivot_cap,
            time_provider=self.time_provider
        )


class Assignment:
    """The jobs each cache holds on each interval, as (job, cache, interval)
    triples"""

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        self._triples = frozenset(triples)
        self._by_slot: Dict[Slot, List[int]] = {}
        self._by_cache: Dict[Slot, List[int]] = {}
        for i, j, k in sorted(self._triples):
            self._by_slot.setdefault((i, k), []).append(j)
            self._by_cache.setdefault((j, k), []).append(i)

    @classmethod
    def from_mapping(cls, placement: Mapping[Slot, int]) -> Assignment:
        """Build from a mapping of (job, interval) to cache"""
        return cls((i, j, k) for (i, k), j in placement.items())

    def __contains__(self, triple: object) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self._triples))

    def __len__(self) -> int:
        return len(self._triples)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Assignment) and self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f'Assignment({sorted(self._triples)})'

    def caches_of(self, job_id: int, k: int) -> Tuple[int, ...]:
        """Every cache the job is assigned to on interval k"""
        return tuple(self._by_slot.get((job_id, k), ()))

    def cache_of(self, job_id: int, k: int) -> Optional[int]:
        """The (lowest) cache the job is assigned to on interval k"""
        caches = self._by_slot.get((job_id, k))
        return caches[0] if caches else None

    def jobs_on(self, cache: int, k: int) -> Tuple[int, ...]:
        """The jobs assigned to a cache on interval k, ascending"""
        return tuple(self._by_cache.get((cache, k), ()))

    def groups(self) -> Iterator[Tuple[int, int, Tuple[int, ...]]]:
        """Every non-empty (cache, interval, jobs) group"""
        for (j, k), jobs in sorted(self._by_cache.items()):
            yield j, k, tuple(jobs)

    def slots(self) -> Iterator[Slot]:
        """Every assigned (job, interval)"""
        return iter(sorted(self._by_slot))

    def as_mapping(self) -> Dict[Slot, int]:
        """The (job, interval) to cache mapping, lowest cache on conflict"""
        return {slot: caches[0] for slot, caches in self._by_slot.items()}

    def without(self, slots: Iterable[Slot]) -> Assignment:
        """A copy with the given (job, interval) slots unassigned"""
        removed = set(slots)
        return Assignment(
            (i, j, k) for i, j, k in self._triples if (i, k) not in removed
        )

    def relabeled(self, permutation: Mapping[int, int]) -> Assignment:
        """A copy with every cache index mapped through the permutation"""
        return Assignment(
            (i, permutation[j], k) for i, j, k in self._triples
        )


class SolveResult:
    """The outcome of a solver"""

    def __init__(
            self,
            method: SolverMethod,
            status: SolveStatus,
            assignment: Optional[Assignment] = None,
            weights: Optional[WeightMatrix] = None,
            objective: Optional[int] = None,
            upper_bound: Optional[float] = None,
            *,
            model_objective: Optional[int] = None,
            nodes: int = 0,
            lp_solves: int = 0,
            runtime: float = 0.0,
            trace: Optional[List[int]] = None
    ) -> None:
        self.method = method
        self.status = status
        self.assignment = assignment
        self.weights = weights
        self.objective = objective
        self.upper_bound = upper_bound
        self.model_objective = (
            model_objective if model_objective is not None else objective
        )
        self.nodes = nodes
        self.lp_solves = lp_solves
        self.runtime = runtime
        self.trace = trace or []

    @property
    def has_solution(self) -> bool:
        """True if an assignment and weights are present"""
        return self.assignment is not None and self.weights is not None

    def __str__(self) -> str:
        return (
            f'<SolveResult: method={self.method.value}, '
            f'status={self.status.value}, Z={self.objective}, '
            f'upper_bound={self.upper_bound}, nodes={self.nodes}>'
        )
