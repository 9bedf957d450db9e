"""Evaluation types"""

from __future__ import annotations

from typing import (
    Iterator,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple
)

from ..affinity import (
    AffinityMatrix,
    CommunicationFlow,
    DataSection,
    build_affinity
)
from ..tasks import TaskSet
from ..types import ValidationError

DEFAULT_PERIODS: Tuple[int, ...] = (2, 4, 5, 8, 10, 16, 20)
DEFAULT_MAX_ATTEMPTS = 10_000

REPORT_HEADER = [
    'method',
    'Z',
    'bound',
    'gap',
    'runtime_ms',
    'migrations',
    'status',
    'capture_ratio',
    'peak_wss'
]


class Instance(NamedTuple):
    """A task set with its data sections and communication flows"""
    task_set: TaskSet
    manifest: Mapping[str, Sequence[DataSection]]
    flows: Sequence[CommunicationFlow]
    name: str = 'instance'

    @property
    def affinity(self) -> AffinityMatrix:
        """The affinity matrix of the flows"""
        return build_affinity(self.flows, len(self.task_set))


class GeneratorSpec:
    """The parameters of a random instance"""

    def __init__(
            self,
            task_count: int,
            target_utilization: float,
            core_count: int,
            cache_capacity: int,
            *,
            periods: Sequence[int] = DEFAULT_PERIODS,
            wss_min: int = 0,
            wss_max: Optional[int] = None,
            density: float = 0.5,
            flows_min: int = 1,
            flows_max: int = 3,
            seed: int = 0,
            max_attempts: int = DEFAULT_MAX_ATTEMPTS
    ) -> None:
        self.task_count = task_count
        self.target_utilization = target_utilization
        self.core_count = core_count
        self.cache_capacity = cache_capacity
        self.periods = tuple(periods)
        self.wss_min = wss_min
        self.wss_max = cache_capacity // 2 if wss_max is None else wss_max
        self.density = density
        self.flows_min = flows_min
        self.flows_max = flows_max
        self.seed = seed
        self.max_attempts = max_attempts
        diagnostics = self.diagnostics()
        if diagnostics:
            raise ValidationError(diagnostics)

    def diagnostics(self) -> List[str]:
        """Every reason the spec cannot produce a valid instance"""
        problems = []
        if self.task_count < 1:
            problems.append(f'task count {self.task_count} must be >= 1')
        if self.core_count < 1:
            problems.append(f'core count {self.core_count} must be >= 1')
        if self.cache_capacity < 1:
            problems.append(
                f'cache capacity {self.cache_capacity} must be >= 1'
            )
        if self.target_utilization <= 0:
            problems.append(
                f'target utilization {self.target_utilization} must be > 0'
            )
        if self.target_utilization > self.core_count:
            problems.append(
                f'target utilization {self.target_utilization} exceeds '
                f'{self.core_count} cores'
            )
        if self.target_utilization > self.task_count:
            problems.append(
                f'target utilization {self.target_utilization} is '
                f'unreachable with {self.task_count} tasks of utilization '
                f'at most 1'
            )
        if not self.periods or any(period < 1 for period in self.periods):
            problems.append(f'periods {list(self.periods)} must be >= 1')
        if not 0 <= self.wss_min <= self.wss_max <= self.cache_capacity:
            problems.append(
                f'wss range [{self.wss_min}, {self.wss_max}] must lie within '
                f'[0, {self.cache_capacity}]'
            )
        if not 0 <= self.density <= 1:
            problems.append(f'density {self.density} must be in [0, 1]')
        if not 0 <= self.flows_min <= self.flows_max:
            problems.append(
                f'flow range [{self.flows_min}, {self.flows_max}] is empty'
            )
        return problems

    def with_seed(self, seed: int) -> GeneratorSpec:
        """A copy with another seed"""
        return GeneratorSpec(
            self.task_count,
            self.target_utilization,
            self.core_count,
            self.cache_capacity,
            periods=self.periods,
            wss_min=self.wss_min,
            wss_max=self.wss_max,
            density=self.density,
            flows_min=self.flows_min,
            flows_max=self.flows_max,
            seed=seed,
            max_attempts=self.max_attempts
        )

    def __repr__(self) -> str:
        return (
            f'GeneratorSpec(tasks={self.task_count}, '
            f'U={self.target_utilization}, cores={self.core_count}, '
            f'seed={self.seed})'
        )


class MethodReport(NamedTuple):
    """The outcome of one method on one instance"""
    method: str
    status: str
    objective: Optional[int] = None
    bound: Optional[float] = None
    gap: Optional[float] = None
    runtime_ms: float = 0.0
    migrations: Optional[int] = None
    capture_ratio: Optional[float] = None
    peak_wss: Optional[int] = None
    violations: int = 0
    error: Optional[str] = None

    def as_row(self) -> List[str]:
        """The cells of a report row"""
        return [
            self.method,
            _cell(self.objective),
            _cell(self.bound, '{:.6f}'),
            _cell(self.gap, '{:.6f}'),
            f'{self.runtime_ms:.3f}',
            _cell(self.migrations),
            self.status,
            _cell(self.capture_ratio, '{:.6f}'),
            _cell(self.peak_wss)
        ]


def _cell(value: object, fmt: str = '{}') -> str:
    return '' if value is None else fmt.format(value)


class ComparisonReport:
    """The outcome of several methods on one instance"""

    def __init__(
            self,
            instance: str,
            rows: Sequence[MethodReport],
            ideal: int,
            bound: Optional[float]
    ) -> None:
        self.instance = instance
        self.rows = tuple(rows)
        self.ideal = ideal
        self.bound = bound

    def __iter__(self) -> Iterator[MethodReport]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f'ComparisonReport({self.instance!r}, methods={len(self.rows)})'

    def row(self, method: str) -> Optional[MethodReport]:
        """The row of a method, if it was run"""
        for row in self.rows:
            if row.method == method:
                return row
        return None

    @property
    def any_succeeded(self) -> bool:
        """True if at least one method produced a solution"""
        return any(row.objective is not None for row in self.rows)
