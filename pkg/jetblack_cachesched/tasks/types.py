"""Task model types"""

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

DEFAULT_HYPER_PERIOD_GUARD = 2 ** 32


@dataclass(frozen=True)
class Task:
    """A periodic, implicit-deadline task.

    Attributes:
        id (int): The index of the task in its task set.
        name (str): A label.
        period (int): The period in ticks.
        wcet (int): The worst case execution time in ticks.
        wss (int): The working set size in bytes.
    """
    id: int
    name: str
    period: int
    wcet: int
    wss: int = 0

    @property
    def utilization(self) -> Fraction:
        """The exact utilization C/P"""
        return Fraction(self.wcet, self.period)


@dataclass(frozen=True)
class TaskSet:
    """A set of tasks on a platform of identical cores with private L1 caches.

    Attributes:
        tasks (Tuple[Task, ...]): The tasks, ordered by id.
        core_count (int): The number of cores (and L1 data caches).
        cache_capacity (int): The capacity of each L1 data cache in bytes.
    """
    tasks: Tuple[Task, ...]
    core_count: int
    cache_capacity: int

    def __len__(self) -> int:
        return len(self.tasks)

    def __iter__(self) -> Iterator[Task]:
        return iter(self.tasks)

    def __getitem__(self, task_id: int) -> Task:
        return self.tasks[task_id]

    @property
    def utilization(self) -> Fraction:
        """The exact total utilization"""
        return sum((task.utilization for task in self.tasks), Fraction(0))

    def task_by_name(self, name: str) -> Task:
        """Find a task by name.

        Args:
            name (str): The task name.

        Raises:
            KeyError: If there is no such task.

        Returns:
            Task: The task.
        """
        for task in self.tasks:
            if task.name == name:
                return task
        raise KeyError(name)


@dataclass(frozen=True)
class Job:
    """An instance of a task released within the hyper-period"""
    job_id: int
    task_id: int
    release: int
    deadline: int
    wcet: int

    @property
    def period(self) -> int:
        """The period of the owning task"""
        return self.deadline - self.release


class IntervalSet:
    """The partition of the hyper-period at job releases"""

    def __init__(self, boundaries: Sequence[int]) -> None:
        self.boundaries: Tuple[int, ...] = tuple(boundaries)
        self.durations: Tuple[int, ...] = tuple(
            end - start
            for start, end in zip(self.boundaries, self.boundaries[1:])
        )

    def __len__(self) -> int:
        return len(self.durations)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(zip(self.boundaries, self.boundaries[1:]))

    def __repr__(self) -> str:
        return f'IntervalSet({list(self.boundaries)})'

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntervalSet) and
            self.boundaries == other.boundaries
        )

    @property
    def hyper_period(self) -> int:
        """The end of the last interval"""
        return self.boundaries[-1]

    def start(self, k: int) -> int:
        """The start tick of interval k"""
        return self.boundaries[k]

    def end(self, k: int) -> int:
        """The end tick of interval k"""
        return self.boundaries[k + 1]

    def index_of(self, tick: int) -> int:
        """The index of the boundary at tick.

        Raises:
            ValueError: If the tick is not a boundary.
        """
        index = bisect_left(self.boundaries, tick)
        if index == len(self.boundaries) or self.boundaries[index] != tick:
            raise ValueError(f'{tick} is not an interval boundary')
        return index


class JobWindows:
    """For every job the contiguous run of intervals its window covers"""

    def __init__(self, windows: Sequence[range], interval_count: int) -> None:
        self._windows: Tuple[range, ...] = tuple(windows)
        present: List[List[int]] = [[] for _ in range(interval_count)]
        for job_id, window in enumerate(self._windows):
            for k in window:
                present[k].append(job_id)
        self._present: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(jobs) for jobs in present
        )

    def __getitem__(self, job_id: int) -> range:
        return self._windows[job_id]

    def __len__(self) -> int:
        return len(self._windows)

    def __iter__(self) -> Iterator[range]:
        return iter(self._windows)

    def jobs_on(self, k: int) -> Tuple[int, ...]:
        """The ids of the jobs whose window contains interval k, ascending"""
        return self._present[k]

    def slots(self) -> Iterator[Tuple[int, int]]:
        """Every (job, interval) pair with the interval in the job's window"""
        for job_id, window in enumerate(self._windows):
            for k in window:
                yield job_id, k

    @property
    def slot_count(self) -> int:
        """The number of (job, interval) pairs"""
        return sum(len(window) for window in self._windows)
