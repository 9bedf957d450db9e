"""Schedule types"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Tuple


class TimeSlice(NamedTuple):
    """A span of time a job executes on a core.

    Attributes:
        core (int): The core, which is also the cache.
        job_id (int): The job.
        task_id (int): The task of the job.
        start (Fraction): The start tick.
        end (Fraction): The end tick.
        interval (int): The interval containing the slice.
    """
    core: int
    job_id: int
    task_id: int
    start: Fraction
    end: Fraction
    interval: int

    @property
    def duration(self) -> Fraction:
        """The length of the slice"""
        return self.end - self.start


class Schedule:
    """A cyclic timetable of slices repeating every hyper-period"""

    def __init__(self, slices: Iterable[TimeSlice], hyper_period: int) -> None:
        self.slices: Tuple[TimeSlice, ...] = tuple(
            sorted(slices, key=lambda s: (s.core, s.start, s.job_id))
        )
        self.hyper_period = hyper_period

    def __iter__(self) -> Iterator[TimeSlice]:
        return iter(self.slices)

    def __len__(self) -> int:
        return len(self.slices)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Schedule) and
            self.hyper_period == other.hyper_period and
            self.slices == other.slices
        )

    def __repr__(self) -> str:
        return f'Schedule(hyper_period={self.hyper_period}, slices={len(self.slices)})'

    def slices_of(self, job_id: int) -> List[TimeSlice]:
        """The slices of a job in time order"""
        return sorted(
            (s for s in self.slices if s.job_id == job_id),
            key=lambda s: (s.start, s.core)
        )

    def job_ids(self) -> List[int]:
        """Every job with at least one slice, ascending"""
        return sorted({s.job_id for s in self.slices})

    def core_utilization(self) -> Dict[int, Fraction]:
        """The busy fraction of each core with at least one slice"""
        busy: Dict[int, Fraction] = {}
        for s in self.slices:
            busy[s.core] = busy.get(s.core, Fraction(0)) + s.duration
        return {
            core: total / self.hyper_period
            for core, total in sorted(busy.items())
        }
