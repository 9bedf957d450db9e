"""Time providers used to enforce solver time limits"""

from abc import ABCMeta, abstractmethod
import time


class TimeProvider(metaclass=ABCMeta):
    """A base class for time providers"""

    @abstractmethod
    def now(self) -> float:
        """The current time in seconds from an arbitrary origin"""


class DefaultTimeProvider(TimeProvider):
    """The default time provider, backed by the monotonic clock"""

    def now(self) -> float:
        return time.monotonic()


class Deadline:
    """A point in time after which a solver must stop"""

    def __init__(self, time_provider: TimeProvider, time_limit: float) -> None:
        self.time_provider = time_provider
        self.start = time_provider.now()
        self.time_limit = time_limit

    @property
    def elapsed(self) -> float:
        """The seconds elapsed since the deadline was created"""
        return self.time_provider.now() - self.start

    def expired(self) -> bool:
        """True if the time limit has been reached"""
        return self.elapsed >= self.time_limit
