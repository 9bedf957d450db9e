"""Affinity types"""

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Tuple

import numpy as np

from ..types import ValidationError


@dataclass(frozen=True)
class DataSection:
    """A named data section of a task's binary"""
    name: str
    size: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValidationError(
                [f'section {self.name!r}: size {self.size} must be >= 0']
            )


DataSectionManifest = Mapping[str, Sequence[DataSection]]


@dataclass(frozen=True)
class CommunicationFlow:
    """A directed communication flow between two tasks"""
    src_task: int
    dst_task: int


class AffinityMatrix:
    """The symmetric, zero diagonal count of flows between task pairs"""

    def __init__(self, matrix: np.ndarray) -> None:
        matrix = np.array(matrix, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError('an affinity matrix must be square')
        if (matrix != matrix.T).any():
            raise ValueError('an affinity matrix must be symmetric')
        if np.diagonal(matrix).any():
            raise ValueError('an affinity matrix must have a zero diagonal')
        if (matrix < 0).any():
            raise ValueError('affinities must be non-negative')
        matrix.setflags(write=False)
        self._matrix = matrix

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return int(self._matrix[key])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AffinityMatrix) and
            np.array_equal(self._matrix, other._matrix)
        )

    def __repr__(self) -> str:
        return f'AffinityMatrix({self._matrix.tolist()})'

    @property
    def task_count(self) -> int:
        """The number of tasks"""
        return self._matrix.shape[0]

    @property
    def array(self) -> np.ndarray:
        """A read-only view of the matrix"""
        return self._matrix

    def pairs(self) -> Iterator[Tuple[int, int, int]]:
        """Every (i, i', a) with i < i' and a > 0"""
        rows, columns = np.nonzero(np.triu(self._matrix, 1))
        for i, i_prime in zip(rows.tolist(), columns.tolist()):
            yield i, i_prime, int(self._matrix[i, i_prime])

    def mass(self, task_id: int) -> int:
        """The total affinity of a task with all others"""
        return int(self._matrix[task_id].sum())

    def total(self) -> int:
        """The sum over unordered pairs"""
        return int(np.triu(self._matrix, 1).sum())

    def scaled(self, factor: int) -> 'AffinityMatrix':
        """Every affinity multiplied by a non-negative integer"""
        return AffinityMatrix(self._matrix * factor)
