"""Working set sizes and communication affinities"""

import logging
from typing import Dict, Iterable, Optional

import numpy as np

from ..tasks import Job
from ..types import ValidationError

from .types import AffinityMatrix, CommunicationFlow, DataSectionManifest

LOGGER = logging.getLogger(__name__)


def compute_wss(
        manifest: DataSectionManifest,
        task_names: Optional[Iterable[str]] = None
) -> Dict[str, int]:
    """The working set size of each task as the sum of its section sizes.

    Args:
        manifest (DataSectionManifest): The sections of each task.
        task_names (Optional[Iterable[str]], optional): If given, every one
            of these tasks must be in the manifest.

    Raises:
        ValidationError: If a task is missing from the manifest.

    Returns:
        Dict[str, int]: The WSS of each task in bytes.
    """
    if task_names is not None:
        missing = [name for name in task_names if name not in manifest]
        if missing:
            raise ValidationError(
                [f'task {name!r}: missing from the manifest' for name in missing]
            )
    return {
        name: sum(section.size for section in sections)
        for name, sections in manifest.items()
    }


def build_affinity(
        flows: Iterable[CommunicationFlow],
        task_count: int
) -> AffinityMatrix:
    """Count the flows between each unordered pair of tasks.

    Args:
        flows (Iterable[CommunicationFlow]): The flows, in either direction.
        task_count (int): The number of tasks.

    Raises:
        ValidationError: For a self flow or an unknown task.

    Returns:
        AffinityMatrix: The affinity matrix.
    """
    matrix = np.zeros((task_count, task_count), dtype=np.int64)
    for flow in flows:
        for task_id in (flow.src_task, flow.dst_task):
            if not 0 <= task_id < task_count:
                raise ValidationError([f'flow references unknown task {task_id}'])
        if flow.src_task == flow.dst_task:
            raise ValidationError(
                [f'flow from task {flow.src_task} to itself']
            )
        matrix[flow.src_task, flow.dst_task] += 1
        matrix[flow.dst_task, flow.src_task] += 1
    return AffinityMatrix(matrix)


def job_affinity(affinity: AffinityMatrix, job: Job, other: Job) -> int:
    """The affinity of two jobs, inherited from their tasks"""
    if job.task_id == other.task_id:
        return 0
    return affinity[job.task_id, other.task_id]
