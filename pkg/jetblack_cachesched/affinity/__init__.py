"""Working set sizes and affinities"""

from .affinity import build_affinity, compute_wss, job_affinity
from .types import (
    AffinityMatrix,
    CommunicationFlow,
    DataSection,
    DataSectionManifest
)

__all__ = [
    'build_affinity',
    'compute_wss',
    'job_affinity',

    'AffinityMatrix',
    'CommunicationFlow',
    'DataSection',
    'DataSectionManifest'
]
