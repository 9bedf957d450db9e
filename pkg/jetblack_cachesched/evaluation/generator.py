"""Random instance generation"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np
from ruamel.yaml import YAML

from ..affinity import CommunicationFlow, DataSection
from ..tasks import Task, TaskSet, ensure_valid
from ..types import InstanceFormatError, ValidationError

from .types import GeneratorSpec, Instance

LOGGER = logging.getLogger(__name__)

SPEC_KEYS = {
    'tasks': 'task_count',
    'utilization': 'target_utilization',
    'cores': 'core_count',
    'cache_bytes': 'cache_capacity',
    'periods': 'periods',
    'wss_min': 'wss_min',
    'wss_max': 'wss_max',
    'density': 'density',
    'flows_min': 'flows_min',
    'flows_max': 'flows_max',
    'seed': 'seed'
}


def uunifast(rng: np.random.Generator, count: int, total: float) -> np.ndarray:
    """Split a total utilization uniformly over count tasks"""
    utilizations = np.empty(count)
    remaining = total
    for i in range(count - 1):
        following = remaining * rng.random() ** (1.0 / (count - i - 1))
        utilizations[i] = remaining - following
        remaining = following
    utilizations[-1] = remaining
    return utilizations


def uunifast_discard(
        rng: np.random.Generator,
        count: int,
        total: float,
        max_attempts: int
) -> np.ndarray:
    """Draw UUniFast splits until every utilization is at most one.

    Raises:
        ValidationError: If no split was found within the attempts.
    """
    for _ in range(max_attempts):
        utilizations = uunifast(rng, count, total)
        if (utilizations <= 1).all():
            return utilizations
    raise ValidationError([
        f'no split of utilization {total} over {count} tasks found in '
        f'{max_attempts} attempts'
    ])


def generate_task_set(spec: GeneratorSpec) -> Instance:
    """Generate a random instance.

    Utilizations come from UUniFast-discard, periods from the spec's menu
    and C = round(u * P) clamped to [1, P]. Each working set is split
    into a data and a bss section. Each task pair communicates with
    probability equal to the density, with a random number of flows in
    random directions.

    Args:
        spec (GeneratorSpec): The spec.

    Raises:
        ValidationError: If the target cannot be reached or the result does
            not validate.

    Returns:
        Instance: The instance, identical for identical specs.
    """
    rng = np.random.default_rng(spec.seed)
    utilizations = uunifast_discard(
        rng,
        spec.task_count,
        spec.target_utilization,
        spec.max_attempts
    )
    periods = rng.choice(np.array(spec.periods), size=spec.task_count)

    tasks: List[Task] = []
    manifest: Dict[str, List[DataSection]] = {}
    for task_id, (utilization, period) in enumerate(zip(utilizations, periods)):
        period = int(period)
        wcet = min(max(int(round(utilization * period)), 1), period)
        wss = int(rng.integers(spec.wss_min, spec.wss_max + 1))
        data = int(rng.integers(0, wss + 1))
        name = f'task{task_id}'
        manifest[name] = [
            DataSection('.data', data),
            DataSection('.bss', wss - data)
        ]
        tasks.append(Task(task_id, name, period, wcet, wss))

    flows: List[CommunicationFlow] = []
    for i in range(spec.task_count):
        for i_prime in range(i + 1, spec.task_count):
            if rng.random() >= spec.density:
                continue
            count = int(rng.integers(spec.flows_min, spec.flows_max + 1))
            for _ in range(count):
                if rng.random() < 0.5:
                    flows.append(CommunicationFlow(i, i_prime))
                else:
                    flows.append(CommunicationFlow(i_prime, i))

    task_set = TaskSet(tuple(tasks), spec.core_count, spec.cache_capacity)
    ensure_valid(task_set)
    LOGGER.debug(
        'generated %s tasks with U=%s and %s flows from %r',
        len(tasks),
        float(task_set.utilization),
        len(flows),
        spec
    )
    return Instance(task_set, manifest, flows, f'seed-{spec.seed}')


def generator_spec_from_mapping(data: Any) -> GeneratorSpec:
    """Build a spec from a mapping using the command line names.

    Raises:
        InstanceFormatError: For unknown or missing keys.
        ValidationError: If the spec is invalid.
    """
    if not isinstance(data, dict):
        raise InstanceFormatError('a generator spec must be a mapping')
    unknown = sorted(set(data) - set(SPEC_KEYS))
    if unknown:
        raise InstanceFormatError(f'unknown generator keys {unknown}')
    missing = [
        key for key in ('tasks', 'utilization', 'cores', 'cache_bytes')
        if key not in data
    ]
    if missing:
        raise InstanceFormatError(f'missing generator keys {missing}')
    kwargs = {SPEC_KEYS[key]: value for key, value in data.items()}
    return GeneratorSpec(
        kwargs.pop('task_count'),
        kwargs.pop('target_utilization'),
        kwargs.pop('core_count'),
        kwargs.pop('cache_capacity'),
        **kwargs
    )


def load_generator_spec(path: Union[str, Path]) -> GeneratorSpec:
    """Load a generator spec from a YAML file.

    Raises:
        InstanceFormatError: If the file cannot be read or parsed.
        ValidationError: If the spec is invalid.
    """
    yaml = YAML(typ='safe')
    try:
        with Path(path).open('rt', encoding='utf8') as file_ptr:
            data = yaml.load(file_ptr)
    except OSError as error:
        raise InstanceFormatError(f'cannot read {path}: {error}') from error
    except Exception as error:  # pylint: disable=broad-except
        raise InstanceFormatError(f'cannot parse {path}: {error}') from error
    return generator_spec_from_mapping(data)
