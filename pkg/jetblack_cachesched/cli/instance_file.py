"""Reading and writing instance documents"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

from ..affinity import CommunicationFlow, DataSection, compute_wss
from ..evaluation import Instance
from ..tasks import Task, TaskSet
from ..types import InstanceFormatError, ValidationError

DOCUMENT_KEYS = {'platform', 'tasks', 'flows'}
PLATFORM_KEYS = {'cores', 'l1_capacity_bytes'}
TASK_KEYS = {'name', 'period', 'wcet', 'sections'}
SECTION_KEYS = {'name', 'size_bytes'}
FLOW_KEYS = {'src', 'dst'}


def _reject_duplicates(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result: Dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise InstanceFormatError(f'duplicate key {key!r}')
        result[key] = value
    return result


def _object(value: Any, keys: set, where: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise InstanceFormatError(f'{where}: expected an object')
    unknown = sorted(set(value) - keys)
    if unknown:
        raise InstanceFormatError(f'{where}: unknown keys {unknown}')
    missing = sorted(keys - set(value))
    if missing:
        raise InstanceFormatError(f'{where}: missing keys {missing}')
    return value


def _list(value: Any, where: str) -> Sequence[Any]:
    if not isinstance(value, list):
        raise InstanceFormatError(f'{where}: expected a list')
    return value


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError(f'{where}: expected an integer')
    return value


def _str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise InstanceFormatError(f'{where}: expected a string')
    return value


def parse_instance(text: str, name: str = 'instance') -> Instance:
    """Parse an instance document.

    Args:
        text (str): The JSON text.
        name (str, optional): The instance name.

    Raises:
        InstanceFormatError: If the document is malformed, has unknown or
            duplicate keys, negative section sizes or flows naming unknown
            tasks.
        ValidationError: If two tasks share a name or a task communicates
            with itself.

    Returns:
        Instance: The instance. The task set is not yet validated.
    """
    try:
        document = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as error:
        raise InstanceFormatError(f'invalid JSON: {error}') from error

    document = _object(document, DOCUMENT_KEYS, 'document')
    platform = _object(document['platform'], PLATFORM_KEYS, 'platform')
    core_count = _int(platform['cores'], 'platform.cores')
    cache_capacity = _int(
        platform['l1_capacity_bytes'],
        'platform.l1_capacity_bytes'
    )

    manifest: Dict[str, List[DataSection]] = {}
    timing: List[Tuple[str, int, int]] = []
    duplicates = []
    for index, item in enumerate(_list(document['tasks'], 'tasks')):
        where = f'tasks[{index}]'
        task = _object(item, TASK_KEYS, where)
        task_name = _str(task['name'], f'{where}.name')
        if task_name in manifest:
            duplicates.append(f'task {task_name!r}: duplicate name')
        sections = []
        for position, section in enumerate(
                _list(task['sections'], f'{where}.sections')
        ):
            section_where = f'{where}.sections[{position}]'
            section = _object(section, SECTION_KEYS, section_where)
            size = _int(section['size_bytes'], f'{section_where}.size_bytes')
            if size < 0:
                raise InstanceFormatError(
                    f'{section_where}: size {size} must be >= 0'
                )
            sections.append(
                DataSection(_str(section['name'], f'{section_where}.name'), size)
            )
        manifest[task_name] = sections
        timing.append((
            task_name,
            _int(task['period'], f'{where}.period'),
            _int(task['wcet'], f'{where}.wcet')
        ))
    if duplicates:
        raise ValidationError(duplicates)

    wss = compute_wss(manifest)
    task_set = TaskSet(
        tuple(
            Task(task_id, task_name, period, wcet, wss[task_name])
            for task_id, (task_name, period, wcet) in enumerate(timing)
        ),
        core_count,
        cache_capacity
    )

    ids = {task.name: task.id for task in task_set}
    flows = []
    for index, item in enumerate(_list(document['flows'], 'flows')):
        flow = _object(item, FLOW_KEYS, f'flows[{index}]')
        src = _str(flow['src'], f'flows[{index}].src')
        dst = _str(flow['dst'], f'flows[{index}].dst')
        for end in (src, dst):
            if end not in ids:
                raise InstanceFormatError(
                    f'flows[{index}]: unknown task {end!r}'
                )
        flows.append(CommunicationFlow(ids[src], ids[dst]))

    return Instance(task_set, manifest, flows, name)


def load_instance(path: Union[str, Path]) -> Instance:
    """Read an instance document from a file.

    Raises:
        InstanceFormatError: If the file cannot be read or parsed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf8')
    except (OSError, UnicodeDecodeError) as error:
        raise InstanceFormatError(f'cannot read {path}: {error}') from error
    return parse_instance(text, path.stem)


def format_instance(instance: Instance) -> str:
    """Render an instance as a JSON document"""
    names = [task.name for task in instance.task_set]
    document = {
        'platform': {
            'cores': instance.task_set.core_count,
            'l1_capacity_bytes': instance.task_set.cache_capacity
        },
        'tasks': [
            {
                'name': task.name,
                'period': task.period,
                'wcet': task.wcet,
                'sections': [
                    {'name': section.name, 'size_bytes': section.size}
                    for section in instance.manifest.get(task.name, ())
                ]
            }
            for task in instance.task_set
        ],
        'flows': [
            {'src': names[flow.src_task], 'dst': names[flow.dst_task]}
            for flow in instance.flows
        ]
    }
    return json.dumps(document, indent=2) + '\n'
