"""Tests for instance documents"""

import json
from pathlib import Path
from typing import Any, Dict

import pytest

from jetblack_cachesched.cli import format_instance, load_instance, parse_instance
from jetblack_cachesched.types import InstanceFormatError, ValidationError

from ..instances import WORKED_INSTANCE_PATH


def _document() -> Dict[str, Any]:
    return {
        'platform': {'cores': 1, 'l1_capacity_bytes': 1024},
        'tasks': [
            {
                'name': 'A',
                'period': 4,
                'wcet': 1,
                'sections': [{'name': '.data', 'size_bytes': 512}]
            },
            {'name': 'B', 'period': 8, 'wcet': 2, 'sections': []}
        ],
        'flows': [{'src': 'A', 'dst': 'B'}]
    }


def test_load_worked_instance() -> None:
    """Test the bundled instance reads as expected"""
    instance = load_instance(WORKED_INSTANCE_PATH)
    assert instance.name == 'worked_instance'
    assert [task.wss for task in instance.task_set] == [8192, 4096, 4096]
    assert instance.task_set.core_count == 2
    assert instance.affinity[0, 1] == 3
    assert instance.affinity[0, 2] == 1
    assert instance.affinity[1, 2] == 0


def test_format_round_trip() -> None:
    """Test a formatted instance reads back the same"""
    instance = load_instance(WORKED_INSTANCE_PATH)
    again = parse_instance(format_instance(instance), instance.name)
    assert again.task_set == instance.task_set
    assert list(again.flows) == list(instance.flows)


@pytest.mark.parametrize('change', [
    lambda doc: doc.pop('flows'),
    lambda doc: doc.update(extra=1),
    lambda doc: doc['platform'].update(cores='2'),
    lambda doc: doc['tasks'][0].update(period=4.5),
    lambda doc: doc['tasks'][0].update(wcet=True),
    lambda doc: doc['tasks'][0]['sections'][0].update(size_bytes=-1),
    lambda doc: doc['flows'].append({'src': 'A', 'dst': 'C'}),
    lambda doc: doc.update(tasks={}),
])
def test_malformed(change: Any) -> None:
    """Test malformed documents are format errors"""
    document = _document()
    change(document)
    with pytest.raises(InstanceFormatError):
        parse_instance(json.dumps(document))


def test_not_json() -> None:
    """Test text that is not JSON"""
    with pytest.raises(InstanceFormatError):
        parse_instance('{"platform": ')
    with pytest.raises(InstanceFormatError):
        parse_instance('[]')


def test_duplicate_keys() -> None:
    """Test a key given twice is refused"""
    text = json.dumps(_document())[:-1] + ', "flows": []}'
    with pytest.raises(InstanceFormatError):
        parse_instance(text)


def test_duplicate_task_names() -> None:
    """Test two tasks with one name fail validation"""
    document = _document()
    document['tasks'][1]['name'] = 'A'
    with pytest.raises(ValidationError):
        parse_instance(json.dumps(document))


def test_self_flow() -> None:
    """Test a task cannot communicate with itself"""
    document = _document()
    document['flows'] = [{'src': 'A', 'dst': 'A'}]
    instance = parse_instance(json.dumps(document))
    with pytest.raises(ValidationError):
        instance.affinity  # pylint: disable=pointless-statement


def test_missing_file(tmp_path: Path) -> None:
    """Test an unreadable file is a format error"""
    with pytest.raises(InstanceFormatError):
        load_instance(tmp_path / 'missing.json')
