"""The command line interface"""

from .instance_file import format_instance, load_instance, parse_instance
from .main import build_parser, main
from .types import ExitCode

__all__ = [
    'format_instance',
    'load_instance',
    'parse_instance',

    'build_parser',
    'main',

    'ExitCode'
]
