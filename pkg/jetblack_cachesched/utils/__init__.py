"""Utilities"""

from .cancellation import register_cancellation_event, run_cancellable

__all__ = [
    'register_cancellation_event',
    'run_cancellable'
]
