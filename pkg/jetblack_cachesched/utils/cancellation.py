"""Utilities for handling cancellation"""

import asyncio
from asyncio import AbstractEventLoop, Event
import logging
import signal
from typing import Awaitable, Callable, TypeVar

LOGGER = logging.getLogger(__name__)

T = TypeVar('T')


def _cancel(
        signame: str,
        signum: int,
        cancellation_event: Event
) -> None:
    msg = f'received signal {signame}, stopping after the running instances'
    if signum == signal.SIGINT:
        LOGGER.info(msg)
    else:
        LOGGER.warning(msg)
    cancellation_event.set()


def register_cancellation_event(
        cancellation_event: Event,
        loop: AbstractEventLoop
) -> None:
    """Set the event when the process is interrupted or terminated"""
    for signame in ('SIGINT', 'SIGTERM'):
        signum = getattr(signal, signame)
        try:
            loop.add_signal_handler(
                signum,
                _cancel,
                signame,
                signum,
                cancellation_event
            )
        except NotImplementedError:
            LOGGER.debug('no handler for %s on this platform', signame)


def run_cancellable(main: Callable[[Event], Awaitable[T]]) -> T:
    """Run a coroutine with an event set by SIGINT or SIGTERM.

    Args:
        main (Callable[[Event], Awaitable[T]]): Builds the coroutine from
            the cancellation event.

    Returns:
        T: The result of the coroutine.
    """
    async def _run() -> T:
        cancellation_event = Event()
        register_cancellation_event(
            cancellation_event,
            asyncio.get_running_loop()
        )
        return await main(cancellation_event)

    return asyncio.run(_run())
