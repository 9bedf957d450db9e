"""Comparing methods over many generated instances"""

import asyncio
from asyncio import Event
from concurrent.futures import ThreadPoolExecutor
import logging
from typing import List, Optional, Sequence

from ..solvers import SolverConfig, SolverMethod
from ..types import CacheSchedError, ReportStore

from .comparison import compare_solvers
from .generator import generate_task_set
from .types import ComparisonReport, GeneratorSpec

LOGGER = logging.getLogger(__name__)


def sweep_specs(spec: GeneratorSpec, count: int) -> List[GeneratorSpec]:
    """The spec repeated with consecutive seeds"""
    return [spec.with_seed(spec.seed + offset) for offset in range(count)]


def mean_ratio(
        reports: Sequence[ComparisonReport],
        numerator: SolverMethod = SolverMethod.GREEDY,
        denominator: SolverMethod = SolverMethod.EXACT
) -> Optional[float]:
    """The mean objective ratio of two methods over the reports where both
    succeeded, counting 0/0 as one"""
    ratios = []
    for report in reports:
        top, bottom = report.row(numerator.value), report.row(denominator.value)
        if (
                top is None or bottom is None or
                top.objective is None or bottom.objective is None
        ):
            continue
        if bottom.objective == 0:
            ratios.append(1.0 if top.objective == 0 else 0.0)
        else:
            ratios.append(top.objective / bottom.objective)
    return sum(ratios) / len(ratios) if ratios else None


def _evaluate(
        spec: GeneratorSpec,
        methods: Sequence[SolverMethod],
        config: SolverConfig,
        cancellation_event: Event
) -> Optional[ComparisonReport]:
    if cancellation_event.is_set():
        return None
    try:
        instance = generate_task_set(spec)
        return compare_solvers(instance, methods, config)
    except CacheSchedError as error:
        LOGGER.warning('skipping %r: %s', spec, error)
        return None


async def run_sweep(
        specs: Sequence[GeneratorSpec],
        methods: Sequence[SolverMethod],
        config: SolverConfig,
        store: Optional[ReportStore] = None,
        cancellation_event: Optional[Event] = None,
        max_workers: Optional[int] = None
) -> List[ComparisonReport]:
    """Compare the methods on an instance generated from each spec.

    Instances are evaluated concurrently in a thread pool. Instances not
    yet started when the cancellation event is set are skipped, as are
    instances that cannot be generated or solved. The reports keep the
    order of the specs.

    Args:
        specs (Sequence[GeneratorSpec]): The instance specs.
        methods (Sequence[SolverMethod]): The methods.
        config (SolverConfig): The shared configuration.
        store (Optional[ReportStore], optional): Where to save the reports.
        cancellation_event (Optional[Event], optional): Stops the sweep.
        max_workers (Optional[int], optional): The pool size.

    Returns:
        List[ComparisonReport]: The completed reports.
    """
    if cancellation_event is None:
        cancellation_event = Event()
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        outcomes = await asyncio.gather(*(
            loop.run_in_executor(
                executor,
                _evaluate,
                spec,
                methods,
                config,
                cancellation_event
            )
            for spec in specs
        ))
    reports = [report for report in outcomes if report is not None]
    if len(reports) < len(specs):
        LOGGER.info(
            'sweep completed %s of %s instances',
            len(reports),
            len(specs)
        )

    if store is not None:
        await store.save_reports(reports)

    ratio = mean_ratio(reports)
    if ratio is not None:
        LOGGER.info('mean greedy/exact ratio %.6f', ratio)
    return reports
