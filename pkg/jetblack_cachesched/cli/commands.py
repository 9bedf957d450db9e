"""Command implementations"""

from argparse import Namespace
from asyncio import Event
import logging
from pathlib import Path
import sys
from typing import List, Optional

from ..affinity import build_affinity
from ..evaluation import (
    ComparisonReport,
    GeneratorSpec,
    compare_solvers,
    format_report_csv,
    generate_task_set,
    load_generator_spec,
    mean_ratio,
    run_sweep,
    sweep_specs
)
from ..persistence import FileReportStore, SqlReportStore
from ..schedule import (
    build_schedule,
    count_migrations,
    count_preemptions,
    format_schedule_csv
)
from ..solvers import (
    LinkMode,
    LinkPolicy,
    SolveResult,
    SolverConfig,
    SolverMethod,
    build_problem,
    solve
)
from ..tasks import hyper_period, validate_task_set
from ..types import ReportStore, ValidationError
from ..utils import run_cancellable

from .instance_file import format_instance, load_instance
from .types import ExitCode

LOGGER = logging.getLogger(__name__)


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding='utf8')
        LOGGER.info('wrote %s', output)


def solver_config(args: Namespace, method: SolverMethod) -> SolverConfig:
    """The solver configuration from the command line"""
    link_policy = (
        LinkPolicy(LinkMode.EPSILON, args.epsilon)
        if args.epsilon_link
        else LinkPolicy()
    )
    return SolverConfig(
        method,
        time_limit=args.time_limit,
        node_limit=args.node_limit,
        seed=args.seed or 0,
        weight_by_interval=args.weight_by_interval,
        link_policy=link_policy
    )


def cmd_validate(args: Namespace) -> int:
    """Check an instance file"""
    instance = load_instance(args.input)
    diagnostics = validate_task_set(instance.task_set)
    try:
        build_affinity(instance.flows, len(instance.task_set))
    except ValidationError as error:
        diagnostics.extend(error.diagnostics)
    if diagnostics:
        for diagnostic in diagnostics:
            print(diagnostic, file=sys.stderr)
        return ExitCode.VALIDATION
    print(
        f'valid: {len(instance.task_set)} tasks, '
        f'H={hyper_period(instance.task_set)}, '
        f'U={float(instance.task_set.utilization):g}'
    )
    return ExitCode.OK


def _summary(result: SolveResult, migrations: int, preemptions: int) -> str:
    upper_bound = '' if result.upper_bound is None else f'{result.upper_bound:g}'
    return (
        f'Z={result.objective}\n'
        f'status={result.status.value}\n'
        f'upper_bound={upper_bound}\n'
        f'migrations={migrations}\n'
        f'preemptions={preemptions}\n'
    )


def cmd_solve(args: Namespace) -> int:
    """Solve an instance and export the schedule"""
    instance = load_instance(args.input)
    problem = build_problem(instance.task_set, instance.affinity)
    config = solver_config(args, SolverMethod.from_name(args.solver))
    result = solve(problem, config)

    if result.assignment is None or result.weights is None:
        print(f'status={result.status.value}', file=sys.stderr)
        return ExitCode.from_status(result.status)

    schedule = build_schedule(
        result.assignment,
        result.weights,
        problem.jobs,
        problem.intervals
    )
    migrations = count_migrations(schedule)
    preemptions = count_preemptions(schedule)
    if args.format == 'summary':
        text = _summary(result, migrations, preemptions)
    else:
        text = format_schedule_csv(
            schedule,
            {
                'Z': result.objective,
                'status': result.status.value,
                'migrations': migrations
            }
        )
    _write(text, args.output)
    return ExitCode.from_status(result.status)


def parse_methods(value: str) -> List[SolverMethod]:
    """Parse a comma separated method list.

    Raises:
        ValueError: If the list is empty or names an unknown method.
    """
    names = [name.strip() for name in value.split(',') if name.strip()]
    if not names:
        raise ValueError('no methods given')
    return [SolverMethod.from_name(name) for name in names]


def cmd_compare(args: Namespace) -> int:
    """Compare methods on an instance"""
    instance = load_instance(args.input)
    config = solver_config(args, SolverMethod.EXACT)
    report = compare_solvers(instance, args.methods, config)
    _write(format_report_csv(report), args.output)
    return ExitCode.OK if report.any_succeeded else ExitCode.INFEASIBLE


def generator_spec(args: Namespace) -> GeneratorSpec:
    """The generator spec from a file or the command line"""
    if args.spec_file is not None:
        spec = load_generator_spec(args.spec_file)
        return spec if args.seed is None else spec.with_seed(args.seed)
    missing = [
        flag for flag, value in (
            ('--tasks', args.tasks),
            ('--cores', args.cores),
            ('--utilization', args.utilization),
            ('--cache-bytes', args.cache_bytes)
        )
        if value is None
    ]
    if missing:
        raise ValidationError([f'{flag} is required' for flag in missing])
    return GeneratorSpec(
        args.tasks,
        args.utilization,
        args.cores,
        args.cache_bytes,
        periods=args.periods,
        wss_min=args.wss_min,
        wss_max=args.wss_max,
        density=args.density,
        flows_min=args.flows_min,
        flows_max=args.flows_max,
        seed=args.seed or 0
    )


def cmd_generate(args: Namespace) -> int:
    """Generate a random instance file"""
    instance = generate_task_set(generator_spec(args))
    _write(format_instance(instance), args.output)
    return ExitCode.OK


def _store(args: Namespace) -> Optional[ReportStore]:
    if args.database is not None:
        return SqlReportStore([args.database], {})
    if args.output is not None:
        return FileReportStore(args.output)
    return None


def cmd_sweep(args: Namespace) -> int:
    """Compare methods over generated instances"""
    spec = load_generator_spec(args.spec_file)
    if args.seed is not None:
        spec = spec.with_seed(args.seed)
    specs = sweep_specs(spec, args.count)
    config = solver_config(args, SolverMethod.EXACT)
    store = _store(args)

    async def main(cancellation_event: Event) -> List[ComparisonReport]:
        return await run_sweep(
            specs,
            args.methods,
            config,
            store,
            cancellation_event,
            args.workers
        )

    reports = run_cancellable(main)
    if store is None:
        for report in reports:
            sys.stdout.write(f'# {report.instance}\n')
            sys.stdout.write(format_report_csv(report))
    ratio = mean_ratio(reports)
    print(
        f'instances={len(reports)}\n'
        f'mean_greedy_exact_ratio={"" if ratio is None else f"{ratio:.6f}"}',
        file=sys.stderr
    )
    return ExitCode.OK
