"""Tests for comparing solver methods"""

from asyncio import Event

import pytest

from jetblack_cachesched.cli import load_instance
from jetblack_cachesched.evaluation import (
    REPORT_HEADER,
    GeneratorSpec,
    Instance,
    capture_ratio,
    compare_solvers,
    format_report_csv,
    mean_ratio,
    run_sweep,
    sweep_specs
)
from jetblack_cachesched.solvers import SolverConfig, SolverMethod

from ..instances import WORKED_INSTANCE_PATH, make_task_set, small_instance
from ..mocks import MockReportStore

EXACT_AND_GREEDY = [SolverMethod.EXACT, SolverMethod.GREEDY]


def test_worked_instance() -> None:
    """Test exact and greedy both reach the optimum with no gap"""
    instance = load_instance(WORKED_INSTANCE_PATH)
    report = compare_solvers(instance, EXACT_AND_GREEDY, SolverConfig())

    assert report.instance == 'worked_instance'
    assert report.ideal == 8
    assert report.bound == 8
    assert len(report) == 2
    for row in report:
        assert row.objective == 8
        assert row.gap == 0
        assert row.capture_ratio == 1
        assert row.violations == 0
        assert row.peak_wss == 16384
    exact = report.row('exact')
    assert exact is not None and exact.status == 'optimal'
    greedy = report.row('greedy')
    assert greedy is not None and greedy.status == 'feasible'


def test_zero_affinity() -> None:
    """Test every method captures everything when there is nothing to
    capture"""
    instance = Instance(
        make_task_set([(4, 1, 1024), (4, 1, 1024)], 2, 4096),
        {},
        []
    )
    methods = [
        SolverMethod.EXACT,
        SolverMethod.GREEDY,
        SolverMethod.LOCAL_SEARCH,
        SolverMethod.WSS_BALANCE
    ]
    report = compare_solvers(instance, methods, SolverConfig())
    assert [row.objective for row in report] == [0, 0, 0, 0]
    assert [row.capture_ratio for row in report] == [1.0] * 4
    assert capture_ratio(0, 0) == 1.0
    assert capture_ratio(3, 4) == 0.75


def test_method_errors_are_recorded() -> None:
    """Test a method hitting its guard does not stop the others"""
    instance = load_instance(WORKED_INSTANCE_PATH)
    report = compare_solvers(
        instance,
        [SolverMethod.BRUTE_FORCE, SolverMethod.GREEDY],
        SolverConfig(space_cap=10)
    )
    brute = report.row('brute')
    assert brute is not None
    assert brute.status == 'error'
    assert brute.objective is None
    assert brute.error is not None and 'search space' in brute.error
    assert report.any_succeeded


@pytest.mark.parametrize('seed', range(5))
def test_small_instances(seed: int) -> None:
    """Test every solution checks out and stays under the bound"""
    instance = small_instance(seed)
    methods = [
        SolverMethod.EXACT,
        SolverMethod.GREEDY,
        SolverMethod.LOCAL_SEARCH,
        SolverMethod.BRUTE_FORCE
    ]
    report = compare_solvers(instance, methods, SolverConfig())
    for row in report:
        assert row.violations == 0
        if row.objective is not None and report.bound is not None:
            assert row.objective <= report.bound + 1e-6


def test_format_report() -> None:
    """Test the report header and cell formats"""
    instance = load_instance(WORKED_INSTANCE_PATH)
    report = compare_solvers(instance, EXACT_AND_GREEDY, SolverConfig())
    lines = format_report_csv(report).splitlines()
    assert lines[0] == ','.join(REPORT_HEADER)
    cells = lines[1].split(',')
    assert cells[0] == 'exact'
    assert cells[1] == '8'
    assert cells[2] == '8.000000'
    assert cells[3] == '0.000000'
    assert cells[6] == 'optimal'
    assert cells[7] == '1.000000'


def test_mean_ratio() -> None:
    """Test the greedy to exact ratio over a set of reports"""
    instance = load_instance(WORKED_INSTANCE_PATH)
    report = compare_solvers(instance, EXACT_AND_GREEDY, SolverConfig())
    assert mean_ratio([report]) == 1.0
    assert mean_ratio([]) is None


@pytest.mark.asyncio
async def test_run_sweep() -> None:
    """Test a sweep saves one report per instance in order"""
    spec = GeneratorSpec(3, 1.0, 2, 16384, periods=[2, 4], seed=5)
    specs = sweep_specs(spec, 3)
    assert [s.seed for s in specs] == [5, 6, 7]

    store = MockReportStore()
    reports = await run_sweep(
        specs,
        EXACT_AND_GREEDY,
        SolverConfig(),
        store,
        max_workers=2
    )
    assert [report.instance for report in reports] == [
        'seed-5', 'seed-6', 'seed-7'
    ]
    assert store.reports == reports


@pytest.mark.asyncio
async def test_run_sweep_cancelled() -> None:
    """Test nothing is started once the sweep is cancelled"""
    cancellation_event = Event()
    cancellation_event.set()
    store = MockReportStore()
    reports = await run_sweep(
        sweep_specs(GeneratorSpec(3, 1.0, 2, 16384, seed=1), 4),
        EXACT_AND_GREEDY,
        SolverConfig(),
        store,
        cancellation_event
    )
    assert reports == []
    assert store.reports == []


@pytest.mark.asyncio
async def test_run_sweep_skips_failed_instances() -> None:
    """Test an instance that cannot be generated does not stop the sweep"""
    good = GeneratorSpec(3, 1.0, 2, 16384, periods=[2, 4], seed=5)
    # two tasks cannot share a utilization of two unless both are exactly one
    unreachable = GeneratorSpec(
        2,
        2.0,
        2,
        16384,
        periods=[2, 4],
        max_attempts=5,
        seed=9
    )
    store = MockReportStore()
    reports = await run_sweep(
        [good, unreachable, good.with_seed(6)],
        EXACT_AND_GREEDY,
        SolverConfig(),
        store,
        max_workers=2
    )
    assert [report.instance for report in reports] == ['seed-5', 'seed-6']
    assert store.reports == reports
