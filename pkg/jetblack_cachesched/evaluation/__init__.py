"""Instance generation and solver comparison"""

from .comparison import (
    capture_ratio,
    compare_solvers,
    format_report_csv,
    relaxation_bound
)
from .generator import (
    generate_task_set,
    generator_spec_from_mapping,
    load_generator_spec,
    uunifast,
    uunifast_discard
)
from .sweep import mean_ratio, run_sweep, sweep_specs
from .types import (
    DEFAULT_PERIODS,
    REPORT_HEADER,
    ComparisonReport,
    GeneratorSpec,
    Instance,
    MethodReport
)

__all__ = [
    'capture_ratio',
    'compare_solvers',
    'format_report_csv',
    'relaxation_bound',

    'generate_task_set',
    'generator_spec_from_mapping',
    'load_generator_spec',
    'uunifast',
    'uunifast_discard',

    'mean_ratio',
    'run_sweep',
    'sweep_specs',

    'DEFAULT_PERIODS',
    'REPORT_HEADER',
    'ComparisonReport',
    'GeneratorSpec',
    'Instance',
    'MethodReport'
]
