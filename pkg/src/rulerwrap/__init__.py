"""Ruler wrapping: exact minimizers, a maximal partitioner, a streaming
greedy, and a reproducible experiment harness.

The hot scan runs in a compiled extension when it is built; a pure-Python
twin is selected automatically otherwise (see ``rulerwrap.backend``).
"""

from .backend import active_backend, compiled_available
from .core import (
    ArcPair,
    DomainError,
    EmptyInput,
    InfeasiblePlan,
    NonPositiveValue,
    Ruler,
    RulerWrapError,
    TooLarge,
    TotalOverflow,
    Variant,
    WrapAnswer,
    WrapPlan,
    plan_from_folds,
    prefix_positions,
    reconstruct_folds,
)
from .experiments import ExperimentConfig, TrialStats, occupancy_growth, run_random_trials
from .greedy import (
    GreedyResult,
    GreedyState,
    RatioReport,
    adversarial_family,
    greedy_plan,
    greedy_wrap,
    ratio_experiment,
)
from .oracle import enumerate_feasible, oracle_max_parts, oracle_min_length
from .partition import PartitionResult, max_parts_partition
from .render import render_svg
from .wrap import (
    LinearRun,
    LinearRunStats,
    TraceStep,
    quadratic_answer,
    unrestricted_final_scan,
    wrap_linear,
    wrap_nlogn,
    wrap_quadratic,
)

__version__ = "0.1.0"

__all__ = [
    "ArcPair",
    "DomainError",
    "EmptyInput",
    "ExperimentConfig",
    "GreedyResult",
    "GreedyState",
    "InfeasiblePlan",
    "LinearRun",
    "LinearRunStats",
    "NonPositiveValue",
    "PartitionResult",
    "RatioReport",
    "Ruler",
    "RulerWrapError",
    "TooLarge",
    "TotalOverflow",
    "TraceStep",
    "TrialStats",
    "Variant",
    "WrapAnswer",
    "WrapPlan",
    "active_backend",
    "adversarial_family",
    "compiled_available",
    "enumerate_feasible",
    "greedy_plan",
    "greedy_wrap",
    "max_parts_partition",
    "occupancy_growth",
    "oracle_max_parts",
    "oracle_min_length",
    "plan_from_folds",
    "prefix_positions",
    "quadratic_answer",
    "ratio_experiment",
    "reconstruct_folds",
    "render_svg",
    "run_random_trials",
    "unrestricted_final_scan",
    "wrap_linear",
    "wrap_nlogn",
    "wrap_quadratic",
]
