"""Odd-iterate Collatz toolkit.

Exact arithmetic and classification for the odd-to-odd step
x -> (3x+1)/2**alpha, closed-form predecessor tables covering every odd
integer, trajectory construction by direct iteration and by table lookup,
layered tree generation rooted at 1, alpha-run classification, and
average-drift statistics, all cross-checked against brute-force walks.
"""

from .analysis import (
    DECREASE_SERIES_LIMIT,
    INCREASE_SERIES_LIMIT,
    AlphaBucket,
    AlphaChain,
    AlphaDensityReport,
    DriftReport,
    TheoremScanReport,
    alpha_chain,
    alpha_chain_length,
    alpha_table_entry,
    drift_report,
    drift_series_decrease,
    drift_series_decrease_parts,
    drift_series_increase,
    empirical_alpha_density,
    empirical_drift,
    empirical_iterate_class_ratio,
    verify_theorems,
)
from .core import (
    DEFAULT_MAX_STEPS,
    Classification,
    DomainError,
    Kind,
    MaxStepsExceeded,
    SyracuseResult,
    alpha_of,
    alpha_residue_class,
    classify,
    is_terminal,
    pre_terminal,
    reverse_to_starter,
    syracuse_step,
    terminal,
)
from .tables import (
    PredecessorRow,
    TableCoordinate,
    TableId,
    column_alpha,
    column_header,
    locate,
    predecessor_row,
    row_iterate,
    table_entry,
    table_window_csv,
)
from .trajectory import (
    FieldStats,
    TrajectoryRecord,
    TrajectoryStats,
    record_json,
    stats_csv,
    trajectory_direct,
    trajectory_lookup,
    trajectory_stats,
)
from .tree import (
    TreeLayer,
    TreeNode,
    TreeSegment,
    build_layers,
    export_tree,
    iter_nodes,
    predecessors_of,
)

__version__ = "0.1.0"

__all__ = [
    "DECREASE_SERIES_LIMIT",
    "DEFAULT_MAX_STEPS",
    "INCREASE_SERIES_LIMIT",
    "AlphaBucket",
    "AlphaChain",
    "AlphaDensityReport",
    "Classification",
    "DomainError",
    "DriftReport",
    "FieldStats",
    "Kind",
    "MaxStepsExceeded",
    "PredecessorRow",
    "SyracuseResult",
    "TableCoordinate",
    "TableId",
    "TheoremScanReport",
    "TrajectoryRecord",
    "TrajectoryStats",
    "TreeLayer",
    "TreeNode",
    "TreeSegment",
    "alpha_chain",
    "alpha_chain_length",
    "alpha_of",
    "alpha_residue_class",
    "alpha_table_entry",
    "build_layers",
    "classify",
    "column_alpha",
    "column_header",
    "drift_report",
    "drift_series_decrease",
    "drift_series_decrease_parts",
    "drift_series_increase",
    "empirical_alpha_density",
    "empirical_drift",
    "empirical_iterate_class_ratio",
    "export_tree",
    "is_terminal",
    "iter_nodes",
    "locate",
    "pre_terminal",
    "predecessor_row",
    "predecessors_of",
    "record_json",
    "reverse_to_starter",
    "row_iterate",
    "stats_csv",
    "syracuse_step",
    "table_entry",
    "table_window_csv",
    "terminal",
    "trajectory_direct",
    "trajectory_lookup",
    "trajectory_stats",
    "verify_theorems",
]
