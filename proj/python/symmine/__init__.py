"""Induced pattern mining with automatically generated symmetry-breaking
restrictions: schedule exploration, cost-based selection, and a nested-loop
engine over sorted CSR adjacency."""

from ._core import (
    CountOverflowError,
    Graph,
    InputError,
    IoError,
    Pattern,
    Plan,
    analyze_schedules,
    automorphisms,
    compile_plan,
    connected_patterns,
    count,
    count_pattern,
    distinct_schedules,
    enumerate,
    motif_counts,
    named_pattern,
    oracle_induced_count,
    oracle_mapping_count,
    parse_pattern,
    schedules_equivalent,
    select_schedule,
    valid_schedules,
)

__all__ = [
    "CountOverflowError",
    "Graph",
    "InputError",
    "IoError",
    "Pattern",
    "Plan",
    "analyze_schedules",
    "automorphisms",
    "compile_plan",
    "connected_patterns",
    "count",
    "count_pattern",
    "distinct_schedules",
    "enumerate",
    "motif_counts",
    "named_pattern",
    "oracle_induced_count",
    "oracle_mapping_count",
    "parse_pattern",
    "schedules_equivalent",
    "select_schedule",
    "valid_schedules",
]

__version__ = "0.1.0"
