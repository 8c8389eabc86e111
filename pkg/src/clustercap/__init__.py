"""Exact capacity and storage/repair-bandwidth tradeoff analysis for
clustered storage systems with separate nodes."""

from ._kernel import active_backend, compiled_available
from .capacity import (
    ComparisonVerdict,
    Outcome,
    TradeoffPoint,
    TradeoffResult,
    UnsupportedE,
    Unstorable,
    Variant,
    WeightSequence,
    capacity_achiever,
    compare_separate,
    min_alpha,
    mincut_by_location,
    system_capacity,
    tradeoff_curve,
    weight_sequence,
)
from .mincut import CutReport, mincut, part_incoming_weights, relative_location
from .model import (
    BandwidthOrder,
    ClusterOrder,
    ConfigError,
    DCRange,
    DInvalid,
    Infeasible,
    KRange,
    NodeCount,
    NodeParams,
    Rational,
    RepairParams,
    SelectedNodeDistribution,
    SystemConfig,
    enumerate_distributions,
    enumerate_orders,
    format_rational,
    parse_rational,
    validate_config,
)
from .oracle import (
    BruteForceResult,
    BudgetExceeded,
    FlowGraph,
    VerificationReport,
    brute_force_capacity,
    build_ifg,
    ifg_mincut,
    verify_claims,
)
from .sequencing import (
    S0Range,
    SeparatePositions,
    horizontal_selection,
    optimal_order_with_separate_at,
    vertical_order,
)

__version__ = "0.1.0"

__all__ = [
    "BandwidthOrder",
    "BruteForceResult",
    "BudgetExceeded",
    "ClusterOrder",
    "ComparisonVerdict",
    "ConfigError",
    "CutReport",
    "DCRange",
    "DInvalid",
    "FlowGraph",
    "Infeasible",
    "KRange",
    "NodeCount",
    "NodeParams",
    "Outcome",
    "Rational",
    "RepairParams",
    "S0Range",
    "SelectedNodeDistribution",
    "SeparatePositions",
    "SystemConfig",
    "TradeoffPoint",
    "TradeoffResult",
    "UnsupportedE",
    "Unstorable",
    "Variant",
    "VerificationReport",
    "WeightSequence",
    "active_backend",
    "brute_force_capacity",
    "build_ifg",
    "capacity_achiever",
    "compare_separate",
    "compiled_available",
    "enumerate_distributions",
    "enumerate_orders",
    "format_rational",
    "horizontal_selection",
    "ifg_mincut",
    "min_alpha",
    "mincut",
    "mincut_by_location",
    "optimal_order_with_separate_at",
    "parse_rational",
    "part_incoming_weights",
    "relative_location",
    "system_capacity",
    "tradeoff_curve",
    "validate_config",
    "verify_claims",
    "vertical_order",
    "weight_sequence",
]
