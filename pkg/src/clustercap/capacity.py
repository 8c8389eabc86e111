"""Closed-form capacity, sorted weight sequences, and the storage vs
repair-bandwidth tradeoff.

The capacity-achieving repair sequence yields k incoming weights whose
sorted values have piecewise closed forms in (k, R, d_cross, beta_intra,
beta_cross); capacity is sum(min(alpha, w*_i)).  Inverting that piecewise
linear function of alpha gives the minimum per-node storage for a target
file size.  Closed forms cover E in {0, 1}; larger E is routed to the
brute-force oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .mincut import mincut
from .model import (
    ConfigError,
    NodeParams,
    RationalLike,
    RepairParams,
    SystemConfig,
    parse_rational,
)
from .sequencing import (
    SeparatePositions,
    horizontal_selection,
    optimal_order_with_separate_at,
    vertical_order,
)


class UnsupportedE(ConfigError):
    """No closed form for this separate-node count; use the oracle."""


class Unstorable(ValueError):
    """Requested file size exceeds the saturated capacity sum(w*)."""


class Variant(enum.Enum):
    """Which system family a weight sequence describes."""

    CLUSTER_DSS = "ClusterDSS"
    CSN_ONE_SEPARATE = "CSN-OneSeparate"


@dataclass(frozen=True)
class WeightSequence:
    """The k sorted (ascending) incoming weights of the capacity-achieving
    repair sequence."""

    values: tuple[Fraction, ...]
    variant: Variant

    @property
    def k(self) -> int:
        return len(self.values)

    @property
    def total(self) -> Fraction:
        return sum(self.values, start=Fraction(0))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def cluster_weight_values(
    k: int, R: int, d_cross: int, beta_intra: Fraction, beta_cross: Fraction
) -> tuple[Fraction, ...]:
    """Sorted weights for a pure cluster system (no separate selected node).

    Index i below runs over the sequence positions of the achieving order;
    the result is stored at k - i + 1 so it comes out ascending.
    """
    q = k // R
    m = q + 1
    first = m * (k - q * R)
    w = [Fraction(0)] * k
    for i in range(1, k + 1):
        if i <= first:
            c = _ceil_div(i, m)
            a, b = R - c, d_cross - i + c
        else:
            f = (k - i) // q
            a, b = f, d_cross + R - i - f
        assert a >= 0 and b >= 0, f"negative coefficient at i={i}: a={a} b={b}"
        w[k - i] = a * beta_intra + b * beta_cross
    values = tuple(w)
    assert all(x <= y for x, y in zip(values, values[1:])), "weights not ascending"
    return values


def csn_weight_values(
    k: int, R: int, d_cross: int, beta_intra: Fraction, beta_cross: Fraction
) -> tuple[Fraction, ...]:
    """Sorted weights with one separate selected node (pinned at the last
    position, which minimizes the min-cut)."""
    q = (k - 1) // R
    m = q + 1
    first = m * (k - 1 - q * R)
    w = [Fraction(0)] * k
    for i in range(1, k + 1):
        if i == k:
            a, b = 0, R + d_cross - k
        elif i <= first:
            c = _ceil_div(i, m)
            a, b = R - c, d_cross - i + c
        else:
            f = (k - i - 1) // q
            a, b = f, d_cross + R - i - f
        assert a >= 0 and b >= 0, f"negative coefficient at i={i}: a={a} b={b}"
        w[k - i] = a * beta_intra + b * beta_cross
    values = tuple(w)
    assert all(x <= y for x, y in zip(values, values[1:])), "weights not ascending"
    return values


def weight_sequence(cfg: SystemConfig, variant: Variant) -> WeightSequence:
    """Closed-form sorted weight sequence for the requested variant."""
    nd, rp = cfg.nodes, cfg.repair
    if variant is Variant.CSN_ONE_SEPARATE and nd.E < 1:
        raise UnsupportedE("CSN-OneSeparate weights need E >= 1")
    fn = cluster_weight_values if variant is Variant.CLUSTER_DSS else csn_weight_values
    return WeightSequence(
        values=fn(nd.k, nd.R, rp.d_cross, rp.beta_intra, rp.beta_cross),
        variant=variant,
    )


def _variant_for(nodes: NodeParams) -> Variant:
    if nodes.E == 0:
        return Variant.CLUSTER_DSS
    if nodes.E == 1:
        return Variant.CSN_ONE_SEPARATE
    raise UnsupportedE(f"no closed form for E={nodes.E}; use the brute-force oracle")


def system_capacity(cfg: SystemConfig) -> Fraction:
    """Exact capacity: sum of min(alpha, w*_i) over the matching variant's
    weight sequence.  E must be 0 or 1."""
    ws = weight_sequence(cfg, _variant_for(cfg.nodes))
    alpha = cfg.repair.alpha
    return sum((min(alpha, w) for w in ws.values), start=Fraction(0))


def capacity_achiever(cfg: SystemConfig):
    """The (distribution, order) pair realizing system_capacity."""
    if cfg.nodes.E == 0:
        dist = horizontal_selection(cfg.nodes, 0)
        order = vertical_order(dist, SeparatePositions.none())
    else:
        dist = horizontal_selection(cfg.nodes, 1)
        order = optimal_order_with_separate_at(cfg.nodes, cfg.nodes.k)
    return dist, order


def mincut_by_location(cfg: SystemConfig, j: int) -> Fraction:
    """Min-cut of the optimal sequence with the separate node at position
    j; non-increasing in j."""
    if cfg.nodes.E < 1:
        raise ConfigError("separate-node location sweep needs E >= 1")
    order = optimal_order_with_separate_at(cfg.nodes, j)
    return mincut(cfg, order).value


def min_alpha(weights: WeightSequence, size: RationalLike) -> Fraction:
    """Least per-node storage alpha with capacity >= size.

    Piecewise inversion of C(alpha) = sum(min(alpha, w*_i)): on the segment
    alpha in [w*_{i-1}, w*_i] the capacity is sum_{j<i} w*_j + (k-i+1)*alpha.
    The first segment covers size in [0, k*w*_1].
    """
    size = parse_rational(size)
    if size < 0:
        raise ValueError(f"size={size} must be >= 0")
    values = weights.values
    k = len(values)
    prefix = Fraction(0)
    for i, w in enumerate(values, start=1):
        # capacity at alpha = w is prefix + (k - i + 1) * w
        if size <= prefix + (k - i + 1) * w:
            return (size - prefix) / (k - i + 1)
        prefix += w
    raise Unstorable(f"size={size} exceeds saturated capacity {prefix}")


@dataclass(frozen=True)
class TradeoffPoint:
    """One point of the storage/bandwidth tradeoff: the minimum alpha that
    stores `size` at cross-cluster bandwidth beta_cross."""

    beta_cross: Fraction
    alpha_star: Fraction
    size: Fraction


@dataclass(frozen=True)
class TradeoffResult:
    points: tuple[TradeoffPoint, ...]
    unstorable: tuple[Fraction, ...]  # grid values whose capacity saturates below size
    variant: Variant
    d_cross: int


def tradeoff_curve(
    nodes: NodeParams,
    d_cross: int,
    tau: RationalLike,
    size: RationalLike,
    grid: list[Fraction],
) -> TradeoffResult:
    """Minimum-storage curve over a beta_cross grid with beta_intra =
    tau * beta_cross; grid points that cannot store `size` at all are
    omitted and reported."""
    tau = parse_rational(tau)
    size = parse_rational(size)
    if tau < 1:
        raise ConfigError(f"tau={tau} must be >= 1 (intra at least as wide as cross)")
    variant = _variant_for(nodes)
    lo, hi = nodes.k - nodes.R + 1, nodes.n - nodes.R
    if d_cross < 0 or not lo <= d_cross <= hi:
        raise ConfigError(f"d_cross={d_cross} outside [{lo}, {hi}]")
    fn = cluster_weight_values if variant is Variant.CLUSTER_DSS else csn_weight_values
    points = []
    unstorable = []
    for beta_cross in grid:
        if beta_cross <= 0:
            raise ConfigError(f"grid value {beta_cross} must be positive")
        ws = WeightSequence(
            values=fn(nodes.k, nodes.R, d_cross, tau * beta_cross, beta_cross),
            variant=variant,
        )
        try:
            alpha_star = min_alpha(ws, size)
        except Unstorable:
            unstorable.append(beta_cross)
            continue
        points.append(TradeoffPoint(beta_cross=beta_cross, alpha_star=alpha_star, size=size))
    return TradeoffResult(
        points=tuple(points),
        unstorable=tuple(unstorable),
        variant=variant,
        d_cross=d_cross,
    )


class Outcome(enum.Enum):
    EQUAL = "Equal"
    REDUCED = "Reduced"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Effect of adding one separate node to a cluster system at the
    supplied alpha."""

    outcome: Outcome
    capacity_without: Fraction
    capacity_with: Fraction


def compare_separate(nodes: NodeParams, repair: RepairParams) -> ComparisonVerdict:
    """Compare a cluster system (E=0) against the same system plus one
    separate node, identical storage/repair parameters.

    At uncapped alpha the verdict follows the divisibility of k by R:
    equal capacity iff R | k (or the bandwidths are homogeneous).
    """
    if nodes.E != 0:
        raise ConfigError(f"base system must have E=0, got E={nodes.E}")
    base = SystemConfig(nodes=nodes, repair=repair)
    augmented = SystemConfig(
        nodes=NodeParams(n=nodes.n + 1, k=nodes.k, L=nodes.L, R=nodes.R, E=1),
        repair=repair,
    )
    without = system_capacity(base)
    with_sep = system_capacity(augmented)
    assert with_sep <= without, "adding a separate node must not raise capacity"
    outcome = Outcome.EQUAL if with_sep == without else Outcome.REDUCED
    return ComparisonVerdict(
        outcome=outcome, capacity_without=without, capacity_with=with_sep
    )
