"""Construction of capacity-achieving selections and repair sequences.

Two greedy constructions together achieve the system capacity:

* horizontal selection fills whole clusters first, so the selected nodes
  occupy as few clusters as possible;
* vertical ordering repairs the selected nodes column by column, cycling
  through the non-exhausted clusters, so same-cluster repairs are spread
  as far apart as possible.

Separate selected nodes occupy pre-fixed positions in the sequence and
the cluster labels cycle around them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ClusterOrder, ConfigError, NodeParams, SelectedNodeDistribution


class S0Range(ConfigError):
    """Separate selection count outside {0, 1} for the closed-form path."""


@dataclass(frozen=True)
class SeparatePositions:
    """1-based sequence positions reserved for separate selected nodes."""

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(sorted(self.positions)))
        if len(set(self.positions)) != len(self.positions):
            raise ConfigError(f"duplicate separate positions {self.positions}")

    @classmethod
    def none(cls) -> "SeparatePositions":
        return cls(positions=())


def horizontal_selection(nodes: NodeParams, s0: int) -> SelectedNodeDistribution:
    """Fill clusters with R selected nodes each until k - s0 are placed;
    the next cluster takes the remainder, the rest stay empty."""
    if s0 not in (0, 1):
        raise S0Range(f"s0={s0}: the construction is proven only for s0 in {{0, 1}}")
    if s0 > nodes.E:
        raise ConfigError(f"s0={s0} exceeds separate node count E={nodes.E}")
    remaining = nodes.k - s0
    if remaining > nodes.L * nodes.R:
        raise ConfigError(f"cannot place {remaining} selected nodes in {nodes.L}x{nodes.R}")
    full = remaining // nodes.R
    counts = [0] * nodes.L
    for i in range(full):
        counts[i] = nodes.R
    if full < nodes.L:
        counts[full] = remaining - full * nodes.R
    return SelectedNodeDistribution(separate=s0, clusters=tuple(counts))


def vertical_order(
    dist: SelectedNodeDistribution, sep: SeparatePositions | None = None
) -> ClusterOrder:
    """Assign cluster labels by cycling 1..L, skipping exhausted clusters;
    positions listed in `sep` receive the separate label 0."""
    sep = sep or SeparatePositions.none()
    if len(sep.positions) != dist.separate:
        raise ConfigError(
            f"{len(sep.positions)} separate positions but distribution has {dist.separate}"
        )
    k = dist.k
    if any(not 1 <= p <= k for p in sep.positions):
        raise ConfigError(f"separate positions {sep.positions} outside 1..{k}")
    remaining = list(dist.clusters)
    L = len(remaining)
    sep_set = set(sep.positions)
    labels = []
    j = 0  # 0-based cluster cursor
    for i in range(1, k + 1):
        if i in sep_set:
            labels.append(0)
            continue
        # advance cyclically past exhausted clusters (never loops: the
        # non-separate positions equal the total cluster count)
        while remaining[j] == 0:
            j = (j + 1) % L
        labels.append(j + 1)
        remaining[j] -= 1
        j = (j + 1) % L
    return ClusterOrder(labels=tuple(labels))


def optimal_order_with_separate_at(nodes: NodeParams, j: int) -> ClusterOrder:
    """The capacity-candidate sequence with one separate selected node
    pinned at position j; its min-cut is non-increasing in j, so j = k
    achieves the system capacity."""
    if nodes.E < 1:
        raise ConfigError("needs at least one separate node (E >= 1)")
    if not 1 <= j <= nodes.k:
        raise ConfigError(f"position j={j} outside 1..{nodes.k}")
    dist = horizontal_selection(nodes, 1)
    return vertical_order(dist, SeparatePositions(positions=(j,)))
