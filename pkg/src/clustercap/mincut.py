"""Part-cut calculus: per-position incoming weights and the min-cut value
of a repair sequence.

Cutting the k selected newcomers one at a time in topological order, the
i-th position contributes min(alpha, w_i), where w_i counts the capacity
of helper edges arriving from not-yet-cut nodes.  Under the worst-case
wiring (each newcomer connects to all previous newcomers first), the
weights have a closed form in the relative location h_i of the node
within its own cluster's selection order:

  cluster node:  w_i = (d_intra + 1 - h_i) * beta_intra
                       + max(d_cross - (i - h_i), 0) * beta_cross
  separate node: w_i = (d - i + 1) * beta_cross

The cross-cluster coefficient floors at zero: once more than d_cross
previous newcomers sit outside the node's cluster, every cross edge comes
from an already-cut node.  The intra coefficient never floors because
d_intra = R - 1 bounds h_i <= d_intra + 1; this is asserted, not clamped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import ClusterOrder, SystemConfig

WeightVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class CutReport:
    """Min-cut value with the weights behind it; capped[i] is True where
    alpha (not w_i) was the minimum at position i."""

    value: Fraction
    weights: WeightVector
    capped: tuple[bool, ...]


def relative_location(order: ClusterOrder) -> tuple[int, ...]:
    """h_i = how many of the first i entries share position i's label
    (separate entries are counted among themselves)."""
    seen: dict[int, int] = {}
    out = []
    for label in order.labels:
        seen[label] = seen.get(label, 0) + 1
        out.append(seen[label])
    return tuple(out)


def incoming_coefficients(
    d_intra: int, d_cross: int, order: ClusterOrder
) -> tuple[tuple[int, int, bool], ...]:
    """Per-position (beta_intra coeff, beta_cross coeff, is_separate).

    Separate positions fold into the same shape with a zero intra
    coefficient and cross coefficient d - i + 1.
    """
    d = d_intra + d_cross
    h = relative_location(order)
    out = []
    for i, (label, hi) in enumerate(zip(order.labels, h), start=1):
        if label == 0:
            out.append((0, d - i + 1, True))
        else:
            a = d_intra + 1 - hi
            assert a >= 0, f"intra coefficient negative at position {i} (h={hi})"
            b = max(d_cross - (i - hi), 0)
            out.append((a, b, False))
    return tuple(out)


def part_incoming_weights(cfg: SystemConfig, order: ClusterOrder) -> WeightVector:
    """The k incoming weights of a repair sequence, in sequence order."""
    nd, rp = cfg.nodes, cfg.repair
    if order.k != nd.k:
        raise ValueError(f"order has {order.k} entries, config has k={nd.k}")
    if any(x > nd.L for x in order.labels):
        raise ValueError(f"cluster label exceeds L={nd.L} in {order}")
    if nd.E == 0 and any(x == 0 for x in order.labels):
        raise ValueError("separate entry in order but E=0")
    coeffs = incoming_coefficients(rp.d_intra, rp.d_cross, order)
    return tuple(a * rp.beta_intra + b * rp.beta_cross for a, b, _ in coeffs)


def mincut(cfg: SystemConfig, order: ClusterOrder) -> CutReport:
    """Min-cut of the flow graph induced by `order`: sum of
    min(alpha, w_i) over the k positions."""
    weights = part_incoming_weights(cfg, order)
    alpha = cfg.repair.alpha
    capped = tuple(alpha < w for w in weights)
    value = sum((min(alpha, w) for w in weights), start=Fraction(0))
    return CutReport(value=value, weights=weights, capped=capped)
