"""Parameters, exact rationals, and combinatorial enumeration.

A system consists of L clusters of R nodes each plus E separate nodes
(n = L*R + E total).  A data collector reads k nodes; repairing a cluster
node downloads beta_intra from each of d_intra intra-cluster helpers and
beta_cross from each of d_cross cross-cluster helpers, while a separate
node downloads beta_cross from d = d_intra + d_cross helpers.

All bandwidth and capacity values are exact rationals (fractions.Fraction);
no floating point is used anywhere in the computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

Rational = Fraction

RationalLike = int | str | Fraction


class ConfigError(ValueError):
    """A supplied parameter set violates a model constraint."""


class NodeCount(ConfigError):
    """n does not equal L*R + E."""


class KRange(ConfigError):
    """k outside [1, n-1] (or a basic count is non-positive)."""


class DInvalid(ConfigError):
    """d_intra differs from R-1; all intra-cluster nodes must help."""


class BandwidthOrder(ConfigError):
    """beta_intra < beta_cross (intra links must be at least as wide)."""


class DCRange(ConfigError):
    """d_cross outside [k - R + 1, n - R]."""


class Infeasible(ConfigError):
    """Fewer than k nodes available to select."""


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an exact rational from an int, Fraction, or 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a rational as 'p' or 'p/q' (lossless, canonical)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class NodeParams:
    """Node-level layout: n total nodes, k to reconstruct, L clusters of
    R nodes, E separate nodes."""

    n: int
    k: int
    L: int
    R: int
    E: int

    def __post_init__(self) -> None:
        if self.L < 1 or self.R < 1 or self.E < 0:
            raise KRange(f"need L >= 1, R >= 1, E >= 0; got L={self.L} R={self.R} E={self.E}")
        if self.n != self.L * self.R + self.E:
            raise NodeCount(f"n={self.n} but L*R+E={self.L * self.R + self.E}")
        if not 1 <= self.k <= self.n - 1:
            raise KRange(f"k={self.k} outside [1, n-1]=[1, {self.n - 1}]")


@dataclass(frozen=True)
class RepairParams:
    """Storage and repair-bandwidth parameters.

    alpha is the per-node storage; helper counts and per-helper downloads
    are split into intra-cluster and cross-cluster classes.
    """

    alpha: Fraction
    d_intra: int
    beta_intra: Fraction
    d_cross: int
    beta_cross: Fraction

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise ConfigError(f"alpha={self.alpha} must be >= 0")
        if self.beta_cross < 0:
            raise BandwidthOrder(f"beta_cross={self.beta_cross} must be >= 0")
        if self.beta_intra < self.beta_cross:
            raise BandwidthOrder(
                f"beta_intra={self.beta_intra} < beta_cross={self.beta_cross}"
            )

    @property
    def d(self) -> int:
        """Total helper count for one repair."""
        return self.d_intra + self.d_cross

    @property
    def gamma_intra(self) -> Fraction:
        return self.d_intra * self.beta_intra

    @property
    def gamma_cross(self) -> Fraction:
        return self.d_cross * self.beta_cross

    @property
    def gamma_separate(self) -> Fraction:
        """Total bandwidth to repair a separate node: d * beta_cross."""
        return self.d * self.beta_cross


@dataclass(frozen=True)
class SystemConfig:
    """A fully validated system: node layout plus repair parameters."""

    nodes: NodeParams
    repair: RepairParams

    def __post_init__(self) -> None:
        nd, rp = self.nodes, self.repair
        if rp.d_intra != nd.R - 1:
            raise DInvalid(f"d_intra={rp.d_intra} but must equal R-1={nd.R - 1}")
        lo, hi = nd.k - nd.R + 1, nd.n - nd.R
        if rp.d_cross < 0 or not lo <= rp.d_cross <= hi:
            raise DCRange(f"d_cross={rp.d_cross} outside [{lo}, {hi}]")

    @property
    def k(self) -> int:
        return self.nodes.k

    def describe(self) -> str:
        nd, rp = self.nodes, self.repair
        return (
            f"n={nd.n} k={nd.k} L={nd.L} R={nd.R} E={nd.E} "
            f"dI={rp.d_intra} dC={rp.d_cross} "
            f"bI={format_rational(rp.beta_intra)} bC={format_rational(rp.beta_cross)} "
            f"alpha={format_rational(rp.alpha)}"
        )


def validate_config(
    *,
    n: int,
    k: int,
    L: int,
    R: int,
    E: int,
    d_cross: int,
    beta_intra: RationalLike,
    beta_cross: RationalLike,
    alpha: RationalLike,
    d_intra: int | None = None,
) -> SystemConfig:
    """Build a SystemConfig, raising a named ConfigError on any violation.

    d_intra defaults to R-1 (every other node in the failed node's cluster
    helps); passing anything else raises DInvalid.
    """
    nodes = NodeParams(n=n, k=k, L=L, R=R, E=E)
    repair = RepairParams(
        alpha=parse_rational(alpha),
        d_intra=R - 1 if d_intra is None else d_intra,
        beta_intra=parse_rational(beta_intra),
        d_cross=d_cross,
        beta_cross=parse_rational(beta_cross),
    )
    return SystemConfig(nodes=nodes, repair=repair)


@dataclass(frozen=True)
class SelectedNodeDistribution:
    """How the k collector nodes spread over clusters: `separate` of them
    are separate nodes, clusters[i] sit in cluster i+1 (counts
    non-increasing; clusters are relabeled by selection count)."""

    separate: int
    clusters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.separate < 0 or any(c < 0 for c in self.clusters):
            raise ConfigError(f"negative count in {self}")
        if any(a < b for a, b in zip(self.clusters, self.clusters[1:])):
            raise ConfigError(f"cluster counts not non-increasing: {self.clusters}")

    @property
    def k(self) -> int:
        return self.separate + sum(self.clusters)

    def is_member(self, nodes: NodeParams) -> bool:
        """True when this distribution is selectable under `nodes`."""
        return (
            len(self.clusters) == nodes.L
            and self.separate <= nodes.E
            and all(c <= nodes.R for c in self.clusters)
            and self.k == nodes.k
        )

    def __str__(self) -> str:
        return f"({self.separate}; {', '.join(str(c) for c in self.clusters)})"


@dataclass(frozen=True)
class ClusterOrder:
    """A repair sequence recorded as cluster indices, one entry per
    selected node; 0 marks a separate node."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.labels):
            raise ConfigError(f"negative cluster label in {self.labels}")

    @property
    def k(self) -> int:
        return len(self.labels)

    def distribution(self, L: int) -> SelectedNodeDistribution:
        """Counts per cluster label (canonical labels assumed)."""
        counts = [0] * L
        separate = 0
        for x in self.labels:
            if x == 0:
                separate += 1
            elif x <= L:
                counts[x - 1] += 1
            else:
                raise ConfigError(f"label {x} exceeds L={L}")
        return SelectedNodeDistribution(separate=separate, clusters=tuple(counts))

    def matches(self, dist: SelectedNodeDistribution) -> bool:
        """Membership test: label counts equal the distribution's counts."""
        try:
            return self.distribution(len(dist.clusters)) == dist
        except ConfigError:
            return False

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.labels) + ")"


def enumerate_distributions(nodes: NodeParams) -> list[SelectedNodeDistribution]:
    """All selected-node distributions, separate count descending, then
    cluster counts in descending lexicographic order."""
    if nodes.k > nodes.E + nodes.L * nodes.R:
        raise Infeasible(f"k={nodes.k} exceeds selectable nodes {nodes.E + nodes.L * nodes.R}")
    out: list[SelectedNodeDistribution] = []

    def fill(remaining: int, slots: int, bound: int, acc: list[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(SelectedNodeDistribution(separate=s0, clusters=tuple(acc)))
            return
        top = min(bound, remaining)
        for value in range(top, -1, -1):
            # prune: the rest must fit under the non-increasing bound
            if remaining - value <= (slots - 1) * value:
                acc.append(value)
                fill(remaining - value, slots - 1, value, acc)
                acc.pop()

    for s0 in range(min(nodes.E, nodes.k), -1, -1):
        if nodes.k - s0 <= nodes.L * nodes.R:
            fill(nodes.k - s0, nodes.L, nodes.R, [])
    return out


def _multiset_permutations(items: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations in lexicographic order (next-permutation walk)."""
    seq = sorted(items)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        # find rightmost ascent
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1 :] = reversed(seq[i + 1 :])


def order_count(dist: SelectedNodeDistribution) -> int:
    """|Pi(s)| = k! / (s0! * prod(s_i!))."""
    total = factorial(dist.k) // factorial(dist.separate)
    for c in dist.clusters:
        total //= factorial(c)
    return total


def enumerate_orders(dist: SelectedNodeDistribution) -> list[ClusterOrder]:
    """All distinct repair sequences for a distribution, lexicographic
    (separate label 0 sorts first)."""
    items = [0] * dist.separate
    for cluster, count in enumerate(dist.clusters, start=1):
        items.extend([cluster] * count)
    return [ClusterOrder(labels=p) for p in _multiset_permutations(items)]


def iter_orders(dist: SelectedNodeDistribution) -> Iterator[ClusterOrder]:
    """Lazy variant of enumerate_orders for large Pi(s)."""
    items = [0] * dist.separate
    for cluster, count in enumerate(dist.clusters, start=1):
        items.extend([cluster] * count)
    for p in _multiset_permutations(items):
        yield ClusterOrder(labels=p)
