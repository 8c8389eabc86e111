"""Independent verification paths: exhaustive search over all selections
and repair sequences, explicit flow-graph construction solved by exact
integral max-flow, and checkers for every structural claim the closed
forms rely on.

Everything here is deliberately redundant with the closed-form modules:
agreement between the three routes (closed form, exhaustive part-cut
scan, max-flow on the explicit graph) is the correctness argument.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _kernel, _kernel_py
from .capacity import (
    Outcome,
    cluster_weight_values,
    compare_separate,
    csn_weight_values,
    mincut_by_location,
    system_capacity,
)
from .mincut import incoming_coefficients, mincut
from .model import (
    ClusterOrder,
    NodeParams,
    RepairParams,
    SelectedNodeDistribution,
    SystemConfig,
    enumerate_distributions,
    order_count,
    validate_config,
)
from .sequencing import SeparatePositions, horizontal_selection, vertical_order


class BudgetExceeded(RuntimeError):
    """The full enumeration is larger than the allowed budget."""

    def __init__(self, size: int, budget: int):
        super().__init__(f"enumeration size {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


DEFAULT_BUDGET = 10_000_000


def _scaled_bandwidths(cfg: SystemConfig) -> tuple[int, int, int, int]:
    """(scale, alpha, beta_intra, beta_cross) with rationals cleared to
    integers by the common denominator."""
    rp = cfg.repair
    scale = lcm(
        rp.alpha.denominator, rp.beta_intra.denominator, rp.beta_cross.denominator
    )
    return (
        scale,
        int(rp.alpha * scale),
        int(rp.beta_intra * scale),
        int(rp.beta_cross * scale),
    )


@dataclass(frozen=True)
class BruteForceResult:
    value: Fraction
    distribution: SelectedNodeDistribution
    order: ClusterOrder


def enumeration_size(nodes: NodeParams) -> int:
    """Total number of repair sequences over all distributions."""
    return sum(order_count(d) for d in enumerate_distributions(nodes))


def brute_force_capacity(
    cfg: SystemConfig, budget: int = DEFAULT_BUDGET, backend: str | None = None
) -> BruteForceResult:
    """Minimum min-cut over every selection and repair sequence.

    Works for any separate-node count E.  The reported argmin is the first
    minimizer when distributions are scanned in enumeration order and
    sequences in lexicographic order with the separate label sorting last.
    """
    dists = enumerate_distributions(cfg.nodes)
    size = sum(order_count(d) for d in dists)
    if size > budget:
        raise BudgetExceeded(size, budget)
    scale, alpha, beta_i, beta_c = _scaled_bandwidths(cfg)
    rp = cfg.repair
    best: tuple[int, SelectedNodeDistribution, tuple[int, ...]] | None = None
    for dist in dists:
        value, order = _kernel.scan_distribution(
            dist.separate,
            dist.clusters,
            rp.d_intra,
            rp.d_cross,
            alpha,
            beta_i,
            beta_c,
            backend=backend,
        )
        if best is None or value < best[0]:
            best = (value, dist, order)
    assert best is not None
    return BruteForceResult(
        value=Fraction(best[0], scale),
        distribution=best[1],
        order=ClusterOrder(labels=best[2]),
    )


# ---------------------------------------------------------------------------
# Explicit information-flow graph + exact max-flow
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FlowGraph:
    """Directed graph with integer capacities (rationals cleared by
    `scale`); `infinite` exceeds the sum of all finite capacities."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    source: int
    sink: int
    scale: int
    infinite: int


def build_ifg(cfg: SystemConfig, order: ClusterOrder) -> FlowGraph:
    """Flow graph of the repair sequence under worst-case wiring.

    Each storage node is an input/output vertex pair joined by an edge of
    capacity alpha.  The source feeds all n initial nodes; each newcomer
    connects to all previous newcomers first (cross-cluster slots), then
    to still-active original nodes; the collector reads the k newcomers.
    """
    nd, rp = cfg.nodes, cfg.repair
    if order.k != nd.k:
        raise ValueError(f"order has {order.k} entries, config has k={nd.k}")
    scale, alpha, beta_i, beta_c = _scaled_bandwidths(cfg)
    n, k = nd.n, nd.k

    def orig_in(slot: int) -> int:
        return 1 + 2 * slot

    def orig_out(slot: int) -> int:
        return 2 + 2 * slot

    def new_in(i: int) -> int:
        return 1 + 2 * n + 2 * i

    def new_out(i: int) -> int:
        return 2 + 2 * n + 2 * i

    source = 0
    sink = 2 * n + 2 * k + 1

    # slots: cluster c (1..L) position r (1..R) -> (c-1)*R + (r-1);
    # separate e (1..E) -> L*R + (e-1)
    def cluster_of(slot: int) -> int:
        return slot // nd.R + 1 if slot < nd.L * nd.R else 0

    finite: list[tuple[int, int, int]] = []
    for slot in range(n):
        finite.append((orig_in(slot), orig_out(slot), alpha))

    occupant: dict[int, int] = {}  # replaced slot -> newcomer step index
    step_cluster: list[int] = []  # cluster label per newcomer step
    seen: dict[int, int] = {}
    for i, label in enumerate(order.labels):
        seen[label] = seen.get(label, 0) + 1
        h = seen[label]
        if label == 0:
            if h > nd.E:
                raise ValueError(f"order selects {h} separate nodes but E={nd.E}")
            slot = nd.L * nd.R + (h - 1)
            want = rp.d
        else:
            if h > nd.R:
                raise ValueError(f"order selects {h} nodes from cluster {label} but R={nd.R}")
            slot = (label - 1) * nd.R + (h - 1)
            # intra edges: every other current member of the cluster
            for r in range(nd.R):
                other = (label - 1) * nd.R + r
                if other == slot:
                    continue
                step = occupant.get(other)
                src = orig_out(other) if step is None else new_out(step)
                finite.append((src, new_in(i), beta_i))
            want = rp.d_cross
        # cross (or, for a separate node, all) helpers: previous newcomers
        # outside the own cluster first, most recent first, then
        # unreplaced originals in ascending slot order
        helpers: list[int] = []
        for j in range(i - 1, -1, -1):
            if len(helpers) == want:
                break
            if label == 0 or step_cluster[j] != label:
                helpers.append(new_out(j))
        for other in range(n):
            if len(helpers) == want:
                break
            if other == slot or other in occupant:
                continue
            if label != 0 and cluster_of(other) == label:
                continue
            helpers.append(orig_out(other))
        if len(helpers) != want:
            raise ValueError(f"cannot find {want} helpers at repair step {i + 1}")
        for src in helpers:
            finite.append((src, new_in(i), beta_c))
        finite.append((new_in(i), new_out(i), alpha))
        occupant[slot] = i
        step_cluster.append(label)

    infinite = sum(c for _, _, c in finite) + 1
    edges = list(finite)
    for slot in range(n):
        edges.append((source, orig_in(slot), infinite))
    for i in range(k):
        edges.append((new_out(i), sink, infinite))
    return FlowGraph(
        vertex_count=2 * n + 2 * k + 2,
        edges=tuple(edges),
        source=source,
        sink=sink,
        scale=scale,
        infinite=infinite,
    )


def max_flow(graph: FlowGraph) -> int:
    """Exact integral max-flow (Dinic) on the scaled graph."""
    n = graph.vertex_count
    adj: list[list[int]] = [[] for _ in range(n)]
    to: list[int] = []
    cap: list[int] = []
    for u, v, c in graph.edges:
        adj[u].append(len(to))
        to.append(v)
        cap.append(c)
        adj[v].append(len(to))
        to.append(u)
        cap.append(0)
    s, t = graph.source, graph.sink
    flow = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in adj[u]:
                if cap[e] > 0 and level[to[e]] < 0:
                    level[to[e]] = level[u] + 1
                    queue.append(to[e])
        if level[t] < 0:
            return flow
        ptr = [0] * n

        def push(u: int, limit: int) -> int:
            if u == t:
                return limit
            while ptr[u] < len(adj[u]):
                e = adj[u][ptr[u]]
                v = to[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    got = push(v, min(limit, cap[e]))
                    if got:
                        cap[e] -= got
                        cap[e ^ 1] += got
                        return got
                ptr[u] += 1
            return 0

        while True:
            pushed = push(s, graph.infinite)
            if not pushed:
                break
            flow += pushed


def ifg_mincut(cfg: SystemConfig, order: ClusterOrder) -> Fraction:
    """Source-collector max-flow of the explicit graph, as an exact
    rational; equals the part-cut formula by max-flow/min-cut duality."""
    graph = build_ifg(cfg, order)
    return Fraction(max_flow(graph), graph.scale)


# ---------------------------------------------------------------------------
# Claim verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    instance: str
    claim: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class VerificationFamily:
    name: str
    configs: tuple[SystemConfig, ...]
    claims: tuple[str, ...]
    seed: int = 0


SWEEP_BETA_PAIRS = ((1, 1), (2, 1), (3, 1), (3, 2))


def sweep_alpha_values(
    k: int, R: int, E: int, d_cross: int, beta_intra: Fraction, beta_cross: Fraction
) -> list[Fraction]:
    """Zero, every sorted-weight boundary, and the saturation point."""
    fn = cluster_weight_values if E == 0 else csn_weight_values
    values = fn(k, R, d_cross, beta_intra, beta_cross)
    grid = {Fraction(0), sum(values, start=Fraction(0))}
    grid.update(values)
    return sorted(grid)


def sweep_configs(
    L_values=(2, 3),
    R_values=(2, 3, 4),
    E_values=(0, 1),
    k_max: int = 9,
    beta_pairs=SWEEP_BETA_PAIRS,
    alpha_values=None,
) -> list[SystemConfig]:
    """The standard verification grid: every valid d_cross for each node
    layout, the listed bandwidth pairs, and per-config alpha boundaries
    (or a fixed alpha list when `alpha_values` is given)."""
    out = []
    for L in L_values:
        for R in R_values:
            for E in E_values:
                n = L * R + E
                for k in range(2, min(k_max, n - 1) + 1):
                    for d_cross in range(max(0, k - R + 1), n - R + 1):
                        for bi, bc in beta_pairs:
                            bi_f, bc_f = Fraction(bi), Fraction(bc)
                            alphas = (
                                alpha_values
                                if alpha_values is not None
                                else sweep_alpha_values(k, R, E, d_cross, bi_f, bc_f)
                            )
                            for alpha in alphas:
                                out.append(
                                    validate_config(
                                        n=n, k=k, L=L, R=R, E=E,
                                        d_cross=d_cross,
                                        beta_intra=bi_f, beta_cross=bc_f,
                                        alpha=alpha,
                                    )
                                )
    return out


def _profile_value(coeffs, alpha: Fraction, beta_i: Fraction, beta_c: Fraction) -> Fraction:
    return sum(
        (min(alpha, a * beta_i + b * beta_c) for a, b, _ in coeffs), start=Fraction(0)
    )


def _check_lemma1(cfg: SystemConfig):
    """The multiset of intra coefficients is the same for every repair
    sequence of a fixed all-cluster distribution."""
    rp = cfg.repair
    for dist in enumerate_distributions(cfg.nodes):
        if dist.separate != 0:
            continue
        reference = None
        for coeffs, labels in _kernel_py.distribution_profiles(
            dist.separate, dist.clusters, rp.d_intra, rp.d_cross
        ):
            bag = tuple(sorted(a for a, _, _ in coeffs))
            if reference is None:
                reference = bag
            elif bag != reference:
                return False, f"s={dist} order={labels} intra multiset {bag} != {reference}"
    return True, None


def _check_lemma2(cfg: SystemConfig):
    """Along the constructed optimal sequence the coefficient pairs sum to
    d + 1 - i at every position."""
    nd, rp = cfg.nodes, cfg.repair
    if nd.E == 0:
        dist = horizontal_selection(nd, 0)
        order = vertical_order(dist, SeparatePositions.none())
    else:
        dist = horizontal_selection(nd, 1)
        order = vertical_order(dist, SeparatePositions(positions=(nd.k,)))
    coeffs = incoming_coefficients(rp.d_intra, rp.d_cross, order)
    for i, (a, b, _) in enumerate(coeffs, start=1):
        if a + b != rp.d + 1 - i:
            return False, f"position {i} of {order}: {a}+{b} != {rp.d + 1 - i}"
    return True, None


def _check_prop1(cfg: SystemConfig):
    """The vertical order minimizes the min-cut within each all-cluster
    distribution."""
    rp = cfg.repair
    alpha = rp.alpha
    for dist in enumerate_distributions(cfg.nodes):
        if dist.separate != 0:
            continue
        constructed = mincut(cfg, vertical_order(dist, SeparatePositions.none())).value
        for coeffs, labels in _kernel_py.distribution_profiles(
            dist.separate, dist.clusters, rp.d_intra, rp.d_cross
        ):
            value = _profile_value(coeffs, alpha, rp.beta_intra, rp.beta_cross)
            if value < constructed:
                return False, f"s={dist}: order {labels} gives {value} < {constructed}"
    return True, None


def _check_prop2(cfg: SystemConfig):
    """The horizontal selection minimizes over all-cluster distributions
    once each uses its vertical order."""
    nd = cfg.nodes
    if nd.k > nd.L * nd.R:
        return True, None  # no all-cluster selection exists
    star = horizontal_selection(nd, 0)
    best = mincut(cfg, vertical_order(star, SeparatePositions.none())).value
    for dist in enumerate_distributions(nd):
        if dist.separate != 0:
            continue
        value = mincut(cfg, vertical_order(dist, SeparatePositions.none())).value
        if value < best:
            return False, f"s={dist} gives {value} < {best} at s*={star}"
    return True, None


def _check_thm1(cfg: SystemConfig):
    """With the separate node pinned at location j, the constructed
    sequence minimizes over all one-separate selections and orders."""
    nd, rp = cfg.nodes, cfg.repair
    if nd.E < 1 or nd.k - 1 > nd.L * nd.R:
        return True, None
    alpha = rp.alpha
    by_location = {j: mincut_by_location(cfg, j) for j in range(1, nd.k + 1)}
    for dist in enumerate_distributions(nd):
        if dist.separate != 1:
            continue
        for coeffs, labels in _kernel_py.distribution_profiles(
            dist.separate, dist.clusters, rp.d_intra, rp.d_cross
        ):
            j = next(i for i, (_, _, sep) in enumerate(coeffs, start=1) if sep)
            value = _profile_value(coeffs, alpha, rp.beta_intra, rp.beta_cross)
            if value < by_location[j]:
                return False, (
                    f"s={dist} order={labels} separate at {j}: "
                    f"{value} < constructed {by_location[j]}"
                )
    return True, None


def _check_thm2(cfg: SystemConfig):
    """Min-cut of the constructed sequence is non-increasing in the
    separate node's location."""
    nd = cfg.nodes
    if nd.E < 1 or nd.k - 1 > nd.L * nd.R:
        return True, None
    values = [mincut_by_location(cfg, j) for j in range(1, nd.k + 1)]
    for j, (x, y) in enumerate(zip(values, values[1:]), start=1):
        if x < y:
            return False, f"MC at j={j} is {x} < MC at j={j + 1} = {y}"
    return True, None


def _check_thm3(cfg: SystemConfig):
    """Separate node last equals the closed-form capacity (E=1)."""
    nd = cfg.nodes
    if nd.E != 1 or nd.k - 1 > nd.L * nd.R:
        return True, None
    last = mincut_by_location(cfg, nd.k)
    closed = system_capacity(cfg)
    if last != closed:
        return False, f"MC at j=k is {last} but closed form gives {closed}"
    return True, None


def _check_thm4(cfg: SystemConfig):
    """Adding one separate node at uncapped alpha keeps capacity iff R
    divides k (strict reduction needs beta_intra > beta_cross)."""
    nd, rp = cfg.nodes, cfg.repair
    if nd.E != 0:
        return True, None
    values = cluster_weight_values(nd.k, nd.R, rp.d_cross, rp.beta_intra, rp.beta_cross)
    uncapped = RepairParams(
        alpha=sum(values, start=Fraction(0)) + 1,
        d_intra=rp.d_intra,
        beta_intra=rp.beta_intra,
        d_cross=rp.d_cross,
        beta_cross=rp.beta_cross,
    )
    verdict = compare_separate(nd, uncapped)
    keep = nd.k % nd.R == 0 or rp.beta_intra == rp.beta_cross
    expected = Outcome.EQUAL if keep else Outcome.REDUCED
    if verdict.outcome is not expected:
        return False, (
            f"expected {expected.value} (k={nd.k}, R={nd.R}), got "
            f"{verdict.outcome.value}: without={verdict.capacity_without} "
            f"with={verdict.capacity_with}"
        )
    return True, None


def _check_closed_vs_search(cfg: SystemConfig):
    """Closed-form capacity equals the exhaustive minimum."""
    if cfg.nodes.E > 1:
        return True, None
    closed = system_capacity(cfg)
    found = brute_force_capacity(cfg)
    if closed != found.value:
        return False, (
            f"closed form {closed} != search {found.value} at "
            f"s={found.distribution} order={found.order}"
        )
    return True, None


_CHECKERS = {
    "lemma1-multiset": _check_lemma1,
    "lemma2-sum": _check_lemma2,
    "prop1-vertical": _check_prop1,
    "prop2-horizontal": _check_prop2,
    "thm1-fixed-separate": _check_thm1,
    "thm2-monotone": _check_thm2,
    "thm3-capacity": _check_thm3,
    "thm4-dichotomy": _check_thm4,
    "closed-form-vs-search": _check_closed_vs_search,
}

ALL_CLAIMS = tuple(_CHECKERS)


def _family_tiny() -> VerificationFamily:
    return VerificationFamily(
        name="tiny",
        configs=tuple(
            sweep_configs(L_values=(2,), R_values=(2, 3), k_max=4,
                          beta_pairs=((1, 1), (2, 1)))
        ),
        claims=ALL_CLAIMS,
    )


def _family_small_sweep() -> VerificationFamily:
    return VerificationFamily(
        name="small-sweep",
        configs=tuple(sweep_configs()),
        claims=ALL_CLAIMS,
    )


FAMILIES = {
    "tiny": _family_tiny,
    "small-sweep": _family_small_sweep,
}


def verify_claims(family: str | VerificationFamily) -> list[VerificationReport]:
    """One report per (claim, config); failures carry a reproducible
    counterexample instead of raising."""
    if isinstance(family, str):
        try:
            family = FAMILIES[family]()
        except KeyError:
            raise ValueError(
                f"unknown family {family!r}; choose from {sorted(FAMILIES)}"
            ) from None
    reports = []
    for cfg in family.configs:
        for claim in family.claims:
            passed, counter = _CHECKERS[claim](cfg)
            reports.append(
                VerificationReport(
                    instance=cfg.describe(),
                    claim=claim,
                    passed=passed,
                    counterexample=counter,
                )
            )
    return reports


def sample_sweep_triples(count: int, seed: int = 0):
    """Seeded random (config, distribution, order) triples drawn from the
    standard sweep family, for formula-vs-graph spot checks."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        L = rng.choice((2, 3))
        R = rng.choice((2, 3, 4))
        E = rng.choice((0, 1))
        n = L * R + E
        k = rng.randint(2, min(9, n - 1))
        d_cross = rng.randint(max(0, k - R + 1), n - R)
        bi, bc = rng.choice(SWEEP_BETA_PAIRS)
        alpha = rng.choice(
            sweep_alpha_values(k, R, E, d_cross, Fraction(bi), Fraction(bc))
        )
        cfg = validate_config(
            n=n, k=k, L=L, R=R, E=E, d_cross=d_cross,
            beta_intra=bi, beta_cross=bc, alpha=alpha,
        )
        dist = rng.choice(enumerate_distributions(cfg.nodes))
        items = [0] * dist.separate
        for cluster, c in enumerate(dist.clusters, start=1):
            items.extend([cluster] * c)
        rng.shuffle(items)
        out.append((cfg, dist, ClusterOrder(labels=tuple(items))))
    return out
