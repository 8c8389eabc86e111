"""Regressions for the published selection/ordering examples plus
membership properties of the constructions."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from clustercap.model import ConfigError, NodeParams, SelectedNodeDistribution
from clustercap.sequencing import (
    S0Range,
    SeparatePositions,
    horizontal_selection,
    optimal_order_with_separate_at,
    vertical_order,
)


@pytest.mark.parametrize(
    "k, s0, expected",
    [
        (7, 1, (1, (4, 2, 0))),
        (9, 1, (1, (4, 4, 0))),
        (8, 0, (0, (4, 4, 0))),
    ],
)
def test_horizontal_selection_published_examples(k, s0, expected):
    nodes = NodeParams(n=13, k=k, L=3, R=4, E=1)
    got = horizontal_selection(nodes, s0)
    assert (got.separate, got.clusters) == expected


def test_horizontal_selection_s0_restricted():
    nodes = NodeParams(n=14, k=5, L=3, R=4, E=2)
    with pytest.raises(S0Range):
        horizontal_selection(nodes, 2)
    with pytest.raises(ConfigError):
        horizontal_selection(NodeParams(n=12, k=5, L=3, R=4, E=0), 1)


@pytest.mark.parametrize(
    "separate, clusters, positions, expected",
    [
        (0, (4, 3), (), (1, 2, 1, 2, 1, 2, 1)),
        (1, (4, 2, 0), (6,), (1, 2, 1, 2, 1, 0, 1)),
        (1, (4, 4, 0), (9,), (1, 2, 1, 2, 1, 2, 1, 2, 0)),
        (0, (2, 0), (), (1, 1)),
    ],
)
def test_vertical_order_published_examples(separate, clusters, positions, expected):
    dist = SelectedNodeDistribution(separate=separate, clusters=clusters)
    got = vertical_order(dist, SeparatePositions(positions))
    assert got.labels == expected


def test_vertical_order_validates_positions():
    dist = SelectedNodeDistribution(separate=1, clusters=(2, 0))
    with pytest.raises(ConfigError):
        vertical_order(dist, SeparatePositions(()))  # count mismatch
    with pytest.raises(ConfigError):
        vertical_order(dist, SeparatePositions((4,)))  # out of range


@pytest.mark.parametrize(
    "k, j, expected",
    [
        (8, 8, (1, 2, 1, 2, 1, 2, 1, 0)),
        (8, 4, (1, 2, 1, 0, 2, 1, 2, 1)),
        (7, 7, (1, 2, 1, 2, 1, 1, 0)),
    ],
)
def test_optimal_order_with_separate_at_published_examples(k, j, expected):
    nodes = NodeParams(n=13, k=k, L=3, R=4, E=1)
    assert optimal_order_with_separate_at(nodes, j).labels == expected


def test_optimal_order_position_range():
    nodes = NodeParams(n=13, k=8, L=3, R=4, E=1)
    with pytest.raises(ConfigError):
        optimal_order_with_separate_at(nodes, 0)
    with pytest.raises(ConfigError):
        optimal_order_with_separate_at(nodes, 9)
    with pytest.raises(ConfigError):
        optimal_order_with_separate_at(NodeParams(n=12, k=8, L=3, R=4, E=0), 8)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 3), st.integers(1, 12),
       st.integers(0, 1), st.data())
@settings(max_examples=150, deadline=None)
def test_constructions_produce_members(L, R, E, k, s0, data):
    n = L * R + E
    assume(2 <= n and 1 <= k <= n - 1)
    assume(s0 <= E and k - s0 <= L * R and s0 <= k)
    nodes = NodeParams(n=n, k=k, L=L, R=R, E=E)
    dist = horizontal_selection(nodes, s0)
    assert dist.is_member(nodes)

    positions = tuple(
        sorted(
            data.draw(
                st.lists(
                    st.integers(1, k), min_size=s0, max_size=s0, unique=True
                )
            )
        )
    )
    order = vertical_order(dist, SeparatePositions(positions))
    assert order.matches(dist)
    assert all(order.labels[p - 1] == 0 for p in positions)
