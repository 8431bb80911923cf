"""Height, skewness, per-level statistics, and throughput accounting."""
from __future__ import annotations

import math

import numpy as np
import pytest

from dendromst import (build_hierarchy, build_incidence, dendro_stats,
                       dendrogram_height, level_stats, pandora, rank_edges,
                       skewness, throughput, weighted_tree)
from dendromst.expansion import assign_chains

from .conftest import make_ranked


def _path_dendrogram():
    return pandora(rank_edges(weighted_tree(4, [0, 1, 2], [1, 2, 3],
                                            [1.0, 3.0, 2.0])))


def test_height_of_balanced_path_example():
    assert dendrogram_height(_path_dendrogram()) == 2


def test_height_and_skewness_of_star():
    ranked = make_ranked("star", 33, np.random.default_rng(0))
    d = pandora(ranked)
    n = ranked.num_edges
    assert dendrogram_height(d) == n
    assert skewness(d) == pytest.approx(n / math.log2(n))


def test_skewness_of_single_edge_is_zero():
    assert skewness(pandora(rank_edges(weighted_tree(2, [0], [1], [1.0])))) == 0.0


def test_level_stats_checks_identities():
    ranked = make_ranked("caterpillar", 50, np.random.default_rng(1))
    h = build_hierarchy(ranked, build_incidence(ranked))
    stats = level_stats(h)
    assert len(stats) == h.num_levels + 1
    assert stats[0][3] == ranked.num_edges


def test_throughput():
    assert throughput(2_000_000, 2.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        throughput(10, 0.0)


def test_dendro_stats_integration():
    ranked = make_ranked("attach", 80, np.random.default_rng(2))
    inc = build_incidence(ranked)
    h = build_hierarchy(ranked, inc)
    assignment = assign_chains(h)
    d = pandora(ranked)
    stats = dendro_stats(d, h, assignment)
    assert stats.height == dendrogram_height(d)
    assert stats.skewness == pytest.approx(skewness(d))
    assert stats.chain_count == assignment.num_chains()
    assert stats.per_level == h.view_kind_counts
