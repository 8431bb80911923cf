"""Union-find, component labeling, and the multilevel contraction."""
from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings

from dendromst import (UnionFind, build_hierarchy, build_incidence,
                       component_labels, rank_edges, weighted_tree)
from dendromst.contraction import _uf_roots_py

from .conftest import make_ranked, ranked_trees


class TestUnionFind:
    def test_find_and_unite(self):
        uf = UnionFind(5)
        assert uf.find(3) == 3
        uf.unite(3, 4)
        uf.unite(1, 2)
        assert uf.find(4) == 3
        assert uf.find(2) == 1
        uf.unite(4, 1)
        assert uf.find(2) == 1

    def test_representative_is_smallest_member(self):
        uf = UnionFind(6)
        uf.unite(5, 4)
        uf.unite(4, 2)
        assert uf.find(5) == 2

    def test_out_of_range_raises(self):
        uf = UnionFind(3)
        with pytest.raises(IndexError, match="out of range"):
            uf.find(3)
        with pytest.raises(IndexError, match="out of range"):
            uf.find(-1)

    def test_union_order_does_not_change_representatives(self):
        rng = np.random.default_rng(0)
        pairs = [(int(rng.integers(0, 30)), int(rng.integers(0, 30)))
                 for _ in range(40)]
        a, b = UnionFind(30), UnionFind(30)
        for x, y in pairs:
            a.unite(x, y)
        for x, y in reversed(pairs):
            b.unite(x, y)
        assert [a.find(x) for x in range(30)] == [b.find(x) for x in range(30)]


class TestComponentLabels:
    def test_canonical_labels(self):
        labels = component_labels(6, np.array([0, 4]), np.array([1, 5]))
        assert labels.tolist() == [0, 0, 1, 2, 3, 3]

    def test_no_edges(self):
        assert component_labels(3, np.array([], dtype=np.int64),
                                np.array([], dtype=np.int64)).tolist() == [0, 1, 2]

    def test_jitted_kernel_matches_python(self):
        from dendromst.contraction import _uf_roots

        rng = np.random.default_rng(1)
        u = rng.integers(0, 50, 30)
        v = rng.integers(0, 50, 30)
        assert np.array_equal(_uf_roots(50, u, v), _uf_roots_py(50, u, v))


class TestHierarchy:
    def _build(self, ranked):
        return build_hierarchy(ranked, build_incidence(ranked))

    def test_path_example(self):
        # path 0-1-2-3 with ranks 2, 0, 1: one alpha edge survives one level
        ranked = rank_edges(weighted_tree(4, [0, 1, 2], [1, 2, 3],
                                          [1.0, 3.0, 2.0]))
        h = self._build(ranked)
        assert h.num_levels == 1
        assert h.retirement_level.tolist() == [1, 0, 0]
        assert h.view_kind_counts == [(1, 2, 0, 3), (0, 1, 0, 1)]
        level = h.levels[0]
        assert level.surviving_edges.tolist() == [0]
        assert level.vertex_map.tolist() == [0, 0, 1, 1]
        assert level.super_max_incident.tolist() == [0, 0]

    def test_star_contracts_in_one_trivial_level(self):
        ranked = make_ranked("star", 9, np.random.default_rng(2))
        h = self._build(ranked)
        assert h.num_levels == 1
        assert h.levels[0].super_count == 1
        assert h.levels[0].surviving_edges.shape[0] == 0
        assert np.all(h.retirement_level == 0)

    def test_single_edge(self):
        ranked = rank_edges(weighted_tree(2, [0], [1], [1.0]))
        h = self._build(ranked)
        assert h.num_levels == 1
        assert h.retirement_level.tolist() == [0]

    @settings(max_examples=100, deadline=None)
    @given(ranked_trees(max_vertices=256))
    def test_views_shrink_and_level_bound(self, ranked):
        h = self._build(ranked)
        sizes = [c[3] for c in h.view_kind_counts]
        assert all(b <= a // 2 for a, b in zip(sizes, sizes[1:]))
        assert h.num_levels <= math.ceil(math.log2(ranked.num_edges + 1))

    @settings(max_examples=50, deadline=None)
    @given(ranked_trees(max_vertices=128))
    def test_retirement_levels_consistent(self, ranked):
        h = self._build(ranked)
        retirement = h.retirement_level
        assert np.all(retirement >= 0)
        assert np.all(retirement <= h.num_levels)
        survivors = h.levels[-1].surviving_edges
        # final-view survivors carry the sentinel level
        assert np.array_equal(np.nonzero(retirement == h.num_levels)[0],
                              np.sort(survivors))

    @settings(max_examples=50, deadline=None)
    @given(ranked_trees(max_vertices=128))
    def test_vertex_map_composition(self, ranked):
        h = self._build(ranked)
        comp = np.arange(ranked.num_vertices)
        comps = []
        for level in h.levels:
            comp = level.vertex_map[comp]
            comps.append(comp.copy())
        for e in range(ranked.num_edges):
            r = int(h.retirement_level[e])
            a, b = int(ranked.u[e]), int(ranked.v[e])
            if r < h.num_levels:
                # contracted at level r: endpoints merge there and stay merged
                assert comps[r][a] == comps[r][b]
                if r > 0:
                    assert comps[r - 1][a] != comps[r - 1][b]
            else:
                assert comps[-1][a] != comps[-1][b]

    @settings(max_examples=50, deadline=None)
    @given(ranked_trees(max_vertices=128))
    def test_surviving_ranks_are_nested_subsets(self, ranked):
        h = self._build(ranked)
        previous = set(range(ranked.num_edges))
        for level in h.levels:
            current = set(level.surviving_edges.tolist())
            assert current <= previous
            assert np.all(np.diff(level.surviving_edges) > 0)
            previous = current
