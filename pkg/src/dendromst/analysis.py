"""Dendrogram and hierarchy statistics plus throughput accounting."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .contraction import ContractionHierarchy
from .expansion import ROOT, ChainAssignment, Dendrogram


@dataclass
class DendroStats:
    height: int
    skewness: float
    chain_count: int
    per_level: list[tuple[int, int, int, int]]  # (n_alpha, n_leaf, n_chain, survivors)


def dendrogram_height(d: Dendrogram) -> int:
    """Maximum number of edge-node ancestors over all vertex nodes.

    Edge depths resolve in one ascending-rank pass since parents are
    always heavier (smaller rank).
    """
    n = d.num_edges
    depth = np.empty(n, dtype=np.int64)
    parent = d.edge_parent
    for e in range(n):
        p = parent[e]
        depth[e] = 1 if p == ROOT else depth[p] + 1
    return int(depth[d.vertex_parent].max())


def skewness(d: Dendrogram) -> float:
    """Height over the balanced ideal log2(n); 0 for n < 2."""
    n = d.num_edges
    if n < 2:
        return 0.0
    return dendrogram_height(d) / math.log2(n)


def level_stats(h: ContractionHierarchy) -> list[tuple[int, int, int, int]]:
    """(n_alpha, n_leaf, n_chain, survivors) per view, identities checked."""
    stats = h.view_kind_counts
    for n_alpha, n_leaf, n_chain, survivors in stats:
        if survivors == 0:
            continue
        assert n_alpha + n_leaf + n_chain == survivors
        assert n_alpha == n_leaf - 1
    return list(stats)


def throughput(points: int, seconds: float) -> float:
    """Millions of dataset points processed per second."""
    if seconds <= 0:
        raise ValueError("duration must be positive")
    return 1e-6 * points / seconds


def dendro_stats(d: Dendrogram, h: ContractionHierarchy,
                 assignment: ChainAssignment) -> DendroStats:
    height = dendrogram_height(d)
    return DendroStats(
        height=height,
        skewness=height / math.log2(d.num_edges) if d.num_edges >= 2 else 0.0,
        chain_count=assignment.num_chains(),
        per_level=level_stats(h),
    )
