"""Dendrogram expansion: map retired edges to leaf chains and stitch.

Every contracted edge belongs to exactly one chain, identified by the
terminal edge it hangs from and by which endpoint supervertex of that
terminal it sits in.  Chains sorted by rank are partial dendrograms;
linking each chain head to its terminal edge yields the full parent
structure.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contraction import ContractionHierarchy, build_hierarchy
from .tree_core import RankedTree, build_incidence
from .classify import vertex_parents

#: Parent sentinel for the dendrogram root (and the root chain's terminal).
ROOT = -1


@dataclass(frozen=True)
class ChainKey:
    """Identity of one dendrogram chain.

    ``terminal_edge`` is the global rank of the contracted-level edge the
    chain hangs from (ROOT for the root chain); ``anchor_supervertex`` is
    the supervertex, at ``level``, holding the chain's members and
    distinguishes the two chains a terminal edge can carry.
    """

    terminal_edge: int
    anchor_supervertex: int
    level: int


@dataclass
class ChainAssignment:
    """Per-edge chain membership as three parallel arrays."""

    terminal: np.ndarray  # terminal edge rank, ROOT for the root chain
    anchor: np.ndarray    # anchor supervertex id (0 for the root chain)
    level: np.ndarray     # matched contraction level (0 for the root chain)

    def key_of(self, edge_rank: int) -> ChainKey:
        return ChainKey(int(self.terminal[edge_rank]),
                        int(self.anchor[edge_rank]),
                        int(self.level[edge_rank]))

    def num_chains(self) -> int:
        keys = np.stack([self.terminal, self.anchor], axis=1)
        return int(np.unique(keys, axis=0).shape[0])


@dataclass
class Dendrogram:
    """Parent pointers for all edge nodes and vertex nodes.

    ``edge_parent[e]`` is the parent edge rank of edge node e (ROOT for
    the heaviest edge); ``vertex_parent[x]`` is the parent edge rank of
    vertex node x.  Parents are always heavier: edge_parent[e] < e.
    """

    edge_parent: np.ndarray
    vertex_parent: np.ndarray

    @property
    def num_edges(self) -> int:
        return int(self.edge_parent.shape[0])

    @property
    def num_vertices(self) -> int:
        return int(self.vertex_parent.shape[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dendrogram):
            return NotImplemented
        return (np.array_equal(self.edge_parent, other.edge_parent)
                and np.array_equal(self.vertex_parent, other.vertex_parent))


def level_parent(edge_rank: int, level: int, h: ContractionHierarchy) -> int | None:
    """Parent edge of the level-``level`` supervertex containing the edge.

    Meaningful for levels at which the edge is already contracted (both
    endpoints then map to the same supervertex).  Returns None when that
    supervertex has no surviving incident edge.
    """
    x = int(h.edge_u[edge_rank])
    for lvl in h.levels[:level]:
        x = int(lvl.vertex_map[x])
    p = int(h.levels[level - 1].super_max_incident[x])
    return None if p < 0 else p


def assign_chains(h: ContractionHierarchy) -> ChainAssignment:
    """Assign every edge to the earliest leaf chain containing it.

    An edge retired at view L is checked against levels L+1, L+2, ...;
    the first level where the supervertex parent exists and is heavier
    (smaller rank) than the edge wins.  Edges that match no level, and
    final-view survivors, fall into the root chain.
    """
    n = h.num_edges
    terminal = np.full(n, ROOT, dtype=np.int64)
    anchor = np.zeros(n, dtype=np.int64)
    level_arr = np.zeros(n, dtype=np.int64)
    retirement = h.retirement_level

    pending = np.arange(n)
    comp = None
    for k, lvl in enumerate(h.levels, start=1):
        comp = lvl.vertex_map if comp is None else lvl.vertex_map[comp]
        eligible = retirement[pending] < k
        cand = pending[eligible]
        if cand.shape[0] == 0:
            pending = pending[~eligible] if eligible.any() else pending
            continue
        sv = comp[h.edge_u[cand]]
        p = lvl.super_max_incident[sv]
        hit = (p >= 0) & (p < cand)  # parent exists and is heavier
        matched = cand[hit]
        terminal[matched] = p[hit]
        anchor[matched] = sv[hit]
        level_arr[matched] = k
        pending = np.concatenate([pending[~eligible], cand[~hit]])
    return ChainAssignment(terminal=terminal, anchor=anchor, level=level_arr)


def stitch_chains(assignment: ChainAssignment, vertex_parent: np.ndarray) -> Dendrogram:
    """Sort each chain by rank and link heads to their terminal edges."""
    n = assignment.terminal.shape[0]
    ranks = np.arange(n)
    order = np.lexsort((ranks, assignment.anchor, assignment.terminal))
    t_s = assignment.terminal[order]
    a_s = assignment.anchor[order]
    head = np.ones(n, dtype=bool)
    head[1:] = (t_s[1:] != t_s[:-1]) | (a_s[1:] != a_s[:-1])
    prev = np.concatenate(([ROOT], order[:-1]))
    parent_sorted = np.where(head, t_s, prev)
    edge_parent = np.empty(n, dtype=np.int64)
    edge_parent[order] = parent_sorted
    return Dendrogram(edge_parent=edge_parent,
                      vertex_parent=np.asarray(vertex_parent, dtype=np.int64).copy())


def pandora(tree: RankedTree) -> Dendrogram:
    """Full contraction-based dendrogram construction pipeline."""
    inc = build_incidence(tree)
    vp = vertex_parents(inc)
    h = build_hierarchy(tree, inc)
    return stitch_chains(assign_chains(h), vp)
