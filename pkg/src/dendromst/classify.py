"""Vertex-node parents and the leaf / chain / alpha edge taxonomy.

An edge node in the dendrogram has exactly two children.  Counting how
many of them are vertex nodes classifies the edge: two (leaf), one
(chain) or zero (alpha).  Both checks are local: an edge of rank k with
endpoints (a, b) has vertex a as a child iff k == max_incident(a).
"""
from __future__ import annotations

from enum import IntEnum

import numpy as np

from .tree_core import IncidenceIndex


class EdgeKind(IntEnum):
    LEAF = 0
    CHAIN = 1
    ALPHA = 2


def vertex_parents(inc: IncidenceIndex) -> np.ndarray:
    """Dendrogram parent of every vertex node: its lightest incident edge."""
    return inc.max_incident.copy()


def classify_edges(inc: IncidenceIndex) -> np.ndarray:
    """Classify every edge rank as LEAF, CHAIN or ALPHA (int8 array)."""
    t = inc.tree
    ranks = np.arange(t.num_edges)
    at_u = ranks == inc.max_incident[t.u]
    at_v = ranks == inc.max_incident[t.v]
    return edge_kinds_from_ends(at_u, at_v)


def edge_kinds_from_ends(at_u: np.ndarray, at_v: np.ndarray) -> np.ndarray:
    """Kinds from the two per-endpoint "is max incident" flags."""
    kinds = np.full(at_u.shape[0], EdgeKind.CHAIN, dtype=np.int8)
    kinds[at_u & at_v] = EdgeKind.LEAF
    kinds[~at_u & ~at_v] = EdgeKind.ALPHA
    return kinds


def kind_counts(kinds: np.ndarray) -> tuple[int, int, int]:
    """(n_alpha, n_leaf, n_chain) for a kinds array."""
    n_leaf = int(np.count_nonzero(kinds == EdgeKind.LEAF))
    n_chain = int(np.count_nonzero(kinds == EdgeKind.CHAIN))
    n_alpha = int(np.count_nonzero(kinds == EdgeKind.ALPHA))
    return n_alpha, n_leaf, n_chain
