"""Multilevel tree contraction.

Each round classifies the current tree view, contracts every non-alpha
edge into supervertices, and keeps the alpha edges (with their global
ranks) as the next, strictly smaller view.  The recursion stops once a
view has no alpha edges; its dendrogram is a single sorted chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .classify import EdgeKind, edge_kinds_from_ends, kind_counts
from .tree_core import IncidenceIndex, RankedTree

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None


class UnionFind:
    """Disjoint sets over 0..size-1 with deterministic representatives.

    The representative of a class is always its smallest member, so the
    result of a sequence of unite calls does not depend on their order.
    """

    def __init__(self, size: int):
        self._parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self._parent
        if not 0 <= x < len(parent):
            raise IndexError(f"element {x} out of range")
        root = parent[x]
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:  # path compression
            parent[x], x = root, parent[x]
        return root

    def unite(self, x: int, y: int) -> int:
        rx, ry = self.find(x), self.find(y)
        if rx > ry:
            rx, ry = ry, rx
        self._parent[ry] = rx
        return rx


def _uf_roots_py(num_vertices, cu, cv):
    parent = np.arange(num_vertices)
    for i in range(cu.shape[0]):
        a = cu[i]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = cv[i]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b
    for x in range(num_vertices):
        r = x
        while parent[r] != r:
            r = parent[r]
        parent[x] = r
    return parent


if njit is not None:
    _uf_roots = njit(cache=True)(_uf_roots_py)
else:  # pragma: no cover
    _uf_roots = _uf_roots_py


def component_labels(num_vertices: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Connected-component labels after contracting the given edges.

    Labels are contiguous 0-based ids, ordered by each component's
    smallest member, so they are canonical regardless of edge order.
    """
    u = np.ascontiguousarray(u, dtype=np.int64)
    v = np.ascontiguousarray(v, dtype=np.int64)
    roots = _uf_roots(num_vertices, u, v)
    is_root = roots == np.arange(num_vertices)
    ids = np.cumsum(is_root) - 1
    return ids[roots]


class TreeView(NamedTuple):
    """A (possibly contracted) tree: vertex count plus edges carrying
    their global ranks."""

    num_vertices: int
    u: np.ndarray
    v: np.ndarray
    rank: np.ndarray  # global edge ranks, ascending


@dataclass(frozen=True)
class ContractionLevel:
    """One level of the hierarchy: the alpha-edges that survived the
    contraction, remapped onto contiguous supervertex ids."""

    surviving_edges: np.ndarray      # global ranks, ascending
    vertex_map: np.ndarray           # previous-level vertex -> supervertex
    super_max_incident: np.ndarray   # per supervertex, largest surviving rank or -1
    super_count: int
    edge_u: np.ndarray               # surviving-edge endpoints in supervertex ids
    edge_v: np.ndarray

    def view(self) -> TreeView:
        return TreeView(self.super_count, self.edge_u, self.edge_v,
                        self.surviving_edges)


@dataclass
class ContractionHierarchy:
    """All contraction levels plus per-edge retirement bookkeeping.

    ``retirement_level[e]`` is the last view index (0 = the input tree)
    at which edge e is still present; edges surviving to the final view
    carry the sentinel ``num_levels``.  ``view_kind_counts`` holds
    (n_alpha, n_leaf, n_chain, edge count) for every view 0..num_levels.
    """

    levels: list[ContractionLevel]
    retirement_level: np.ndarray
    view_kind_counts: list[tuple[int, int, int, int]]
    edge_u: np.ndarray  # rank-order endpoints of the input tree
    edge_v: np.ndarray
    num_vertices: int

    @property
    def num_levels(self) -> int:
        return len(self.levels)

    @property
    def num_edges(self) -> int:
        return int(self.retirement_level.shape[0])


def view_max_incident(view: TreeView) -> np.ndarray:
    """Largest incident global rank per view vertex (-1 if isolated)."""
    mi = np.full(view.num_vertices, -1, dtype=np.int64)
    np.maximum.at(mi, view.u, view.rank)
    np.maximum.at(mi, view.v, view.rank)
    return mi


def view_kinds(view: TreeView, max_incident: np.ndarray | None = None) -> np.ndarray:
    if max_incident is None:
        max_incident = view_max_incident(view)
    at_u = view.rank == max_incident[view.u]
    at_v = view.rank == max_incident[view.v]
    return edge_kinds_from_ends(at_u, at_v)


def contract_level(view: TreeView, alpha_mask: np.ndarray) -> ContractionLevel:
    """Contract all non-alpha edges of ``view`` into supervertices."""
    keep = alpha_mask
    vertex_map = component_labels(view.num_vertices, view.u[~keep], view.v[~keep])
    super_count = int(vertex_map.max()) + 1
    edge_u = vertex_map[view.u[keep]]
    edge_v = vertex_map[view.v[keep]]
    surviving = view.rank[keep]
    smi = np.full(super_count, -1, dtype=np.int64)
    np.maximum.at(smi, edge_u, surviving)
    np.maximum.at(smi, edge_v, surviving)
    return ContractionLevel(
        surviving_edges=surviving,
        vertex_map=vertex_map,
        super_max_incident=smi,
        super_count=super_count,
        edge_u=edge_u,
        edge_v=edge_v,
    )


def build_hierarchy(tree: RankedTree, inc: IncidenceIndex) -> ContractionHierarchy:
    """Iterate classify -> contract until a view has no alpha edges.

    At least one contraction is always performed, so even a tree with no
    alpha edges (e.g. a star) yields one trivial level.
    """
    n = tree.num_edges
    view = TreeView(tree.num_vertices, tree.u, tree.v, np.arange(n))
    max_incident = inc.max_incident
    levels: list[ContractionLevel] = []
    counts: list[tuple[int, int, int, int]] = []
    retirement = np.full(n, -1, dtype=np.int64)

    while True:
        kinds = view_kinds(view, max_incident)
        counts.append((*kind_counts(kinds), int(view.rank.shape[0])))
        alpha = kinds == EdgeKind.ALPHA
        if levels and not alpha.any():
            retirement[view.rank] = len(levels)
            break
        level = contract_level(view, alpha)
        retirement[view.rank[~alpha]] = len(levels)
        levels.append(level)
        view = level.view()
        max_incident = level.super_max_incident

    return ContractionHierarchy(
        levels=levels,
        retirement_level=retirement,
        view_kind_counts=counts,
        edge_u=tree.u,
        edge_v=tree.v,
        num_vertices=tree.num_vertices,
    )
