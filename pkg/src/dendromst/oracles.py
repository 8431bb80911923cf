"""Reference dendrogram constructions and ancestry utilities.

These are the ground truth the contraction pipeline is verified against:
a recursive top-down splitter (test-scale only, O(n*h)) and the
sequential bottom-up union-find construction.  Both produce the exact
same parent arrays as the main pipeline under the shared tie-break.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from .contraction import UnionFind
from .expansion import ROOT, Dendrogram
from .tree_core import RankedTree


def dendrogram_top_down(tree: RankedTree) -> Dendrogram:
    """Recursively remove the heaviest edge of each component.

    The removed edge becomes the parent of each sub-component's root
    edge; a vertex's parent is the edge whose removal isolates it.
    Intended for verification at small n.
    """
    n = tree.num_edges
    edge_parent = np.full(n, ROOT, dtype=np.int64)
    vertex_parent = np.full(tree.num_vertices, ROOT, dtype=np.int64)
    u, v = tree.u, tree.v

    # (vertices, edge ranks, parent edge) components, processed iteratively
    stack = [(list(range(tree.num_vertices)), list(range(n)), ROOT)]
    while stack:
        vertices, edges, parent = stack.pop()
        if not edges:
            vertex_parent[vertices[0]] = parent
            continue
        e = min(edges)
        edge_parent[e] = parent
        adj: dict[int, list[tuple[int, int]]] = {x: [] for x in vertices}
        for r in edges:
            if r == e:
                continue
            adj[u[r]].append((r, v[r]))
            adj[v[r]].append((r, u[r]))
        for start in (int(u[e]), int(v[e])):
            side_vertices = [start]
            side_edges = []
            seen = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for r, y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        side_vertices.append(y)
                        side_edges.append(r)
                        queue.append(y)
            stack.append((side_vertices, side_edges, e))
    return Dendrogram(edge_parent=edge_parent, vertex_parent=vertex_parent)


def dendrogram_bottom_up(tree: RankedTree) -> Dendrogram:
    """Sequential union-find construction, edges from lightest to heaviest.

    Per merged component we track the latest (heaviest-so-far) edge; the
    next edge touching the component becomes its parent.  This is the
    production-grade sequential reference.
    """
    n = tree.num_edges
    edge_parent = np.full(n, ROOT, dtype=np.int64)
    vertex_parent = np.full(tree.num_vertices, ROOT, dtype=np.int64)
    uf = UnionFind(tree.num_vertices)
    latest = [ROOT] * tree.num_vertices  # per representative
    u, v = tree.u, tree.v
    for rank in range(n - 1, -1, -1):  # ascending weight
        for x in (int(u[rank]), int(v[rank])):
            r = latest[uf.find(x)]
            if r != ROOT:
                edge_parent[r] = rank
            else:
                vertex_parent[x] = rank
        uf.unite(int(u[rank]), int(v[rank]))
        latest[uf.find(int(u[rank]))] = rank
    return Dendrogram(edge_parent=edge_parent, vertex_parent=vertex_parent)


def ancestors(d: Dendrogram, edge_rank: int) -> list[int]:
    """Ancestor chain of an edge node, starting at the edge itself."""
    chain = [edge_rank]
    while d.edge_parent[chain[-1]] != ROOT:
        chain.append(int(d.edge_parent[chain[-1]]))
    return chain


def lcda_by_ancestors(d: Dendrogram, ei: int, ej: int) -> int:
    """Deepest common ancestor of two edge nodes (each is its own ancestor)."""
    anc = set(ancestors(d, ei))
    x = ej
    while x not in anc:
        x = int(d.edge_parent[x])
    return x


def heaviest_on_path(tree: RankedTree, ei: int, ej: int) -> int:
    """Heaviest edge (smallest rank) on the tree path between two edges.

    The path includes both endpoints.  Computed by BFS over the
    edge-adjacency graph, where the unique tree path is the shortest one.
    """
    if ei == ej:
        return ei
    n = tree.num_edges
    incident: dict[int, list[int]] = {}
    for r in range(n):
        incident.setdefault(int(tree.u[r]), []).append(r)
        incident.setdefault(int(tree.v[r]), []).append(r)
    came_from = {ei: ei}
    queue = deque([ei])
    while queue and ej not in came_from:
        e = queue.popleft()
        for x in (int(tree.u[e]), int(tree.v[e])):
            for f in incident[x]:
                if f not in came_from:
                    came_from[f] = e
                    queue.append(f)
    best = ej
    e = ej
    while e != ei:
        e = came_from[e]
        best = min(best, e)
    return best
