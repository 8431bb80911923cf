"""Input tree representation, deterministic edge ranking, and incidence index.

Everything downstream speaks in *ranks*: the position of an edge after
sorting all edges by weight in descending order.  Rank 0 is the heaviest
edge.  Ties are broken by ascending original id, so the rank order is a
strict total order and identical across runs and thread counts.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np


class TreeFormatError(ValueError):
    """Input is not a well-formed weighted spanning tree."""


@dataclass(frozen=True)
class WeightedTree:
    """A spanning tree given as a weighted undirected edge list.

    Vertex ids are 0-based and contiguous.  Edge arrays are parallel and
    indexed by original id (input order).
    """

    num_vertices: int
    u: np.ndarray            # int64, endpoint a
    v: np.ndarray            # int64, endpoint b
    w: np.ndarray            # float64, finite weights
    original_id: np.ndarray  # int64, 0..n-1

    @property
    def num_edges(self) -> int:
        return int(self.u.shape[0])


@dataclass(frozen=True)
class RankedTree:
    """A tree with edges permuted into descending-weight rank order."""

    base: WeightedTree
    rank_of: np.ndarray  # original id -> rank
    orig_of: np.ndarray  # rank -> original id
    u: np.ndarray        # endpoint a, indexed by rank
    v: np.ndarray        # endpoint b, indexed by rank
    w: np.ndarray        # weight, indexed by rank

    @property
    def num_vertices(self) -> int:
        return self.base.num_vertices

    @property
    def num_edges(self) -> int:
        return int(self.u.shape[0])


@dataclass(frozen=True)
class IncidenceIndex:
    """Per-vertex adjacency in rank space.

    ``max_incident[x]`` is the numerically largest (i.e. lightest) edge
    rank incident to vertex ``x``.  The full CSR neighbor lists are built
    lazily; the construction pipeline itself only needs ``max_incident``.
    """

    tree: RankedTree
    max_incident: np.ndarray  # per vertex, edge rank
    _csr: dict = field(default_factory=dict, repr=False, compare=False)

    def _ensure_csr(self) -> None:
        if "offsets" in self._csr:
            return
        t = self.tree
        ends = np.concatenate([t.u, t.v])
        ranks = np.concatenate([np.arange(t.num_edges)] * 2)
        order = np.argsort(ends, kind="stable")
        counts = np.bincount(ends, minlength=t.num_vertices)
        offsets = np.zeros(t.num_vertices + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        self._csr["offsets"] = offsets
        self._csr["neighbors"] = ranks[order]

    @property
    def offsets(self) -> np.ndarray:
        self._ensure_csr()
        return self._csr["offsets"]

    @property
    def neighbors(self) -> np.ndarray:
        self._ensure_csr()
        return self._csr["neighbors"]

    def incident(self, vertex: int) -> np.ndarray:
        """Edge ranks incident to ``vertex``, in ascending rank order."""
        o = self.offsets
        inc = self.neighbors[o[vertex]:o[vertex + 1]]
        return np.sort(inc)


def _connected(num_vertices: int, u: np.ndarray, v: np.ndarray) -> bool:
    # Union-find sweep over the edge list; one class iff connected.
    from .contraction import component_labels

    labels = component_labels(num_vertices, u, v)
    return int(labels.max(initial=0)) == 0


def weighted_tree(num_vertices: int, u, v, w) -> WeightedTree:
    """Validate and build a :class:`WeightedTree` from parallel arrays."""
    u = np.ascontiguousarray(u, dtype=np.int64)
    v = np.ascontiguousarray(v, dtype=np.int64)
    w = np.ascontiguousarray(w, dtype=np.float64)
    n = u.shape[0]
    if num_vertices < 2:
        raise TreeFormatError("a tree needs at least 2 vertices")
    if n != num_vertices - 1:
        raise TreeFormatError(
            f"edge count {n} != numVertices - 1 = {num_vertices - 1}"
        )
    if v.shape[0] != n or w.shape[0] != n:
        raise TreeFormatError("edge arrays have mismatched lengths")
    if not np.all(np.isfinite(w)):
        bad = int(np.nonzero(~np.isfinite(w))[0][0])
        raise TreeFormatError(f"non-finite weight on edge {bad}")
    if u.min(initial=0) < 0 or v.min(initial=0) < 0:
        raise TreeFormatError("negative vertex id")
    if max(u.max(initial=-1), v.max(initial=-1)) >= num_vertices:
        raise TreeFormatError("vertex id out of range")
    if np.any(u == v):
        bad = int(np.nonzero(u == v)[0][0])
        raise TreeFormatError(f"self-loop on edge {bad}")
    key = np.minimum(u, v) * np.int64(num_vertices) + np.maximum(u, v)
    if np.unique(key).shape[0] != n:
        raise TreeFormatError("duplicate undirected edge")
    if not _connected(num_vertices, u, v):
        raise TreeFormatError("input is disconnected or cyclic, not a tree")
    return WeightedTree(num_vertices, u, v, w, np.arange(n, dtype=np.int64))


def load_edge_list(stream) -> WeightedTree:
    """Parse a "u v w" edge-list text stream into a validated tree.

    Lines starting with '#' and blank lines are ignored.  The vertex count
    is inferred as max id + 1.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    us, vs, ws = [], [], []
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 3:
            raise TreeFormatError(f"line {lineno}: expected 'u v w', got {text!r}")
        try:
            us.append(int(parts[0]))
            vs.append(int(parts[1]))
            ws.append(float(parts[2]))
        except ValueError as exc:
            raise TreeFormatError(f"line {lineno}: {exc}") from None
    if not us:
        raise TreeFormatError("empty edge list")
    u = np.asarray(us, dtype=np.int64)
    v = np.asarray(vs, dtype=np.int64)
    if u.min(initial=0) < 0 or v.min(initial=0) < 0:
        raise TreeFormatError("negative vertex id")
    num_vertices = int(max(u.max(), v.max())) + 1
    return weighted_tree(num_vertices, u, v, np.asarray(ws))


def rank_edges(tree: WeightedTree) -> RankedTree:
    """Permute edges into descending-weight order.

    Equal weights are ordered by ascending original id (stable sort on the
    negated weights), so the resulting rank permutation is deterministic.
    """
    order = np.argsort(-tree.w, kind="stable")
    rank_of = np.empty(tree.num_edges, dtype=np.int64)
    rank_of[order] = np.arange(tree.num_edges)
    return RankedTree(
        base=tree,
        rank_of=rank_of,
        orig_of=order,
        u=tree.u[order],
        v=tree.v[order],
        w=tree.w[order],
    )


def build_incidence(tree: RankedTree) -> IncidenceIndex:
    """Compute per-vertex incidence in rank space with max_incident."""
    ranks = np.arange(tree.num_edges)
    max_incident = np.full(tree.num_vertices, -1, dtype=np.int64)
    np.maximum.at(max_incident, tree.u, ranks)
    np.maximum.at(max_incident, tree.v, ranks)
    return IncidenceIndex(tree=tree, max_incident=max_incident)
