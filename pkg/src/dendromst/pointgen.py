"""Point-cloud generation and mutual-reachability MST construction.

The MST uses dense Prim over the implicit complete graph: O(n^2)
distance evaluations, nothing stored.  Correct and deterministic at desk
scale; all comparisons run on squared distances (max and sqrt commute
for non-negative values) to keep the scan cheap.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .tree_core import WeightedTree, weighted_tree

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

_NUMBA_MIN_N = 4096


@dataclass(frozen=True)
class PointCloud:
    coords: np.ndarray  # (n, dim) float64
    dist: str
    seed: int

    @property
    def n(self) -> int:
        return int(self.coords.shape[0])

    @property
    def dim(self) -> int:
        return int(self.coords.shape[1])


def gen_points(dist: str, n: int, dim: int, seed: int) -> PointCloud:
    """Reproducible point cloud: standard normal or uniform [0,1)^dim."""
    if n < 2:
        raise ValueError("need at least 2 points")
    if not 2 <= dim <= 8:
        raise ValueError("dim must be in [2, 8]")
    rng = np.random.default_rng(seed)
    if dist == "normal":
        coords = rng.standard_normal((n, dim))
    elif dist == "uniform":
        coords = rng.random((n, dim))
    else:
        raise ValueError(f"unknown distribution {dist!r}")
    return PointCloud(coords=coords, dist=dist, seed=seed)


def core_distances(coords: np.ndarray, min_pts: int) -> np.ndarray:
    """Distance to each point's min_pts-th nearest neighbor, self included."""
    d, _ = cKDTree(coords).query(coords, k=min_pts)
    if min_pts == 1:
        return np.asarray(d, dtype=np.float64)
    return np.ascontiguousarray(d[:, -1], dtype=np.float64)


def mutual_reachability(coords: np.ndarray, core: np.ndarray,
                        i: int, j: int) -> float:
    """max(core_i, core_j, euclidean distance); the clustering metric."""
    d = float(np.linalg.norm(coords[i] - coords[j]))
    return max(d, float(core[i]), float(core[j]))


def _prim_numpy(pts, core_sq):
    n = pts.shape[0]
    best = np.full(n, np.inf)
    best_from = np.zeros(n, dtype=np.int64)
    visited = np.zeros(n, dtype=bool)
    out_u = np.empty(n - 1, dtype=np.int64)
    out_v = np.empty(n - 1, dtype=np.int64)
    out_w = np.empty(n - 1, dtype=np.float64)
    visited[0] = True
    cur = 0
    for it in range(n - 1):
        d = ((pts - pts[cur]) ** 2).sum(axis=1)
        np.maximum(d, core_sq, out=d)
        np.maximum(d, core_sq[cur], out=d)
        upd = (~visited) & (d < best)
        best[upd] = d[upd]
        best_from[upd] = cur
        j = int(np.argmin(np.where(visited, np.inf, best)))
        out_u[it] = best_from[j]
        out_v[it] = j
        out_w[it] = best[j]
        visited[j] = True
        cur = j
    return out_u, out_v, out_w


def _prim_numba_py(pts, core_sq):  # jit-compiled below when numba is present
    # Scans a compacted array of unvisited points (swap-with-last removal),
    # so total work is n^2/2 over dense, branch-light inner loops.
    n, dim = pts.shape
    out_u = np.empty(n - 1, np.int64)
    out_v = np.empty(n - 1, np.int64)
    out_w = np.empty(n - 1, np.float64)
    m = n - 1
    idx = np.empty(m, np.int64)
    acoord = np.empty((m, dim))
    acore = np.empty(m)
    abest = np.full(m, np.inf)
    afrom = np.zeros(m, np.int64)
    for k in range(m):
        idx[k] = k + 1
        for t in range(dim):
            acoord[k, t] = pts[k + 1, t]
        acore[k] = core_sq[k + 1]
    cur = 0
    curc = np.empty(dim)
    for it in range(n - 1):
        for t in range(dim):
            curc[t] = pts[cur, t]
        cc = core_sq[cur]
        bv = np.inf
        bk = 0
        for k in range(m):
            d = 0.0
            for t in range(dim):
                diff = acoord[k, t] - curc[t]
                d += diff * diff
            if acore[k] > d:
                d = acore[k]
            if cc > d:
                d = cc
            if d < abest[k]:
                abest[k] = d
                afrom[k] = cur
            if abest[k] < bv:
                bv = abest[k]
                bk = k
        cur = idx[bk]
        out_u[it] = afrom[bk]
        out_v[it] = cur
        out_w[it] = bv
        m -= 1
        idx[bk] = idx[m]
        acore[bk] = acore[m]
        abest[bk] = abest[m]
        afrom[bk] = afrom[m]
        for t in range(dim):
            acoord[bk, t] = acoord[m, t]
    return out_u, out_v, out_w


if njit is not None:
    _prim_numba = njit(cache=True)(_prim_numba_py)
else:  # pragma: no cover
    _prim_numba = _prim_numba_py


def mutual_reachability_mst(pc: PointCloud, min_pts: int = 2,
                            engine: str = "auto") -> WeightedTree:
    """MST of the complete mutual-reachability graph via dense Prim.

    Edges come out in Prim discovery order (that order is the original
    id).  ``engine`` forces the numpy or numba scan; "auto" picks by n.
    """
    n = pc.n
    if not 2 <= min_pts <= n:
        raise ValueError(f"min_pts must be in [2, {n}]")
    coords = np.ascontiguousarray(pc.coords, dtype=np.float64)
    core_sq = core_distances(coords, min_pts) ** 2
    if engine == "auto":
        engine = "numba" if (njit is not None and n >= _NUMBA_MIN_N) else "numpy"
    if engine == "numba":
        u, v, w_sq = _prim_numba(coords, core_sq)
    elif engine == "numpy":
        u, v, w_sq = _prim_numpy(coords, core_sq)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return weighted_tree(n, u, v, np.sqrt(w_sq))
