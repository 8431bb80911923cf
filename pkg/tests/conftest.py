"""Shared tree generators and hypothesis strategies for the test suite."""
from __future__ import annotations

from pathlib import Path

import numpy as np
from hypothesis import strategies as st

from dendromst import WeightedTree, rank_edges, weighted_tree
from dendromst.dendro_io import write_edge_list
from dendromst.pointgen import gen_points, mutual_reachability_mst

CACHE_DIR = Path(__file__).parent / ".cache"

TOPOLOGIES = ("star", "path", "caterpillar", "attach")


def make_weights(m: int, rng: np.random.Generator, equal: bool = False) -> np.ndarray:
    if equal:
        return np.full(m, 1.0)
    return rng.permutation(m).astype(np.float64) + 1.0  # distinct by construction


def topology_edges(topology: str, nv: int, rng: np.random.Generator):
    v = np.arange(1, nv, dtype=np.int64)
    if topology == "star":
        u = np.zeros(nv - 1, dtype=np.int64)
    elif topology == "path":
        u = np.arange(nv - 1, dtype=np.int64)
    elif topology == "caterpillar":
        # path spine with the remaining vertices hanging off random spine vertices
        spine = max(2, nv // 2)
        u = np.concatenate([np.arange(spine - 1, dtype=np.int64),
                            rng.integers(0, spine, nv - spine)])
    elif topology == "attach":
        u = rng.integers(0, np.maximum(v, 1))  # each vertex attaches to a lower id
    else:
        raise ValueError(f"unknown topology {topology!r}")
    return u, v


def make_tree(topology: str, nv: int, rng: np.random.Generator,
              equal_weights: bool = False) -> WeightedTree:
    u, v = topology_edges(topology, nv, rng)
    w = make_weights(nv - 1, rng, equal_weights)
    perm = rng.permutation(nv - 1)  # input order independent of construction order
    return weighted_tree(nv, u[perm], v[perm], w[perm])


def make_ranked(topology: str, nv: int, rng: np.random.Generator,
                equal_weights: bool = False):
    return rank_edges(make_tree(topology, nv, rng, equal_weights))


def mreach_tree(n: int, seed: int, dist: str = "normal", dim: int = 2) -> WeightedTree:
    return mutual_reachability_mst(gen_points(dist, n, dim, seed))


def cached_mreach_path(n: int, seed: int) -> Path:
    """Large generated MSTs are cached on disk; first generation is slow."""
    CACHE_DIR.mkdir(exist_ok=True)
    path = CACHE_DIR / f"mreach_normal_d2_mp2_n{n}_s{seed}.edges"
    if not path.exists():
        tree = mutual_reachability_mst(gen_points("normal", n, 2, seed))
        tmp = path.with_suffix(".tmp")
        write_edge_list(tmp, tree)
        tmp.rename(path)
    return path


@st.composite
def random_trees(draw, min_vertices: int = 2, max_vertices: int = 64,
                 topologies=TOPOLOGIES, equal_weights: bool = False):
    nv = draw(st.integers(min_vertices, max_vertices))
    topology = draw(st.sampled_from(topologies))
    seed = draw(st.integers(0, 2**32 - 1))
    return make_tree(topology, nv, np.random.default_rng(seed), equal_weights)


@st.composite
def ranked_trees(draw, **kwargs):
    return rank_edges(draw(random_trees(**kwargs)))
