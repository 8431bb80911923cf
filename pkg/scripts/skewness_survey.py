#!/usr/bin/env python3
"""Dendrogram shape survey across tree topologies.

Reports height, skewness (height / log2(n)), contraction depth, and
chain count for several topologies at a fixed size.  Example:

    python3 scripts/skewness_survey.py --vertices 4096
"""
from __future__ import annotations

import argparse

import numpy as np

from dendromst import (assign_chains, build_hierarchy, build_incidence,
                       dendro_stats, pandora, rank_edges, weighted_tree)
from dendromst.pointgen import gen_points, mutual_reachability_mst


def synthetic_tree(topology: str, nv: int, rng: np.random.Generator):
    v = np.arange(1, nv, dtype=np.int64)
    if topology == "star":
        u = np.zeros(nv - 1, dtype=np.int64)
    elif topology == "path":
        u = np.arange(nv - 1, dtype=np.int64)
    elif topology == "attach":
        u = rng.integers(0, v)
    else:
        raise ValueError(topology)
    w = rng.permutation(nv - 1).astype(np.float64) + 1.0
    return weighted_tree(nv, u, v, w)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--vertices", type=int, default=4096)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    cases = {
        topology: synthetic_tree(topology, args.vertices, rng)
        for topology in ("star", "path", "attach")
    }
    pc = gen_points("normal", args.vertices, 2, args.seed)
    cases["mreach-2d"] = mutual_reachability_mst(pc)

    print(f"{'topology':>12} {'height':>8} {'skewness':>9} "
          f"{'levels':>7} {'chains':>8}")
    for name, tree in cases.items():
        ranked = rank_edges(tree)
        inc = build_incidence(ranked)
        hierarchy = build_hierarchy(ranked, inc)
        assignment = assign_chains(hierarchy)
        stats = dendro_stats(pandora(ranked), hierarchy, assignment)
        print(f"{name:>12} {stats.height:>8} {stats.skewness:>9.2f} "
              f"{hierarchy.num_levels:>7} {stats.chain_count:>8}")


if __name__ == "__main__":
    main()
