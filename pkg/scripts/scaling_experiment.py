#!/usr/bin/env python3
"""Construction-time scaling across input sizes.

Generates mutual-reachability MSTs of 2D point clouds at a range of
sizes and reports median construction time and throughput for each
algorithm.  Example:

    python3 scripts/scaling_experiment.py --sizes 10000,50000,100000
"""
from __future__ import annotations

import argparse
import statistics
import time
from dataclasses import dataclass

from dendromst import (dendrogram_bottom_up, pandora, rank_edges, throughput)
from dendromst.pointgen import gen_points, mutual_reachability_mst

ALGOS = {"pandora": pandora, "bottomup": dendrogram_bottom_up}


@dataclass(frozen=True)
class Config:
    sizes: list[int]
    algos: list[str]
    dist: str
    seed: int
    repeat: int


def parse_args() -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10000,50000,100000",
                        help="comma-separated point counts")
    parser.add_argument("--algos", default="pandora,bottomup",
                        help=f"comma-separated subset of {sorted(ALGOS)}")
    parser.add_argument("--dist", choices=["normal", "uniform"], default="normal")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    algos = [a for a in args.algos.split(",") if a]
    unknown = set(algos) - set(ALGOS)
    if unknown:
        parser.error(f"unknown algorithms: {sorted(unknown)}")
    return Config(sizes=[int(s) for s in args.sizes.split(",") if s],
                  algos=algos, dist=args.dist, seed=args.seed,
                  repeat=args.repeat)


def main() -> None:
    config = parse_args()
    print(f"{'n':>10} {'algo':>10} {'median_s':>10} {'mpoints/s':>10}")
    for n in config.sizes:
        pc = gen_points(config.dist, n, 2, config.seed)
        tree = mutual_reachability_mst(pc)
        for name in config.algos:
            construct = ALGOS[name]
            times = []
            for _ in range(config.repeat):
                start = time.perf_counter()
                construct(rank_edges(tree))
                times.append(time.perf_counter() - start)
            median = statistics.median(times)
            print(f"{n:>10} {name:>10} {median:>10.4f} "
                  f"{throughput(n, median):>10.3f}")


if __name__ == "__main__":
    main()
