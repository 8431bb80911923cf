"""Command-line surface: gen | build | stats | verify | bench.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or IO error.
"""
from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time

import numpy as np

from .analysis import dendrogram_height, level_stats, throughput
from .classify import vertex_parents
from .contraction import build_hierarchy
from .dendro_io import (DendrogramFormatError, read_dendrogram,
                        write_dendrogram, write_edge_list)
from .expansion import assign_chains, pandora, stitch_chains
from .oracles import dendrogram_bottom_up, dendrogram_top_down
from .pointgen import gen_points, mutual_reachability_mst
from .tree_core import (RankedTree, TreeFormatError, build_incidence,
                        load_edge_list, rank_edges)

_ALGOS = {
    "pandora": pandora,
    "bottomup": dendrogram_bottom_up,
    "topdown": dendrogram_top_down,
}


class CliError(Exception):
    pass


def _load_ranked(path) -> RankedTree:
    try:
        with open(path) as f:
            tree = load_edge_list(f)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except TreeFormatError as exc:
        raise CliError(f"{path}: {exc}") from None
    return rank_edges(tree)


def _set_thread_bound(threads: int) -> None:
    if threads < 1:
        raise CliError("thread count must be >= 1")
    try:
        import numba
        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    except ImportError:
        pass


def _cmd_gen(args) -> int:
    try:
        pc = gen_points(args.dist, args.n, args.dim, args.seed)
        tree = mutual_reachability_mst(pc, min_pts=args.minpts)
        write_edge_list(args.output, tree)
    except (ValueError, OSError) as exc:
        raise CliError(str(exc)) from None
    print(f"wrote {tree.num_edges} edges ({tree.num_vertices} vertices) "
          f"to {args.output}")
    return 0


def _cmd_build(args) -> int:
    _set_thread_bound(args.threads)
    try:
        with open(args.input) as f:
            tree = load_edge_list(f)
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc}") from None
    except TreeFormatError as exc:
        raise CliError(f"{args.input}: {exc}") from None
    construct = _ALGOS[args.algo]
    # construction time includes the initial descending-weight sort
    start = time.perf_counter()
    ranked = rank_edges(tree)
    dendrogram = construct(ranked)
    elapsed = time.perf_counter() - start
    points = ranked.num_edges + 1
    print(f"algo={args.algo} wall_time_s={elapsed:.6f} "
          f"mpoints_per_s={throughput(points, elapsed):.6f}")
    if args.output:
        try:
            write_dendrogram(args.output, dendrogram)
        except OSError as exc:
            raise CliError(str(exc)) from None
    return 0


def _cmd_stats(args) -> int:
    ranked = _load_ranked(args.input)
    inc = build_incidence(ranked)
    hierarchy = build_hierarchy(ranked, inc)
    assignment = assign_chains(hierarchy)
    if args.dendrogram:
        try:
            dendrogram = read_dendrogram(args.dendrogram)
        except (OSError, DendrogramFormatError) as exc:
            raise CliError(str(exc)) from None
    else:
        dendrogram = stitch_chains(assignment, vertex_parents(inc))
    n = ranked.num_edges
    height = dendrogram_height(dendrogram)
    per_level = level_stats(hierarchy)
    report = {
        "edges": n,
        "vertices": ranked.num_vertices,
        "levels": hierarchy.num_levels,
        "height": height,
        "chains": assignment.num_chains(),
        "skewness_log2_edges": height / math.log2(n) if n >= 2 else 0.0,
        "skewness_log2_points": height / math.log2(n + 1),
        "per_level": [
            {"alpha": a, "leaf": l, "chain": c, "survivors": s}
            for a, l, c, s in per_level
        ],
    }
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    for key in ("edges", "vertices", "levels", "height", "chains"):
        print(f"{key}={report[key]}")
    print(f"skewness_log2_edges={report['skewness_log2_edges']:.6f}")
    print(f"skewness_log2_points={report['skewness_log2_points']:.6f}")
    for i, (a, l, c, s) in enumerate(per_level):
        print(f"level[{i}].alpha={a} level[{i}].leaf={l} "
              f"level[{i}].chain={c} level[{i}].survivors={s}")
    return 0


def _cmd_verify(args) -> int:
    try:
        da = read_dendrogram(args.a)
        db = read_dendrogram(args.b)
    except (OSError, DendrogramFormatError) as exc:
        raise CliError(str(exc)) from None
    for label, pa, pb in (("edge", da.edge_parent, db.edge_parent),
                          ("vertex", da.vertex_parent, db.vertex_parent)):
        if pa.shape != pb.shape:
            print(f"size mismatch: {pa.shape[0]} vs {pb.shape[0]} {label} nodes")
            return 1
        diff = np.nonzero(pa != pb)[0]
        if diff.shape[0]:
            i = int(diff[0])
            print(f"first divergence: {label} {i}: {int(pa[i])} != {int(pb[i])}")
            return 1
    print("identical")
    return 0


def _cmd_bench(args) -> int:
    ranked = _load_ranked(args.input)
    construct = _ALGOS[args.algo]
    points = ranked.num_edges + 1
    try:
        thread_counts = [int(t) for t in args.threads_list.split(",") if t]
    except ValueError:
        raise CliError(f"bad threads list: {args.threads_list!r}") from None
    if args.repeat < 1:
        raise CliError("repeat must be >= 1")
    for threads in thread_counts:
        _set_thread_bound(threads)
        times = []
        for _ in range(args.repeat):
            start = time.perf_counter()
            construct(ranked)
            times.append(time.perf_counter() - start)
        median = statistics.median(times)
        print(f"algo={args.algo} threads={threads} repeat={args.repeat} "
              f"median_s={median:.6f} "
              f"mpoints_per_s={throughput(points, median):.6f}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dendromst",
        description="Single-linkage dendrogram construction from MSTs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a mutual-reachability MST")
    p.add_argument("--dist", choices=["normal", "uniform"], default="normal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--minpts", type=int, default=2)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("build", help="construct a dendrogram")
    p.add_argument("--input", required=True)
    p.add_argument("--algo", choices=sorted(_ALGOS), default="pandora")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("stats", help="tree / dendrogram statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--dendrogram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("verify", help="compare two dendrogram files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="median construction times")
    p.add_argument("--input", required=True)
    p.add_argument("--algo", choices=sorted(_ALGOS), default="pandora")
    p.add_argument("--threads-list", default="1")
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
