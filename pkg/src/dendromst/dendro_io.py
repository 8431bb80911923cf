"""Plain-text file formats for trees and dendrograms.

Edge list: one "u v w" line per edge, '#' comments allowed.
Dendrogram: header "#dendrogram v1 n=<edges> nv=<vertices>", then one
"E <rank> <parentRank|-1>" line per edge and one "V <id> <parentRank>"
line per vertex.
"""
from __future__ import annotations

import numpy as np

from .expansion import ROOT, Dendrogram
from .tree_core import WeightedTree


class DendrogramFormatError(ValueError):
    """Dendrogram file does not match the expected format."""


def write_edge_list(path, tree: WeightedTree) -> None:
    with open(path, "w") as f:
        f.writelines(
            f"{u} {v} {w:.17g}\n"
            for u, v, w in zip(tree.u.tolist(), tree.v.tolist(), tree.w.tolist())
        )


def write_dendrogram(path, d: Dendrogram) -> None:
    with open(path, "w") as f:
        f.write(f"#dendrogram v1 n={d.num_edges} nv={d.num_vertices}\n")
        f.writelines(
            f"E {rank} {parent}\n"
            for rank, parent in enumerate(d.edge_parent.tolist())
        )
        f.writelines(
            f"V {vid} {parent}\n"
            for vid, parent in enumerate(d.vertex_parent.tolist())
        )


def read_dendrogram(path) -> Dendrogram:
    with open(path) as f:
        header = f.readline().strip()
        parts = header.split()
        if (len(parts) != 4 or parts[0] != "#dendrogram" or parts[1] != "v1"
                or not parts[2].startswith("n=") or not parts[3].startswith("nv=")):
            raise DendrogramFormatError(f"bad header: {header!r}")
        rest = f.read()
    try:
        n = int(parts[2][2:])
        nv = int(parts[3][3:])
    except ValueError:
        raise DendrogramFormatError(f"bad header: {header!r}") from None
    edge_parent = np.full(n, ROOT, dtype=np.int64)
    vertex_parent = np.full(nv, ROOT, dtype=np.int64)
    edge_seen = 0
    vertex_seen = 0
    for line in rest.splitlines():
        if not line or line.startswith("#"):
            continue
        kind, idx, parent = line.split()
        if kind == "E":
            edge_parent[int(idx)] = int(parent)
            edge_seen += 1
        elif kind == "V":
            vertex_parent[int(idx)] = int(parent)
            vertex_seen += 1
        else:
            raise DendrogramFormatError(f"bad line: {line!r}")
    if edge_seen != n or vertex_seen != nv:
        raise DendrogramFormatError(
            f"expected {n} edge and {nv} vertex lines, "
            f"got {edge_seen} and {vertex_seen}"
        )
    return Dendrogram(edge_parent=edge_parent, vertex_parent=vertex_parent)
