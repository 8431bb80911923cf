"""Single-linkage dendrogram construction from minimum spanning trees."""

from .analysis import (DendroStats, dendro_stats, dendrogram_height,
                       level_stats, skewness, throughput)
from .classify import EdgeKind, classify_edges, kind_counts, vertex_parents
from .contraction import (ContractionHierarchy, ContractionLevel, TreeView,
                          UnionFind, build_hierarchy, component_labels,
                          contract_level)
from .expansion import (ROOT, ChainAssignment, ChainKey, Dendrogram,
                        assign_chains, level_parent, pandora, stitch_chains)
from .oracles import (dendrogram_bottom_up, dendrogram_top_down,
                      heaviest_on_path, lcda_by_ancestors)
from .pointgen import PointCloud, gen_points, mutual_reachability_mst
from .tree_core import (IncidenceIndex, RankedTree, TreeFormatError,
                        WeightedTree, build_incidence, load_edge_list,
                        rank_edges, weighted_tree)

__all__ = [
    "ChainAssignment", "ChainKey", "ContractionHierarchy", "ContractionLevel",
    "Dendrogram", "DendroStats", "EdgeKind", "IncidenceIndex", "PointCloud",
    "RankedTree", "ROOT", "TreeFormatError", "TreeView", "UnionFind",
    "WeightedTree", "assign_chains", "build_hierarchy", "build_incidence",
    "classify_edges", "component_labels", "contract_level", "dendro_stats",
    "dendrogram_bottom_up", "dendrogram_height", "dendrogram_top_down",
    "gen_points", "heaviest_on_path", "kind_counts", "lcda_by_ancestors",
    "level_parent", "level_stats", "load_edge_list", "mutual_reachability_mst",
    "pandora", "rank_edges", "skewness", "stitch_chains", "throughput",
    "vertex_parents", "weighted_tree",
]
