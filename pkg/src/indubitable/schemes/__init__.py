"""结合方案、距离正则性与分类"""
from .bose_mesner import SchemeBasis, StructureConstants, bose_mesner_closure, graph_basis, srg_parameters
from .classify import (
    Classification,
    TwoPartitionReport,
    Verdict,
    analyze_partition_pair,
    bipartite_double_multipartite,
    classify_bipartite_five_eigenvalue,
    classify_drg_full_partition,
    classify_four_eigenvalue,
    grid_graph,
    identify_grid,
    three_class_detection,
    two_partition_analysis,
)
from .distance import CoEdgeProfile, IntersectionArray, co_edge_regular_profile, intersection_array

__all__ = [
    "SchemeBasis",
    "StructureConstants",
    "bose_mesner_closure",
    "graph_basis",
    "srg_parameters",
    "IntersectionArray",
    "intersection_array",
    "CoEdgeProfile",
    "co_edge_regular_profile",
    "Verdict",
    "Classification",
    "TwoPartitionReport",
    "analyze_partition_pair",
    "two_partition_analysis",
    "grid_graph",
    "identify_grid",
    "bipartite_double_multipartite",
    "classify_four_eigenvalue",
    "classify_bipartite_five_eigenvalue",
    "classify_drg_full_partition",
    "three_class_detection",
]
