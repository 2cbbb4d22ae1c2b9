"""图：表示、图族构造、文本格式"""
from .families import (
    FAMILIES,
    FamilySpec,
    bipartite_double,
    cartesian_product,
    coclique_extension,
    complement,
    complete,
    complete_multipartite,
    cycle,
    generate,
    hypercube,
    line_graph,
    permute,
    petersen,
)
from .graph import BasicProfile, Graph, basic_profile, build_graph, distance_matrices, distance_matrix
from .io import (
    parse_edge_list,
    parse_graph6,
    parse_partition,
    read_graph6_lines,
    write_edge_list,
    write_graph6,
    write_partition,
)

__all__ = [
    "Graph",
    "BasicProfile",
    "build_graph",
    "basic_profile",
    "distance_matrix",
    "distance_matrices",
    "FAMILIES",
    "FamilySpec",
    "generate",
    "complete",
    "cycle",
    "complete_multipartite",
    "petersen",
    "hypercube",
    "cartesian_product",
    "bipartite_double",
    "complement",
    "coclique_extension",
    "line_graph",
    "permute",
    "parse_graph6",
    "write_graph6",
    "read_graph6_lines",
    "parse_edge_list",
    "write_edge_list",
    "parse_partition",
    "write_partition",
]
