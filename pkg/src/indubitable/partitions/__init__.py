"""等价划分与（满）不可疑划分"""
from .indubitable import (
    FullPartitionCensus,
    IndubitableReport,
    ProductPrediction,
    bipartite_mirror_check,
    check_parameter_identities,
    clique_matrix_idempotent,
    complement_transfer,
    constant_diagonal_check,
    full_indubitable_census,
    full_partition_for,
    idempotent_from_partition,
    in_adjacency_algebra,
    is_walk_regular,
    partition_from_idempotent,
    product_with_complete_prediction,
    quotient_spectrum_check,
    reports_by_eigenvalue,
    require_connected_regular,
    uniqueness_check,
)
from .partition import (
    Partition,
    QuotientResult,
    as_partition,
    indubitable_params,
    predicted_params,
    quotient_if_equitable,
)

__all__ = [
    "Partition",
    "QuotientResult",
    "as_partition",
    "quotient_if_equitable",
    "indubitable_params",
    "predicted_params",
    "IndubitableReport",
    "FullPartitionCensus",
    "ProductPrediction",
    "require_connected_regular",
    "partition_from_idempotent",
    "idempotent_from_partition",
    "clique_matrix_idempotent",
    "full_indubitable_census",
    "full_partition_for",
    "constant_diagonal_check",
    "is_walk_regular",
    "bipartite_mirror_check",
    "complement_transfer",
    "in_adjacency_algebra",
    "product_with_complete_prediction",
    "quotient_spectrum_check",
    "uniqueness_check",
    "check_parameter_identities",
    "reports_by_eigenvalue",
]
