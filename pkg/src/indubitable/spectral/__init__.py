"""谱：特征值聚类、谱幂等阵、元素取值类与 Hadamard 代数"""
from .hadamard import (
    EntryClasses,
    TwoValuedDecomposition,
    algebra_closed,
    entry_classes,
    hadamard_dim,
    hadamard_span_oracle,
    simplex_cosines,
    two_valued_decomposition,
)
from .spectrum import (
    EigenClass,
    Idempotent,
    Spectrum,
    all_idempotents,
    exact_idempotent_check,
    spectral_idempotent,
    spectrum,
)

__all__ = [
    "EigenClass",
    "Spectrum",
    "Idempotent",
    "spectrum",
    "spectral_idempotent",
    "all_idempotents",
    "exact_idempotent_check",
    "EntryClasses",
    "entry_classes",
    "hadamard_dim",
    "hadamard_span_oracle",
    "TwoValuedDecomposition",
    "two_valued_decomposition",
    "simplex_cosines",
    "algebra_closed",
]
