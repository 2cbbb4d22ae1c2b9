"""分析报告与普查记录的 JSON 模型

SCHEMA_VERSION 变化意味着字段含义变化；新增可选字段不改版本。
"""
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1.0"

# 谱已通过精确复核时输出整数，否则输出浮点
Number = Union[int, float]


class GraphMeta(BaseModel):
    n: int
    edges: int
    k: Optional[int] = None
    connected: bool
    bipartite: bool
    graph6: Optional[str] = None
    source: Optional[str] = None


class EigenRecord(BaseModel):
    """一个特征值类的记录"""

    eigenvalue: Number
    multiplicity: int
    exact: bool = False
    hadamard_dim: Optional[int] = None
    full_partition: bool = False
    cells: Optional[List[List[int]]] = None
    params: Optional[List[int]] = None
    constant_diagonal: Optional[bool] = None


class ClassificationRecord(BaseModel):
    name: str
    verdict: str
    witness: Dict[str, Any] = Field(default_factory=dict)
    branches: Optional[List[str]] = None
    ordering: Optional[List[int]] = None


class AnalysisReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    graph: GraphMeta
    tolerance: float
    status: str = "ok"
    failure: Optional[str] = None
    spectrum_ambiguous: bool = False
    spectrum: List[EigenRecord] = Field(default_factory=list)
    full_partition_count: int = 0
    walk_regular: Optional[bool] = None
    intersection_array: Optional[List[List[int]]] = None
    srg: Optional[List[int]] = None
    classifications: List[ClassificationRecord] = Field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def full_partitions(self) -> List[EigenRecord]:
        return [r for r in self.spectrum if r.full_partition]


class FullPartitionRecord(BaseModel):
    eigenvalue: Number
    multiplicity: int
    cells: List[List[int]]
    params: List[int]


class CensusRecord(BaseModel):
    """普查输出的一行"""

    line: int
    graph6: str
    n: int
    k: int
    eigenvalue_classes: int
    full_partitions: List[FullPartitionRecord] = Field(default_factory=list)
    verdicts: Dict[str, str] = Field(default_factory=dict)
    hadamard_oracle_agrees: Optional[bool] = None
