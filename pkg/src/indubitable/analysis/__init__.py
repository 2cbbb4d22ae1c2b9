"""分析层：单图报告、普查、结论检查"""
from .analyze import format_text, load_graph, require_ok, run_analyze
from .census import CensusOutcome, CensusSummary, CensusTally, analyze_census_line, run_census
from .claims import CLAIMS, ClaimResult, verify_claim
from .report import (
    SCHEMA_VERSION,
    AnalysisReport,
    CensusRecord,
    ClassificationRecord,
    EigenRecord,
    FullPartitionRecord,
    GraphMeta,
)

__all__ = [
    "SCHEMA_VERSION",
    "AnalysisReport",
    "CensusRecord",
    "ClassificationRecord",
    "EigenRecord",
    "FullPartitionRecord",
    "GraphMeta",
    "load_graph",
    "run_analyze",
    "format_text",
    "require_ok",
    "CensusOutcome",
    "CensusSummary",
    "CensusTally",
    "analyze_census_line",
    "run_census",
    "CLAIMS",
    "ClaimResult",
    "verify_claim",
]
