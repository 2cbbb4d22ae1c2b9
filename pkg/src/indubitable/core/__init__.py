"""基础设施：配置、日志、异常"""
from .config import Settings, get_config, load_settings, resolve_tolerance
from .errors import (
    ConsistencyError,
    FamilyError,
    GraphFormatError,
    IndubitableError,
    InvalidGraphError,
    PartitionError,
    PreconditionError,
    SchemeBasisError,
    SpectralError,
    StructuralViolation,
)
from .logger import get_logger, log_census_failure, set_level

__all__ = [
    "Settings",
    "get_config",
    "load_settings",
    "resolve_tolerance",
    "get_logger",
    "log_census_failure",
    "set_level",
    "IndubitableError",
    "GraphFormatError",
    "InvalidGraphError",
    "PreconditionError",
    "PartitionError",
    "FamilyError",
    "SchemeBasisError",
    "ConsistencyError",
    "StructuralViolation",
    "SpectralError",
]
