"""配置层 - 统一读取 config.json

所有数值容差都从这里流出：CLI 参数 > 环境变量 > config.json > 默认值。
"""
import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, Field, ValidationError

from indubitable.core.errors import PreconditionError

# 项目根目录
PROJECT_ROOT = Path(__file__).parent.parent.parent.parent
CONFIG_PATH = PROJECT_ROOT / "config.json"

ENV_OVERRIDES = {
    "INDUBITABLE_TOLERANCE": "tolerance",
    "INDUBITABLE_JOBS": "jobs",
    "INDUBITABLE_LOG_TO_FILE": "log_to_file",
}


class Settings(BaseModel):
    """运行配置"""

    tolerance: float = Field(default=1e-9, gt=0)
    # 相邻特征值间隙落在 (tol, ambiguity_factor·tol) 内时给出歧义告警
    ambiguity_factor: float = Field(default=10.0, gt=1)
    rational_check_max_order: int = Field(default=32, ge=0)
    jobs: int = Field(default=1, ge=1)
    log_to_file: bool = False
    log_dir: str = "logs"


def _expand_env(value: Any) -> Any:
    """"${VAR}" 形式的值从环境变量读取"""
    if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
        return os.getenv(value[2:-1], "")
    return value


def load_settings(config_path: Optional[Path] = None) -> Settings:
    """读取配置文件并校验，文件不存在时用默认值"""
    path = config_path or CONFIG_PATH
    raw: dict = {}
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)

    data = {key: _expand_env(value) for key, value in raw.items() if value != ""}
    for env_var, key in ENV_OVERRIDES.items():
        env_value = os.getenv(env_var)
        if env_value:
            data[key] = env_value

    try:
        return Settings.model_validate(data)
    except ValidationError as e:
        raise PreconditionError(f"配置无效 {path}: {e}") from e


@lru_cache(maxsize=1)
def get_config() -> Settings:
    """读取配置（进程内缓存）"""
    return load_settings()


def resolve_tolerance(tol: Optional[float] = None) -> float:
    """显式传入的容差优先，否则取配置"""
    if tol is None:
        return get_config().tolerance
    if tol <= 0:
        raise PreconditionError(f"容差必须为正数: {tol}")
    return tol
