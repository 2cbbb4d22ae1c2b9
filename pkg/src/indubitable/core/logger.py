"""日志配置"""
import logging
from datetime import datetime
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path

from indubitable.core.config import PROJECT_ROOT, get_config

# 格式：时间 - 模块 - 级别 - 消息
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_log_dir() -> Path:
    """日志目录，相对路径按项目根目录解析"""
    log_dir = Path(get_config().log_dir)
    if not log_dir.is_absolute():
        log_dir = PROJECT_ROOT / log_dir
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir


def get_logger(name: str = "indubitable") -> logging.Logger:
    """获取日志器 - 控制台走 stderr，stdout 留给 JSON 输出"""
    logger = logging.getLogger(name)

    if not logger.handlers:
        logger.setLevel(logging.INFO)
        formatter = logging.Formatter(LOG_FORMAT)

        # 控制台
        ch = logging.StreamHandler()
        ch.setLevel(logging.INFO)
        ch.setFormatter(formatter)
        logger.addHandler(ch)

        if get_config().log_to_file:
            log_dir = get_log_dir()
            # 按小时分割的主日志文件
            main_log = log_dir / f"indubitable_{datetime.now().strftime('%Y%m%d_%H')}.log"
            fh = TimedRotatingFileHandler(
                main_log,
                when="h",
                interval=1,
                backupCount=168,  # 保留7天 * 24小时
                encoding="utf-8",
            )
            fh.setLevel(logging.INFO)
            fh.setFormatter(formatter)
            logger.addHandler(fh)

            # 错误日志文件
            error_log = log_dir / f"error_{datetime.now().strftime('%Y%m%d_%H')}.log"
            eh = logging.FileHandler(error_log, encoding="utf-8")
            eh.setLevel(logging.ERROR)
            eh.setFormatter(formatter)
            logger.addHandler(eh)

        logger.propagate = False

    return logger


def set_level(level: int) -> None:
    """调整包日志器级别（--verbose / --quiet）

    未单独配置的子模块日志器继承包日志器；已配置 handler 的（如 indubitable.cli）逐个调整。
    """
    get_logger()
    names = [name for name in logging.root.manager.loggerDict if name.split(".")[0] == "indubitable"]
    for name in names:
        logger = logging.getLogger(name)
        if not logger.handlers:
            continue
        logger.setLevel(level)
        for handler in logger.handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(level)


def log_census_failure(line_no: int, error: str, detail: str = "") -> None:
    """普查失败日志：行号 | 错误 | 详情"""
    logging.getLogger("indubitable.census").warning(f"第 {line_no} 行: {error} {detail}".rstrip())
    if not get_config().log_to_file:
        return
    log_file = get_log_dir() / f"census_failures_{datetime.now().strftime('%Y%m%d_%H')}.log"
    timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    line = f"{timestamp} | {line_no} | {error} | {detail}\n"

    with open(log_file, "a", encoding="utf-8") as f:
        f.write(line)
