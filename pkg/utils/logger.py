"""日志工具

全库共用的 logger 对象：
    from utils.logger import logger
"""
import logging
import sys

LOGGER_NAME = "chromatic_traces"

logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(logging.NullHandler())

_LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def setup_logging(level: str = "WARNING") -> None:
    """
    配置日志输出（只写 stderr，stdout 留给报告）

    Args:
        level: 日志级别名称，如 "INFO"、"DEBUG"
    """
    numeric_level = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    for handler in list(logger.handlers):
        if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.NullHandler):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(numeric_level)
    logger.debug(f"日志级别已设置为 {logging.getLevelName(numeric_level)}")
