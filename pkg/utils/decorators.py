"""统一装饰器

把子命令中的异常转换为退出码与错误块
"""
from functools import wraps
from typing import Callable

from .error_handler import ComputationError, ValidationError
from .logger import logger
from .report_formatter import fmt_error


def command_error_handler(operation_name: str):
    """
    命令处理错误装饰器（用于 CLI 子命令）

    被装饰函数返回 (退出码, 输出行列表)；异常被转换为格式化的错误块。

    Args:
        operation_name: 操作名称，用于日志记录
    """
    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except ValidationError as e:
                logger.warning(f"{operation_name}参数错误: {e}")
                return e.exit_code, fmt_error(f"{operation_name}失败", e.detail, e.suggestions)
            except ComputationError as e:
                logger.error(f"{operation_name}计算错误: {e}")
                return e.exit_code, fmt_error(f"{operation_name}失败", f"{e.title}: {e.detail}", e.suggestions)
            except Exception as e:
                logger.error(f"{operation_name}失败: {e}")
                return 2, fmt_error(f"{operation_name}失败", f"系统异常: {e}", ["检查输入", "使用 --log-level DEBUG 重试"])
        return wrapper
    return decorator
