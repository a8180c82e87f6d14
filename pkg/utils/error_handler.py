"""错误处理工具类

提供统一的异常层次和参数校验：
- ComputationError: 计算错误基类（标题、详情、建议）
- ValidationError / DomainError / SymmetryError / SizeLimitError / VerificationFailure
- ErrorHandler: 常用参数校验
"""
from typing import Any, List, Optional, Sequence

from .logger import logger


class ComputationError(Exception):
    """计算错误基类"""

    exit_code = 2

    def __init__(self, title: str, detail: str = "", suggestions: Optional[list] = None):
        self.title = title
        self.detail = detail
        self.suggestions = suggestions or []
        super().__init__(f"{title}: {detail}")


class ValidationError(ComputationError):
    """输入格式或参数错误"""

    def __init__(self, message: str, suggestions: Optional[list] = None):
        super().__init__("参数验证失败", message, suggestions or ["请检查输入参数", "确认输入格式正确"])


class DomainError(ComputationError):
    """超出实现范围的数学请求"""

    def __init__(self, message: str, suggestions: Optional[list] = None):
        super().__init__("超出适用范围", message, suggestions or ["检查输入是否满足前提条件"])


class SymmetryError(DomainError):
    """色拟对称函数不对称，附带见证组合对"""

    def __init__(self, message: str, witness: Optional[tuple] = None):
        super().__init__(message, ["确认偏序集为单位区间序", "先调用 uio_canonical_labeling 重新标号"])
        self.witness = witness


class SizeLimitError(ComputationError):
    """规模超过保护上限"""

    def __init__(self, message: str, config_key: str = ""):
        suggestions = ["使用 --force 跳过规模保护"]
        if config_key:
            suggestions.append(f"或在配置中调整 {config_key}")
        super().__init__("规模超限", message, suggestions)
        self.config_key = config_key


class VerificationFailure(ComputationError):
    """验证套件存在失败用例"""

    exit_code = 1

    def __init__(self, suite: str, failures: Sequence[Any]):
        super().__init__("验证失败", f"套件 {suite} 有 {len(failures)} 个失败用例",
                         ["查看报告中的反例", "缩小 --n 复现"])
        self.suite = suite
        self.failures = list(failures)


class ErrorHandler:
    """统一参数校验器"""

    @staticmethod
    def validate_positive_int(value: int, name: str) -> None:
        """
        验证正整数

        Args:
            value: 要验证的值
            name: 参数名称

        Raises:
            ValidationError: 如果值不是正整数
        """
        if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
            raise ValidationError(f"{name}必须是正整数，收到 {value!r}")

    @staticmethod
    def validate_nonnegative_int(value: int, name: str) -> None:
        """验证非负整数"""
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValidationError(f"{name}必须是非负整数，收到 {value!r}")

    @staticmethod
    def validate_same_size(left: int, right: int, what: str) -> None:
        """
        验证两个对象规模一致

        Raises:
            ValidationError: 规模不一致时抛出
        """
        if left != right:
            raise ValidationError(f"{what}规模不一致: {left} != {right}")

    @staticmethod
    def validate_size(n: int, limit: int, what: str, config_key: str, force: bool = False) -> None:
        """
        规模保护：超过上限且未强制时拒绝

        Args:
            n: 实际规模
            limit: 上限
            what: 对象描述
            config_key: 对应的配置键
            force: 是否强制执行

        Raises:
            SizeLimitError: 超限且未强制时抛出
        """
        if n <= limit:
            return
        if force:
            logger.warning(f"{what}规模 {n} 超过上限 {limit}，已强制执行")
            return
        raise SizeLimitError(f"{what}规模 {n} 超过上限 {limit}", config_key)

    @staticmethod
    def validate_choice(value: str, choices: List[str], name: str) -> None:
        """验证取值属于给定集合"""
        if value not in choices:
            raise ValidationError(f"未知的{name}: {value}，可选: {', '.join(choices)}")
