"""验证报告数据模型

- CaseResult: 单个验证用例（期望值、实际值、是否通过）
- VerificationReport: 一个套件或一次检查的全部用例
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List

from utils.error_handler import VerificationFailure

from .scalar import Scalar, format_scalar


def _render(value: Any) -> Any:
    """把 Scalar / 分拆 / 嵌套容器转成可 JSON 序列化的精确字符串"""
    # PolyElement 也有 to_dict，必须先于下一分支判断
    if isinstance(value, Scalar):
        return format_scalar(value)
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    try:
        return format_scalar(value)
    except Exception:
        return str(value)


@dataclass
class CaseResult:
    """单个用例"""
    name: str
    expected: Any
    actual: Any
    passed: bool
    # 已知的、预期中的不一致（如反例复现）
    expected_divergence: bool = False

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'name': self.name,
            'passed': self.passed,
            'expected': _render(self.expected),
            'actual': _render(self.actual),
        }
        if self.expected_divergence:
            data['expected_divergence'] = True
        return data


@dataclass
class VerificationReport:
    """
    验证报告

    Attributes:
        suite: 套件名
        cases: 按执行顺序排列的用例
        parameters: 运行参数（n、种子、试验次数等）
    """
    suite: str
    cases: List[CaseResult] = field(default_factory=list)
    parameters: Dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, expected: Any, actual: Any) -> bool:
        """记录 expected == actual 的用例"""
        passed = expected == actual
        self.cases.append(CaseResult(name, expected, actual, passed))
        return passed

    def check_true(self, name: str, condition: bool, detail: Any = None) -> bool:
        self.cases.append(CaseResult(name, True, condition if detail is None else detail, bool(condition)))
        return bool(condition)

    def record_divergence(self, name: str, expected: Any, actual: Any) -> bool:
        """记录预期不相等的用例：两值不同才算通过"""
        passed = expected != actual
        self.cases.append(CaseResult(name, expected, actual, passed, expected_divergence=True))
        return passed

    def merge(self, other: 'VerificationReport', prefix: str = "") -> 'VerificationReport':
        for case in other.cases:
            self.cases.append(CaseResult(
                f"{prefix}{case.name}", case.expected, case.actual, case.passed, case.expected_divergence
            ))
        return self

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.passed]

    def raise_on_failure(self) -> 'VerificationReport':
        """
        Raises:
            VerificationFailure: 存在失败用例
        """
        if not self.passed:
            raise VerificationFailure(self.suite, [case.to_dict() for case in self.failures])
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'parameters': _render(self.parameters),
            'passed': self.passed,
            'total': len(self.cases),
            'failed': len(self.failures),
            'cases': [case.to_dict() for case in self.cases],
        }
