"""报告格式化工具

把精确系数、系数表与验证报告格式化为字符串行；全部数值都是精确的有理数/多项式字符串
"""
from typing import Any, Dict, List, Mapping, Optional, Sequence

from models.scalar import Scalar, format_scalar


class ReportFormatter:
    """报告格式化器"""

    @staticmethod
    def format_value(value: Scalar) -> str:
        """
        格式化单个系数

        Args:
            value: 精确系数

        Returns:
            如 "7"、"-1/2"、"q^2 + 2*q + 1"
        """
        return format_scalar(value)

    @staticmethod
    def format_table(table: Mapping[Any, Scalar]) -> Dict[str, str]:
        """分拆（或下降集）→ 系数 的表，键用 key() 形式"""
        return {
            (key.key() if hasattr(key, 'key') else str(key)): format_scalar(value)
            for key, value in table.items()
        }

    @staticmethod
    def format_report_summary(report: Dict[str, Any]) -> List[str]:
        """
        验证报告的摘要行（写到 stderr）

        Args:
            report: VerificationReport.to_dict() 的结果

        Returns:
            摘要行列表
        """
        status = "✅ 通过" if report.get('passed') else "❌ 失败"
        lines = [
            f"{status} 套件 {report.get('suite')}",
            f"  用例 {report.get('total', 0)} 个，失败 {report.get('failed', 0)} 个",
        ]
        divergences = [case for case in report.get('cases', []) if case.get('expected_divergence')]
        if divergences:
            lines.append(f"  预期中的不一致 {len(divergences)} 个:")
            lines.extend(f"  • {case['name']}: {case['expected']} ≠ {case['actual']}" for case in divergences)
        failures = [case for case in report.get('cases', []) if not case.get('passed')]
        for case in failures[:10]:
            lines.append(f"  ✗ {case['name']}: 期望 {case['expected']}，实际 {case['actual']}")
        if len(failures) > 10:
            lines.append(f"  …… 另有 {len(failures) - 10} 个失败用例见 JSON 报告")
        return lines

    @staticmethod
    def format_error_message(title: str, error: str, suggestions: Optional[Sequence[str]] = None) -> List[str]:
        """
        格式化错误消息（统一格式）

        Args:
            title: 错误标题
            error: 错误描述
            suggestions: 建议列表

        Returns:
            格式化后的错误消息列表
        """
        error_lines = [
            f"❌ {title}",
            "",
            f"🔍 失败原因: {error}",
            ""
        ]

        if suggestions:
            error_lines.extend([
                "💡 可能的解决方案:",
                *[f"• {suggestion}" for suggestion in suggestions]
            ])

        return error_lines


# 便捷别名
fmt_value = ReportFormatter.format_value
fmt_table = ReportFormatter.format_table
fmt_summary = ReportFormatter.format_report_summary
fmt_error = ReportFormatter.format_error_message
