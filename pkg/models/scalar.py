"""精确系数环 QQ[q]

全库唯一的系数类型，基于 sympy 的稀疏多项式环：
- Scalar: QQ[q] 的元素（有理数即零次多项式）
- scalar / rational: 构造
- q_int / q_factorial: q-整数与 q-阶乘
- at_q_one / to_fraction / is_nonnegative: 特化与比较
- parse_scalar / format_scalar: 字符串形式 "3/2*q^2 + 1"
"""
from fractions import Fraction
from typing import Union

from sympy import Symbol
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from utils.error_handler import DomainError, ValidationError

ScalarRing, q = ring("q", QQ)
Scalar = PolyElement

ZERO = ScalarRing.zero
ONE = ScalarRing.one

_Q_SYMBOL = Symbol("q")

ScalarLike = Union[PolyElement, int, Fraction, str]


def scalar(value: ScalarLike) -> Scalar:
    """
    把整数、分数、字符串或多项式转换为 Scalar

    Args:
        value: 待转换的值

    Returns:
        ScalarRing 中的元素
    """
    if isinstance(value, PolyElement):
        if value.ring != ScalarRing:
            raise ValidationError(f"多项式不属于 QQ[q]: {value}")
        return value
    if isinstance(value, bool):
        return ScalarRing(int(value))
    if isinstance(value, int):
        return ScalarRing(value)
    if isinstance(value, Fraction):
        return ScalarRing(QQ(value.numerator, value.denominator))
    if isinstance(value, str):
        return parse_scalar(value)
    try:
        return ScalarRing(value)
    except Exception as e:
        raise ValidationError(f"无法转换为系数: {value!r} ({e})")


def rational(numerator: int, denominator: int = 1) -> Scalar:
    """构造有理常数 numerator/denominator"""
    if denominator == 0:
        raise ValidationError("分母不能为0")
    return ScalarRing(QQ(numerator, denominator))


def q_int(b: int) -> Scalar:
    """
    q-整数 [b]_q = 1 + q + ... + q^{b-1}，[0]_q = 0

    Raises:
        ValidationError: b 为负数
    """
    if not isinstance(b, int) or b < 0:
        raise ValidationError(f"q-整数要求 b >= 0，收到 {b}")
    return sum((q ** i for i in range(b)), ZERO)


def q_factorial(b: int) -> Scalar:
    """q-阶乘 [b]_q! = [1]_q ... [b]_q，[0]_q! = 1"""
    if not isinstance(b, int) or b < 0:
        raise ValidationError(f"q-阶乘要求 b >= 0，收到 {b}")
    result = ONE
    for i in range(1, b + 1):
        result *= q_int(i)
    return result


def is_rational(value: Scalar) -> bool:
    """是否不含 q"""
    return value.is_ground


def at_q_one(value: Scalar) -> Scalar:
    """在 q=1 处特化（系数求和）"""
    return ScalarRing(sum(value.coeffs(), QQ.zero)) if value else ZERO


def constant_term(value: Scalar):
    """常数项（QQ 元素）"""
    return value.get(ScalarRing.zero_monom, QQ.zero)


def to_fraction(value: Scalar) -> Fraction:
    """
    把不含 q 的系数转换为 Fraction

    Raises:
        DomainError: 含 q 时抛出
    """
    if not is_rational(value):
        raise DomainError(f"含 q 的系数不能转换为有理数: {format_scalar(value)}")
    c = constant_term(value)
    return Fraction(int(c.numerator), int(c.denominator))


def is_nonnegative(value: Scalar) -> bool:
    """
    有理系数是否非负

    Raises:
        DomainError: 含 q 时抛出（多项式没有全序）
    """
    return to_fraction(value) >= 0


def has_nonnegative_coefficients(value: Scalar) -> bool:
    """q-多项式的系数是否全部非负"""
    return all(c >= 0 for c in value.coeffs()) if value else True


def degree(value: Scalar) -> int:
    """q 的次数（零多项式返回 -1）"""
    return value.degree() if value else -1


def coefficient_list(value: Scalar) -> list:
    """按 q 的升幂返回 Fraction 列表"""
    if not value:
        return []
    result = [Fraction(0)] * (value.degree() + 1)
    for (exponent,), c in value.terms():
        result[exponent] = Fraction(int(c.numerator), int(c.denominator))
    return result


def _format_coefficient(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_scalar(value: Scalar) -> str:
    """
    格式化为 "3/2*q^2 + 1" 形式（降幂，精确）

    Args:
        value: 系数

    Returns:
        字符串
    """
    if not value:
        return "0"
    pieces = []
    coefficients = coefficient_list(value)
    for exponent in range(len(coefficients) - 1, -1, -1):
        c = coefficients[exponent]
        if c == 0:
            continue
        magnitude = abs(c)
        if exponent == 0:
            body = _format_coefficient(magnitude)
        else:
            power = "q" if exponent == 1 else f"q^{exponent}"
            body = power if magnitude == 1 else f"{_format_coefficient(magnitude)}*{power}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


def parse_scalar(text: str) -> Scalar:
    """
    解析 "3/2*q^2 + 1"、"−1"、"1/6" 等字符串

    Raises:
        ValidationError: 无法解析或不是 q 的多项式
    """
    if not isinstance(text, str) or not text.strip():
        raise ValidationError(f"空的系数字符串: {text!r}")
    normalized = text.strip().replace("−", "-").replace("^", "**")
    try:
        expr = parse_expr(normalized, local_dict={"q": _Q_SYMBOL})
        return ScalarRing.from_expr(expr)
    except Exception as e:
        raise ValidationError(f"无法解析系数 {text!r}: {e}")
