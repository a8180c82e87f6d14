"""对称函数与拟对称函数数据模型

- BasisTag: Λn 的六组标准基
- SymFunc: 某组基下的系数表
- QSymKind / QSymFunc: 单项式拟对称基 M_α 与基本拟对称基 F_{n,S}
- TransitionMatrix: 按规范分拆顺序索引的过渡矩阵
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Tuple, Union

from utils.error_handler import ValidationError

from .partition import Composition, DescentSet, Partition, partition_index, partitions_of
from .scalar import ONE, ZERO, Scalar, format_scalar, scalar


class BasisTag(Enum):
    """对称函数的六组标准基"""
    MONOMIAL = "m"      # 单项式
    ELEMENTARY = "e"    # 初等
    HOMOGENEOUS = "h"   # 完全齐次
    POWER = "p"         # 幂和
    SCHUR = "s"         # Schur
    FORGOTTEN = "f"     # 遗忘

    @classmethod
    def parse(cls, text: Union[str, 'BasisTag']) -> 'BasisTag':
        if isinstance(text, BasisTag):
            return text
        for tag in cls:
            if tag.value == str(text).strip().lower():
                return tag
        raise ValidationError(f"未知的基: {text}，可选: m, e, h, p, s, f")


def _prune(coeffs: Mapping[Any, Scalar]) -> Dict[Any, Scalar]:
    return {key: scalar(value) for key, value in coeffs.items() if value}


@dataclass(frozen=True, eq=False)
class SymFunc:
    """
    Λn 中的元素（QQ[q] 系数）

    Attributes:
        n: 次数
        basis: 所在的基
        coeffs: 分拆到系数的映射，不含零系数

    Example:
        >>> f = SymFunc.basis_element(BasisTag.ELEMENTARY, Partition((2, 1)))
        >>> f.coefficient(Partition((2, 1)))  # 1
    """
    n: int
    basis: BasisTag
    coeffs: Dict[Partition, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        pruned = _prune(self.coeffs)
        for lam in pruned:
            if not isinstance(lam, Partition) or lam.n != self.n:
                raise ValidationError(f"系数键 {lam} 不是 {self.n} 的分拆")
        object.__setattr__(self, 'coeffs', pruned)

    @classmethod
    def zero(cls, n: int, basis: BasisTag) -> 'SymFunc':
        return cls(n, basis, {})

    @classmethod
    def basis_element(cls, basis: BasisTag, lam: Partition) -> 'SymFunc':
        """单个基元素 b_λ"""
        return cls(lam.n, basis, {lam: ONE})

    def coefficient(self, lam: Partition) -> Scalar:
        return self.coeffs.get(lam, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        """按规范顺序遍历非零项"""
        index = partition_index(self.n)
        return sorted(self.coeffs.items(), key=lambda item: index[item[0]])

    def _check_compatible(self, other: 'SymFunc') -> None:
        if self.n != other.n or self.basis != other.basis:
            raise ValidationError(f"不能直接相加: ({self.n}, {self.basis.value}) 与 ({other.n}, {other.basis.value})")

    def __add__(self, other: 'SymFunc') -> 'SymFunc':
        self._check_compatible(other)
        result = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            result[lam] = result.get(lam, ZERO) + c
        return SymFunc(self.n, self.basis, result)

    def __neg__(self) -> 'SymFunc':
        return SymFunc(self.n, self.basis, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: 'SymFunc') -> 'SymFunc':
        return self + (-other)

    def scale(self, factor) -> 'SymFunc':
        factor = scalar(factor)
        return SymFunc(self.n, self.basis, {lam: factor * c for lam, c in self.coeffs.items()})

    def map_coefficients(self, func) -> 'SymFunc':
        """对每个系数应用 func（例如 q=1 特化）"""
        return SymFunc(self.n, self.basis, {lam: func(c) for lam, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [f"({format_scalar(c)})*{self.basis.value}[{lam}]" for lam, c in self.items()]
        return " + ".join(terms)

    def to_dict(self) -> Dict[str, Any]:
        """JSON 形式 {"n":5,"basis":"e","coeffs":{"4,1":"-1"}}"""
        return {
            'n': self.n,
            'basis': self.basis.value,
            'coeffs': {lam.key(): format_scalar(c) for lam, c in self.items()},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SymFunc':
        try:
            n = int(data['n'])
            basis = BasisTag.parse(data['basis'])
            coeffs = {Partition.parse(key): scalar(str(value)) for key, value in data.get('coeffs', {}).items()}
        except KeyError as e:
            raise ValidationError(f"对称函数 JSON 缺少字段 {e}")
        return cls(n, basis, coeffs)


class QSymKind(Enum):
    """拟对称函数的两组基"""
    MONOMIAL = "M"      # 单项式拟对称 M_α，键为组合
    FUNDAMENTAL = "F"   # 基本拟对称 F_{n,S}，键为下降集


@dataclass(frozen=True, eq=False)
class QSymFunc:
    """
    QSym_n 中的元素

    Attributes:
        n: 次数
        kind: M（组合键）或 F（下降集键）
        coeffs: 键到系数的映射，不含零系数
    """
    n: int
    kind: QSymKind
    coeffs: Dict[Union[Composition, DescentSet], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        pruned = _prune(self.coeffs)
        expected = Composition if self.kind == QSymKind.MONOMIAL else DescentSet
        for key in pruned:
            if not isinstance(key, expected) or key.n != self.n:
                raise ValidationError(f"拟对称函数的键 {key} 与类型 {self.kind.value} / 次数 {self.n} 不符")
        object.__setattr__(self, 'coeffs', pruned)

    def coefficient(self, key) -> Scalar:
        return self.coeffs.get(key, ZERO)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda item: (len(item[0].parts if self.kind == QSymKind.MONOMIAL else item[0].elements), item[0].key()))

    def __add__(self, other: 'QSymFunc') -> 'QSymFunc':
        if self.n != other.n or self.kind != other.kind:
            raise ValidationError("拟对称函数的次数或基不一致")
        result = dict(self.coeffs)
        for key, c in other.coeffs.items():
            result[key] = result.get(key, ZERO) + c
        return QSymFunc(self.n, self.kind, result)

    def map_coefficients(self, func) -> 'QSymFunc':
        return QSymFunc(self.n, self.kind, {key: func(c) for key, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSymFunc):
            return NotImplemented
        return self.n == other.n and self.kind == other.kind and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({format_scalar(c)})*{self.kind.value}[{key}]" for key, c in self.items())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'basis': self.kind.value,
            'coeffs': {key.key(): format_scalar(c) for key, c in self.items()},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'QSymFunc':
        n = int(data['n'])
        kind = QSymKind(data['basis'])
        coeffs = {}
        for key, value in data.get('coeffs', {}).items():
            parsed = Composition.parse(key) if kind == QSymKind.MONOMIAL else DescentSet.parse(n, key)
            coeffs[parsed] = scalar(str(value))
        return cls(n, kind, coeffs)


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """
    过渡矩阵

    entries[i][j] 是 source 基元素 index[i] 在 target 基下展开时 index[j] 的系数，
    于是 Σ_i a_i·source_i = Σ_j (Σ_i a_i·entries[i][j])·target_j。

    Attributes:
        n: 次数
        source: 源基
        target: 目标基
        entries: 按规范分拆顺序索引的方阵
    """
    n: int
    source: Any
    target: Any
    entries: Tuple[Tuple[Scalar, ...], ...]

    @property
    def index(self) -> Tuple[Partition, ...]:
        return partitions_of(self.n)

    def entry(self, row: Partition, col: Partition) -> Scalar:
        lookup = partition_index(self.n)
        return self.entries[lookup[row]][lookup[col]]

    def apply(self, coeffs: Mapping[Partition, Scalar]) -> Dict[Partition, Scalar]:
        """把 source 基下的系数转换为 target 基下的系数"""
        lookup = partition_index(self.n)
        result: Dict[Partition, Scalar] = {}
        for lam, a in coeffs.items():
            if not a:
                continue
            row = self.entries[lookup[lam]]
            for j, c in enumerate(row):
                if c:
                    mu = self.index[j]
                    result[mu] = result.get(mu, ZERO) + a * c
        return {lam: c for lam, c in result.items() if c}

    def compose(self, other: 'TransitionMatrix') -> 'TransitionMatrix':
        """self: A→B, other: B→C，得到 A→C"""
        if self.n != other.n or self.target != other.source:
            raise ValidationError("过渡矩阵无法复合：基或次数不匹配")
        size = len(self.index)
        entries = tuple(
            tuple(sum((self.entries[i][k] * other.entries[k][j] for k in range(size)), ZERO) for j in range(size))
            for i in range(size)
        )
        return TransitionMatrix(self.n, self.source, other.target, entries)

    def is_identity(self) -> bool:
        return all(
            c == (ONE if i == j else ZERO)
            for i, row in enumerate(self.entries) for j, c in enumerate(row)
        )

    def to_dict(self) -> Dict[str, Any]:
        label = lambda tag: getattr(tag, 'value', str(tag))
        return {
            'n': self.n,
            'from': label(self.source),
            'to': label(self.target),
            'index': [lam.key() for lam in self.index],
            'entries': [[format_scalar(c) for c in row] for row in self.entries],
        }
