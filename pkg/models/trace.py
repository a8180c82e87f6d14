"""迹与群代数数据模型

- TraceBasis: 迹空间的六组标准基
- Trace: Sn 上的类函数（按轮换型取值）
- GroupAlgebraElement: QQ[q][Sn] 的稀疏元素
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, Tuple, Union

from utils.error_handler import ValidationError

from .partition import Partition, partitions_of
from .permutation import Permutation
from .scalar import ONE, ZERO, Scalar, format_scalar, scalar


class TraceBasis(Enum):
    """迹空间的标准基"""
    EPSILON = "epsilon"   # 诱导符号特征
    ETA = "eta"           # 诱导平凡特征
    CHI = "chi"           # 不可约特征
    PSI = "psi"           # 幂和迹
    PHI = "phi"           # 单项式迹
    GAMMA = "gamma"       # 遗忘迹

    @classmethod
    def parse(cls, text: Union[str, 'TraceBasis']) -> 'TraceBasis':
        if isinstance(text, TraceBasis):
            return text
        raw = str(text).strip().lower()
        aliases = {'ε': 'epsilon', 'η': 'eta', 'χ': 'chi', 'ψ': 'psi', 'φ': 'phi', 'γ': 'gamma'}
        raw = aliases.get(raw, raw)
        for basis in cls:
            if basis.value == raw:
                return basis
        raise ValidationError(f"未知的迹基: {text}，可选: {', '.join(b.value for b in cls)}")


@dataclass(frozen=True, eq=False)
class Trace:
    """
    类函数 θ: Sn → QQ[q]

    Attributes:
        n: 规模
        values: 轮换型到取值的映射（缺省为 0）
    """
    n: int
    values: Dict[Partition, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for lam, value in self.values.items():
            if not isinstance(lam, Partition) or lam.n != self.n:
                raise ValidationError(f"迹的键 {lam} 不是 {self.n} 的分拆")
            if value:
                cleaned[lam] = scalar(value)
        object.__setattr__(self, 'values', cleaned)

    def __call__(self, lam: Partition) -> Scalar:
        """θ 在轮换型 λ 上的取值"""
        return self.values.get(lam, ZERO)

    def at(self, w: Permutation) -> Scalar:
        return self(w.cycle_type())

    def __add__(self, other: 'Trace') -> 'Trace':
        if self.n != other.n:
            raise ValidationError(f"迹的规模不一致: {self.n} != {other.n}")
        return Trace(self.n, {lam: self(lam) + other(lam) for lam in partitions_of(self.n)})

    def __neg__(self) -> 'Trace':
        return Trace(self.n, {lam: -v for lam, v in self.values.items()})

    def __sub__(self, other: 'Trace') -> 'Trace':
        return self + (-other)

    def scale(self, factor) -> 'Trace':
        factor = scalar(factor)
        return Trace(self.n, {lam: factor * v for lam, v in self.values.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trace):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self) -> str:
        return f"Trace(n={self.n}, {self.to_dict()['values']})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'values': {lam.key(): format_scalar(self(lam)) for lam in partitions_of(self.n)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Trace':
        n = int(data['n'])
        return cls(n, {Partition.parse(key): scalar(str(v)) for key, v in data.get('values', {}).items()})


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    """
    群代数元素 g = Σ g(w)·w

    Attributes:
        n: 规模
        terms: 置换到系数的映射，不含零系数
    """
    n: int
    terms: Dict[Permutation, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for w, c in self.terms.items():
            if w.n != self.n:
                raise ValidationError(f"置换 {w} 不属于 S{self.n}")
            if c:
                cleaned[w] = scalar(c)
        object.__setattr__(self, 'terms', cleaned)

    @classmethod
    def zero(cls, n: int) -> 'GroupAlgebraElement':
        return cls(n, {})

    @classmethod
    def identity(cls, n: int) -> 'GroupAlgebraElement':
        return cls(n, {Permutation.identity(n): ONE})

    @classmethod
    def sum_of(cls, n: int, permutations: Iterable[Permutation], coefficient=ONE) -> 'GroupAlgebraElement':
        """Σ_{w∈permutations} coefficient·w（重复出现则累加）"""
        terms: Dict[Permutation, Scalar] = {}
        c = scalar(coefficient)
        for w in permutations:
            terms[w] = terms.get(w, ZERO) + c
        return cls(n, terms)

    def coefficient(self, w: Permutation) -> Scalar:
        return self.terms.get(w, ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda item: item[0].word)

    def __add__(self, other: 'GroupAlgebraElement') -> 'GroupAlgebraElement':
        if self.n != other.n:
            raise ValidationError(f"群代数元素规模不一致: {self.n} != {other.n}")
        result = dict(self.terms)
        for w, c in other.terms.items():
            result[w] = result.get(w, ZERO) + c
        return GroupAlgebraElement(self.n, result)

    def __neg__(self) -> 'GroupAlgebraElement':
        return GroupAlgebraElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: 'GroupAlgebraElement') -> 'GroupAlgebraElement':
        return self + (-other)

    def scale(self, factor) -> 'GroupAlgebraElement':
        factor = scalar(factor)
        return GroupAlgebraElement(self.n, {w: factor * c for w, c in self.terms.items()})

    def __mul__(self, other: 'GroupAlgebraElement') -> 'GroupAlgebraElement':
        if self.n != other.n:
            raise ValidationError(f"群代数元素规模不一致: {self.n} != {other.n}")
        result: Dict[Permutation, Scalar] = {}
        for v, a in self.terms.items():
            for w, b in other.terms.items():
                vw = v * w
                result[vw] = result.get(vw, ZERO) + a * b
        return GroupAlgebraElement(self.n, result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(n={self.n}, terms={len(self.terms)})"

    def to_dict(self) -> Dict[str, Any]:
        """JSON 形式 {"n":3,"terms":[{"w":"1,3,2","c":"1/2"}]}"""
        return {'n': self.n, 'terms': [{'w': str(w), 'c': format_scalar(c)} for w, c in self.items()]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GroupAlgebraElement':
        try:
            n = int(data['n'])
            terms: Dict[Permutation, Scalar] = {}
            for term in data.get('terms', []):
                w = Permutation.parse(term['w'])
                terms[w] = terms.get(w, ZERO) + scalar(str(term.get('c', '1')))
        except KeyError as e:
            raise ValidationError(f"群代数元素 JSON 缺少字段 {e}")
        return cls(n, terms)
