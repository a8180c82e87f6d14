"""整数分拆、组合与下降集

全库共享的索引语言：
- Partition: 整数分拆 λ ⊢ n（规范顺序为反字典序）
- Composition: 组合 α ⊨ n
- DescentSet: [n-1] 的子集 S
- partitions_of / compositions_of / descent_sets_of: 完整枚举
"""
import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from utils.error_handler import ValidationError

from .scalar import Scalar, ScalarRing

_EXPONENTIAL_TOKEN = re.compile(r"(\d)(?:\^(\d+))?")


@dataclass(frozen=True, order=False)
class Partition:
    """
    整数分拆

    Attributes:
        parts: 弱递减的正整数元组

    Example:
        >>> Partition((3, 1, 1, 1)).transpose()
        Partition(parts=(4, 1, 1))
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if any((not isinstance(p, int)) or p < 1 for p in parts):
            raise ValidationError(f"分拆的部分必须是正整数: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError(f"分拆的部分必须弱递减: {parts}")

    @property
    def n(self) -> int:
        """|λ|"""
        return sum(self.parts)

    @property
    def ell(self) -> int:
        """ℓ(λ)"""
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def key(self) -> str:
        """JSON 键形式 "3,1,1" """
        return str(self)

    def transpose(self) -> 'Partition':
        """转置分拆 λ^tr_i = #{j | λ_j >= i}"""
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= i) for i in range(1, self.parts[0] + 1)))

    def multiplicities(self) -> Dict[int, int]:
        """各部分的重数"""
        return dict(Counter(self.parts))

    def z(self) -> int:
        """z_λ = λ_1 ⋯ λ_ℓ · α_1! ⋯ α_n!"""
        value = math.prod(self.parts)
        for count in self.multiplicities().values():
            value *= math.factorial(count)
        return value

    def z_scalar(self) -> Scalar:
        """z_λ 作为系数"""
        return ScalarRing(self.z())

    def class_size(self) -> int:
        """共轭类大小 n!/z_λ"""
        return math.factorial(self.n) // self.z()

    def factorial_product(self) -> int:
        """λ_1! ⋯ λ_ℓ!"""
        return math.prod(math.factorial(p) for p in self.parts)

    def sign(self) -> int:
        """(-1)^{n-ℓ(λ)}"""
        return -1 if (self.n - self.ell) % 2 else 1

    def cells(self) -> List[Tuple[int, int]]:
        """法式 Young 图的格子 (行, 列)，从 1 开始，第1行在最下方"""
        return [(i + 1, j + 1) for i, length in enumerate(self.parts) for j in range(length)]

    def is_hook(self) -> bool:
        """是否为钩形 k1^{n-k}"""
        return self.ell <= 1 or all(p == 1 for p in self.parts[1:])

    def is_rectangle(self) -> bool:
        """是否为矩形 r^k"""
        return len(set(self.parts)) <= 1

    @classmethod
    def of(cls, parts: Iterable[int]) -> 'Partition':
        """由任意顺序的正整数构造（自动排序）"""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @classmethod
    def hook(cls, n: int, k: int) -> 'Partition':
        """钩形 k1^{n-k}"""
        if not 1 <= k <= n:
            raise ValidationError(f"钩形要求 1 <= k <= n，收到 k={k}, n={n}")
        return cls((k,) + (1,) * (n - k))

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """
        解析分拆字符串

        支持 "3,1,1"、"311"、指数形式 "31^2" 与 "4^2 1^6"；
        逐位的紧凑写法只用于 1 到 9，"10" 读作单个部分 (10,)

        Raises:
            ValidationError: 无法解析
        """
        if isinstance(text, (list, tuple)):
            return cls.of(text)
        raw = str(text).strip()
        if raw in ("", "∅", "0"):
            return cls(())
        try:
            if "," in raw:
                return cls.of(int(piece) for piece in raw.split(",") if piece.strip())
            parts: List[int] = []
            for token in raw.split():
                if token.isdigit() and "0" in token:
                    # 含 0 的纯数字串不能逐位读，按单个部分处理
                    parts.append(int(token))
                    continue
                position = 0
                for match in _EXPONENTIAL_TOKEN.finditer(token):
                    if match.start() != position:
                        raise ValueError(f"无法识别的片段 {token[position:]}")
                    position = match.end()
                    part = int(match.group(1))
                    exponent = int(match.group(2)) if match.group(2) else 1
                    parts.extend([part] * exponent)
                if position != len(token):
                    raise ValueError(f"无法识别的片段 {token[position:]}")
            return cls.of(parts)
        except ValidationError:
            raise
        except Exception as e:
            raise ValidationError(f"无法解析分拆 {text!r}: {e}")


@dataclass(frozen=True)
class Composition:
    """
    组合 α ⊨ n

    Attributes:
        parts: 正整数元组
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if any((not isinstance(p, int)) or p < 1 for p in parts):
            raise ValidationError(f"组合的部分必须是正整数: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def key(self) -> str:
        return str(self)

    def rearrangement_class(self) -> Partition:
        """递减排序得到的分拆"""
        return Partition.of(self.parts)

    def descent_set(self) -> 'DescentSet':
        """部分和集合 set(α) ⊆ [n-1]"""
        partial, total = [], 0
        for p in self.parts[:-1]:
            total += p
            partial.append(total)
        return DescentSet(self.n, tuple(partial))

    @classmethod
    def parse(cls, text: str) -> 'Composition':
        raw = str(text).strip()
        if raw in ("", "∅"):
            return cls(())
        try:
            return cls(tuple(int(piece) for piece in raw.split(",")))
        except ValueError as e:
            raise ValidationError(f"无法解析组合 {text!r}: {e}")


@dataclass(frozen=True)
class DescentSet:
    """
    [n-1] 的子集

    Attributes:
        n: 规模
        elements: 递增元组，元素位于 1..n-1
    """
    n: int
    elements: Tuple[int, ...] = ()

    def __post_init__(self):
        elements = tuple(sorted(set(self.elements)))
        object.__setattr__(self, 'elements', elements)
        if any(e < 1 or e > self.n - 1 for e in elements):
            raise ValidationError(f"下降集元素必须位于 1..{self.n - 1}: {elements}")

    def __contains__(self, item: int) -> bool:
        return item in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.elements)

    def key(self) -> str:
        return str(self)

    def complement(self) -> 'DescentSet':
        """[n-1] \\ S"""
        return DescentSet(self.n, tuple(i for i in range(1, self.n) if i not in self.elements))

    def is_subset(self, other: 'DescentSet') -> bool:
        return set(self.elements) <= set(other.elements)

    def composition(self) -> Composition:
        """comp(S)"""
        if self.n == 0:
            return Composition(())
        cuts = (0,) + self.elements + (self.n,)
        return Composition(tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)))

    @classmethod
    def parse(cls, n: int, text: str) -> 'DescentSet':
        raw = str(text).strip().strip("{}")
        if raw in ("", "∅"):
            return cls(n, ())
        try:
            return cls(n, tuple(int(piece) for piece in raw.split(",")))
        except ValueError as e:
            raise ValidationError(f"无法解析下降集 {text!r}: {e}")


def _partitions_bounded(n: int, largest: int) -> List[Tuple[int, ...]]:
    if n == 0:
        return [()]
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            result.append((first,) + rest)
    return result


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """
    n 的全部分拆，按反字典序（(n) 在前，(1^n) 在后）

    Raises:
        ValidationError: n 为负数
    """
    if not isinstance(n, int) or n < 0:
        raise ValidationError(f"分拆枚举要求 n >= 0，收到 {n}")
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n))


@lru_cache(maxsize=None)
def partition_index(n: int) -> Dict[Partition, int]:
    """分拆在规范顺序中的下标"""
    return {lam: i for i, lam in enumerate(partitions_of(n))}


@lru_cache(maxsize=None)
def descent_sets_of(n: int) -> Tuple[DescentSet, ...]:
    """[n-1] 的全部子集，按大小再按字典序"""
    if n < 0:
        raise ValidationError(f"要求 n >= 0，收到 {n}")
    ground = range(1, n)
    return tuple(DescentSet(n, subset) for size in range(max(n, 1)) for subset in combinations(ground, size))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> Tuple[Composition, ...]:
    """n 的全部组合（与 descent_sets_of 一一对应的顺序）"""
    if n == 0:
        return (Composition(()),)
    return tuple(S.composition() for S in descent_sets_of(n))


def rearrangement_class(alpha: Composition) -> Partition:
    """组合递减排序得到的分拆"""
    return alpha.rearrangement_class()


def rearrangements(lam: Partition) -> List[Composition]:
    """λ 的全部不同重排"""
    from sympy.utilities.iterables import multiset_permutations
    return [Composition(tuple(p)) for p in multiset_permutations(list(lam.parts))]


def multinomial(parts: Iterable[int]) -> int:
    """多项式系数 (Σ parts)! / Π parts!"""
    parts = list(parts)
    return math.factorial(sum(parts)) // math.prod(math.factorial(p) for p in parts)
