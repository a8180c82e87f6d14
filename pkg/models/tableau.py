"""P-表数据模型

- PTableau: 用偏序集元素填充的（法式）Young 图
- PPermutation: 单行 P-表
"""
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from utils.error_handler import ValidationError

from .partition import Partition
from .poset import Poset


@dataclass(frozen=True)
class PTableau:
    """
    P-表

    rows[0] 是最下方（最长）的一行 U_1；每个元素恰好出现一次。

    Attributes:
        poset: 偏序集 P
        rows: 各行 U_1, U_2, ...

    Example:
        >>> P = Poset.natural_unit_interval(5)
        >>> U = PTableau(P, ((1, 3, 2), (4, 5)))
        >>> U.shape  # Partition(parts=(3, 2))
    """
    poset: Poset
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        content = sorted(x for row in rows for x in row)
        if content != list(self.poset.elements):
            raise ValidationError(f"P-表的内容必须恰好是 1..{self.poset.n}: {rows}")
        # 行长弱递减由 Partition 检查
        Partition(tuple(len(row) for row in rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def entry(self, i: int, j: int) -> int:
        """U_{i,j}（从 1 开始）"""
        return self.rows[i - 1][j - 1]

    def sorted_row(self, i: int) -> Tuple[int, ...]:
        """Ū_i：第 i 行按标号排序"""
        return tuple(sorted(self.rows[i - 1]))

    def columns(self) -> List[Tuple[int, ...]]:
        """各列自下而上"""
        if not self.rows:
            return []
        return [tuple(row[j] for row in self.rows if len(row) > j) for j in range(len(self.rows[0]))]

    def to_dict(self) -> Dict[str, Any]:
        """JSON 形式 {"shape":[3,2],"rows":[[1,3,2],[4,5]]}"""
        return {'shape': list(self.shape.parts), 'rows': [list(row) for row in self.rows]}

    @classmethod
    def from_dict(cls, poset: Poset, data: Dict[str, Any]) -> 'PTableau':
        try:
            rows = tuple(tuple(row) for row in data['rows'])
        except (KeyError, TypeError) as e:
            raise ValidationError(f"P-表 JSON 格式错误: {e}")
        tableau = cls(poset, rows)
        if 'shape' in data and list(tableau.shape.parts) != list(data['shape']):
            raise ValidationError(f"声明的形状 {data['shape']} 与各行长度不符")
        return tableau


class PPermutation(PTableau):
    """形状为 (n) 的 P-表"""

    def __init__(self, poset: Poset, word: Sequence[int]):
        super().__init__(poset, (tuple(word),) if len(word) else ())

    @property
    def word(self) -> Tuple[int, ...]:
        return self.rows[0] if self.rows else ()

    @classmethod
    def all_of(cls, poset: Poset) -> Iterable['PPermutation']:
        for word in permutations(poset.elements):
            yield cls(poset, word)
