"""精确方阵数据模型"""
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from utils.error_handler import ValidationError

from .scalar import ONE, ZERO, Scalar, ScalarRing, format_scalar, is_rational, scalar


@dataclass(frozen=True)
class Matrix:
    """
    QQ[q] 上的 n×n 方阵

    Attributes:
        rows: 各行（a_{i,j} = rows[i-1][j-1]）
    """
    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(scalar(c) for c in row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValidationError(f"矩阵必须是方阵: {len(rows)} 行，各行长度 {[len(r) for r in rows]}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __call__(self, i: int, j: int) -> Scalar:
        """a_{i,j}（从 1 开始）"""
        return self.rows[i - 1][j - 1]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> 'Matrix':
        return cls(tuple(tuple(scalar(str(c)) if isinstance(c, str) else scalar(c) for c in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> 'Matrix':
        return cls(tuple(tuple(ONE for _ in range(n)) for _ in range(n)))

    def submatrix(self, row_set: Sequence[int], col_set: Sequence[int]) -> 'Matrix':
        """A_{I,J}，I、J 按递增顺序"""
        rows, cols = sorted(row_set), sorted(col_set)
        if len(rows) != len(cols):
            raise ValidationError(f"子矩阵要求 |I| = |J|，收到 {len(rows)} 与 {len(cols)}")
        return Matrix(tuple(tuple(self(i, j) for j in cols) for i in rows))

    def is_rational(self) -> bool:
        return all(is_rational(c) for row in self.rows for c in row)

    def to_domain_matrix(self) -> DomainMatrix:
        domain = ScalarRing.to_domain()
        return DomainMatrix([list(row) for row in self.rows], (self.n, self.n), domain)

    def to_lists(self) -> List[List[str]]:
        return [[format_scalar(c) for c in row] for row in self.rows]

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'rows': self.to_lists()}

    @classmethod
    def from_dict(cls, data: Any) -> 'Matrix':
        """接受 {"rows": [[...]]} 或直接的二维列表"""
        rows = data.get('rows') if isinstance(data, dict) else data
        if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
            raise ValidationError("矩阵 JSON 必须是二维列表或含 rows 字段的对象")
        matrix = cls.from_rows(rows)
        if isinstance(data, dict) and 'n' in data and int(data['n']) != matrix.n:
            raise ValidationError(f"声明的阶数 {data['n']} 与行数 {matrix.n} 不符")
        return matrix
