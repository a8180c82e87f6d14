"""置换数据模型

- Permutation: 单行记号 w1…wn 表示的 Sn 元素
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Any, Dict, List, Tuple

from utils.error_handler import ValidationError

from .partition import Partition


@dataclass(frozen=True)
class Permutation:
    """
    置换（单行记号，值为 1..n）

    Attributes:
        word: (w1, ..., wn)

    Example:
        >>> w = Permutation.parse("5243761")
        >>> w.cycle_type()  # Partition(parts=(3, 2, 1, 1))
        >>> str(w.sigma_flatten())  # '2,4,3,6,7,1,5'
    """
    word: Tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, 'word', word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValidationError(f"不是 [n] 上的双射: {word}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.word)

    def key(self) -> str:
        return str(self)

    def compact(self) -> str:
        """紧凑形式 "5243761"（仅 n < 10）"""
        return "".join(str(x) for x in self.word) if self.n < 10 else str(self)

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """解析 "5,2,4,3,7,6,1" 或紧凑形式 "5243761" """
        if isinstance(text, (list, tuple)):
            return cls(tuple(text))
        raw = str(text).strip()
        try:
            if "," in raw:
                return cls(tuple(int(piece) for piece in raw.split(",")))
            if raw == "":
                return cls(())
            return cls(tuple(int(ch) for ch in raw))
        except ValueError as e:
            raise ValidationError(f"无法解析置换 {text!r}: {e}")

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> 'Permutation':
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def young_longest(cls, mu: Partition) -> 'Permutation':
        """
        Young 子群 S_μ 的最长元 w_μ（各块内逆序）

        Example:
            μ=(2,1) → 2,1,3
        """
        word: List[int] = []
        start = 0
        for part in mu.parts:
            word.extend(range(start + part, start, -1))
            start += part
        return cls(tuple(word))

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.word))

    def inverse(self) -> 'Permutation':
        result = [0] * self.n
        for i, x in enumerate(self.word, start=1):
            result[x - 1] = i
        return Permutation(tuple(result))

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        """复合 (v·w)(i) = v(w(i))"""
        if self.n != other.n:
            raise ValidationError(f"置换规模不一致: {self.n} != {other.n}")
        return Permutation(tuple(self.word[x - 1] for x in other.word))

    def cycles(self) -> List[Tuple[int, ...]]:
        """标准轮换记号：每个轮换以最大元开头，轮换按最大元递增排列"""
        seen = set()
        result = []
        for start in range(self.n, 0, -1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            result.append(tuple(cycle))
        return sorted(result, key=lambda cycle: cycle[0])

    def cycle_type(self) -> Partition:
        """ctype(w)"""
        return Partition.of(len(cycle) for cycle in self.cycles())

    def length(self) -> int:
        """ℓ(w)，逆序数"""
        return sum(1 for i, j in combinations(range(self.n), 2) if self.word[i] > self.word[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def contains(self, pattern: 'Permutation') -> bool:
        """是否包含经典模式"""
        k = pattern.n
        target = pattern.word
        for positions in combinations(range(self.n), k):
            values = [self.word[p] for p in positions]
            ranks = sorted(values)
            if tuple(ranks.index(v) + 1 for v in values) == target:
                return True
        return False

    def avoids(self, pattern: 'Permutation') -> bool:
        return not self.contains(pattern)

    def is_smooth(self) -> bool:
        """避开 4231 与 3412"""
        return self.avoids(PATTERN_4231) and self.avoids(PATTERN_3412)

    def rank_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """r(i,j) = #{a ≤ i | w(a) ≥ j}，i,j 取 1..n"""
        rows = []
        for i in range(1, self.n + 1):
            prefix = self.word[:i]
            rows.append(tuple(sum(1 for x in prefix if x >= j) for j in range(1, self.n + 1)))
        return tuple(rows)

    def sigma_flatten(self) -> 'Permutation':
        """擦去标准轮换记号中的括号"""
        return Permutation(tuple(x for cycle in self.cycles() for x in cycle))

    def sigma_unflatten(self) -> 'Permutation':
        """sigma_flatten 的逆：从左到右最大值处断开轮换"""
        cycles: List[List[int]] = []
        current_max = 0
        for x in self.word:
            if x > current_max:
                cycles.append([x])
                current_max = x
            else:
                cycles[-1].append(x)
        result = [0] * self.n
        for cycle in cycles:
            for position, x in enumerate(cycle):
                result[x - 1] = cycle[(position + 1) % len(cycle)]
        return Permutation(tuple(result))

    def to_dict(self) -> Dict[str, Any]:
        return {'w': str(self)}


PATTERN_312 = Permutation((3, 1, 2))
PATTERN_4231 = Permutation((4, 2, 3, 1))
PATTERN_3412 = Permutation((3, 4, 1, 2))


@lru_cache(maxsize=None)
def permutations_of(n: int) -> Tuple[Permutation, ...]:
    """Sn 的全部元素（字典序）"""
    if n < 0:
        raise ValidationError(f"要求 n >= 0，收到 {n}")
    return tuple(Permutation(word) for word in permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def avoiders_of(n: int, pattern: Permutation = PATTERN_312) -> Tuple[Permutation, ...]:
    """Sn 中避开给定模式的全部置换"""
    return tuple(w for w in permutations_of(n) if w.avoids(pattern))
