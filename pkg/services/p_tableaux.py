"""P-表服务

P-表的统计量（下降、超越、纪录、pinv、inv）、按谓词回溯计数、
P-置换的下降集、无环定向与无下降 P-表之间的双射，以及四个置换统计量的等分布检查。
"""
from collections import Counter
from itertools import combinations
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from models.partition import DescentSet, Partition
from models.permutation import Permutation, permutations_of
from models.poset import Digraph, Poset
from models.scalar import ZERO, Scalar, q
from models.tableau import PPermutation, PTableau
from utils.error_handler import ErrorHandler, ValidationError
from utils.logger import logger

# 谓词 → 需要检查的约束
PREDICATES: Dict[str, frozenset] = {
    'any': frozenset(),
    'column_strict': frozenset({'column'}),
    'row_semistrict': frozenset({'descent'}),
    'descent_free': frozenset({'descent'}),
    'standard': frozenset({'column', 'descent'}),
    'cyclically_row_semistrict': frozenset({'descent', 'cyclic'}),
    'excedance_free': frozenset({'excedance'}),
    'record_free': frozenset({'record'}),
    'record_free_and_row_semistrict': frozenset({'record', 'descent'}),
    'standard_and_cyclic': frozenset({'column', 'descent', 'cyclic'}),
    'standard_and_record_free': frozenset({'column', 'descent', 'record'}),
}

# q-计数可用的统计量
STATISTICS = ('pinv', 'inv', 'records', 'des', 'exc')


class PTableauService:
    """P-表的统计与计数"""

    # ==================== 统计量 ====================

    @staticmethod
    def descents(U: PTableau) -> int:
        """des_P(U)：U_{i,j} >_P U_{i,j+1} 的个数"""
        P = U.poset
        return sum(1 for row in U.rows for a, b in zip(row, row[1:]) if P.gt(a, b))

    @staticmethod
    def excedances(U: PTableau) -> int:
        """exc_P(U)：U_{i,j} >_P Ū_{i,j} 的个数（Ū_{i,j} 为该行第 j 小的标号）"""
        P = U.poset
        return sum(
            1 for row in U.rows for a, b in zip(row, sorted(row)) if P.gt(a, b)
        )

    @staticmethod
    def records(U: PTableau) -> int:
        """P-纪录个数（含每行首格这一平凡纪录）"""
        P = U.poset
        return sum(
            1 for row in U.rows for j, x in enumerate(row) if all(P.lt(y, x) for y in row[:j])
        )

    @staticmethod
    def nontrivial_records(U: PTableau) -> int:
        return PTableauService.records(U) - len(U.rows)

    @staticmethod
    def pinv(U: PTableau) -> int:
        """同行中 P-不可比、i < j 且 j 位于 i 左侧的对数"""
        P = U.poset
        return sum(
            1 for row in U.rows for a, b in combinations(row, 2) if a > b and P.incomparable(a, b)
        )

    @staticmethod
    def inv(U: PTableau) -> int:
        """同行中 i < j 且 j 位于 i 左侧的对数"""
        return sum(1 for row in U.rows for a, b in combinations(row, 2) if a > b)

    @staticmethod
    def statistics(U: PTableau) -> Dict[str, int]:
        """全部统计量；形状为 (n) 时附带 pdes/pasc/pexc/paexc"""
        result = {
            'des': PTableauService.descents(U),
            'exc': PTableauService.excedances(U),
            'records': PTableauService.records(U),
            'pinv': PTableauService.pinv(U),
            'inv': PTableauService.inv(U),
        }
        if len(U.rows) == 1:
            result.update(PTableauService.permutation_statistics(U.poset, U.rows[0]))
        return result

    @staticmethod
    def permutation_statistics(poset: Poset, word: Sequence[int]) -> Dict[str, int]:
        """P-置换 w 的 pdes / pasc / pexc / paexc"""
        pairs = list(zip(word, word[1:]))
        return {
            'pdes': sum(1 for a, b in pairs if poset.gt(a, b)),
            'pasc': sum(1 for a, b in pairs if poset.lt(a, b)),
            'pexc': sum(1 for i, x in enumerate(word, start=1) if poset.gt(x, i)),
            'paexc': sum(1 for i, x in enumerate(word, start=1) if poset.lt(x, i)),
        }

    @staticmethod
    def satisfies(U: PTableau, predicate: str) -> bool:
        """U 是否满足给定谓词"""
        checks = PTableauService._predicate(predicate)
        P = U.poset
        if 'descent' in checks and PTableauService.descents(U):
            return False
        if 'column' in checks and any(not P.lt(a, b) for col in U.columns() for a, b in zip(col, col[1:])):
            return False
        if 'cyclic' in checks and any(P.gt(row[-1], row[0]) for row in U.rows):
            return False
        if 'excedance' in checks and PTableauService.excedances(U):
            return False
        if 'record' in checks and PTableauService.nontrivial_records(U):
            return False
        return True

    # ==================== 回溯枚举 ====================

    @staticmethod
    def _predicate(name: str) -> frozenset:
        ErrorHandler.validate_choice(name, list(PREDICATES), "P-表谓词")
        return PREDICATES[name]

    @staticmethod
    def iter_tableaux(poset: Poset, shape: Partition, predicate: str = 'any') -> Iterator[PTableau]:
        """
        形状 λ、满足谓词的全部 P-表

        逐行（自下而上）逐格填充，行前缀与列约束即时剪枝

        Raises:
            ValidationError: |λ| ≠ |P| 或谓词未知
        """
        checks = PTableauService._predicate(predicate)
        ErrorHandler.validate_same_size(shape.n, poset.n, "形状与偏序集")
        P = poset
        rows: List[List[int]] = [[] for _ in shape.parts]
        used = set()

        def row_complete_ok(row: List[int]) -> bool:
            if 'cyclic' in checks and P.gt(row[-1], row[0]):
                return False
            if 'excedance' in checks and any(P.gt(a, b) for a, b in zip(row, sorted(row))):
                return False
            return True

        def fill(r: int, c: int) -> Iterator[PTableau]:
            if r == len(shape.parts):
                yield PTableau(P, tuple(tuple(row) for row in rows))
                return
            if c == shape.parts[r]:
                if row_complete_ok(rows[r]):
                    yield from fill(r + 1, 0)
                return
            row = rows[r]
            for x in P.elements:
                if x in used:
                    continue
                if 'descent' in checks and c > 0 and P.gt(row[-1], x):
                    continue
                if 'record' in checks and c > 0 and all(P.lt(y, x) for y in row):
                    continue
                if 'column' in checks and r > 0 and not P.lt(rows[r - 1][c], x):
                    continue
                used.add(x)
                row.append(x)
                yield from fill(r, c + 1)
                row.pop()
                used.discard(x)

        yield from fill(0, 0)

    @staticmethod
    def enumerate(poset: Poset, shape: Partition, predicate: str) -> int:
        """满足谓词的 P-表个数"""
        count = sum(1 for _ in PTableauService.iter_tableaux(poset, shape, predicate))
        logger.debug(f"P-表计数 shape={shape} predicate={predicate}: {count}")
        return count

    @staticmethod
    def q_count(poset: Poset, shape: Partition, predicate: str, statistic: str) -> Scalar:
        """Σ q^{stat(U)}，U 取遍满足谓词的 P-表（stat ∈ pinv, inv, records, des, exc）"""
        functions = {
            'pinv': PTableauService.pinv,
            'inv': PTableauService.inv,
            'records': PTableauService.records,
            'des': PTableauService.descents,
            'exc': PTableauService.excedances,
        }
        ErrorHandler.validate_choice(statistic, list(STATISTICS), "统计量")
        total = ZERO
        for U in PTableauService.iter_tableaux(poset, shape, predicate):
            total += q ** functions[statistic](U)
        return total

    # ==================== 下降集 ====================

    @staticmethod
    def descent_set(U: PTableau) -> DescentSet:
        """P-置换的 P-下降集 {i | U_i >_P U_{i+1}}"""
        if len(U.rows) > 1:
            raise ValidationError(f"下降集只对单行 P-表定义，收到形状 {U.shape}")
        word = U.rows[0] if U.rows else ()
        return DescentSet(len(word), tuple(i for i in range(1, len(word)) if U.poset.gt(word[i - 1], word[i])))

    @staticmethod
    def descent_set_census(poset: Poset) -> Dict[DescentSet, int]:
        """ξ^S：P-下降集为 S 的 P-置换个数"""
        census: Dict[DescentSet, int] = Counter()
        for U in PPermutation.all_of(poset):
            census[PTableauService.descent_set(U)] += 1
        return dict(census)

    # ==================== 定向与无下降 P-表的双射 ====================

    @staticmethod
    def _extension_rank(poset: Poset) -> Dict[int, int]:
        """自然标号下即为标号本身的线性扩张次序"""
        order = nx.lexicographical_topological_sort(poset.to_networkx())
        return {x: k for k, x in enumerate(order)}

    @staticmethod
    def orientation_to_tableau(poset: Poset, blocks: Sequence[Sequence[int]], orientations: Sequence[Digraph]) -> PTableau:
        """
        (I_1..I_r) 与各块上 inc(P_{I_j}) 的无环定向 → 无下降 P-表

        每行反复取剩余定向中次序最小的源点放入最左空格

        Raises:
            ValidationError: 定向含有向圈或与块不匹配
        """
        if len(blocks) != len(orientations):
            raise ValidationError("块数与定向个数不一致")
        rank = PTableauService._extension_rank(poset)
        rows = []
        for block, orientation in zip(blocks, orientations):
            block = tuple(sorted(block))
            if orientation.n != len(block):
                raise ValidationError(f"定向的顶点数 {orientation.n} 与块 {block} 不符")
            if not orientation.is_acyclic():
                raise ValidationError("定向含有有向圈")
            label = {k + 1: x for k, x in enumerate(block)}
            arcs = {(label[u], label[v]) for u, v in orientation.arcs}
            remaining = set(block)
            row = []
            while remaining:
                sources = [x for x in remaining if not any((y, x) in arcs for y in remaining)]
                chosen = min(sources, key=lambda x: rank[x])
                row.append(chosen)
                remaining.discard(chosen)
            rows.append(tuple(row))
        return PTableau(poset, tuple(rows))

    @staticmethod
    def tableau_to_orientation(U: PTableau) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Digraph, ...]]:
        """无下降 P-表 → (I_1..I_r) 与各块上的无环定向：同行不可比的 j 在 k 前则 j→k"""
        P = U.poset
        blocks, orientations = [], []
        for row in U.rows:
            block = tuple(sorted(row))
            position = {x: k + 1 for k, x in enumerate(block)}
            arcs = frozenset(
                (position[a], position[b]) for a, b in combinations(row, 2) if P.incomparable(a, b)
            )
            blocks.append(block)
            orientations.append(Digraph(len(block), arcs))
        return tuple(blocks), tuple(orientations)

    # ==================== 等分布 ====================

    @staticmethod
    def equidistribution_check(poset: Poset) -> Dict[str, Dict[int, int]]:
        """pdes / pasc / pexc / paexc 在全部 P-置换上的分布"""
        histograms = {name: Counter() for name in ('pdes', 'pasc', 'pexc', 'paexc')}
        for w in permutations_of(poset.n):
            for name, value in PTableauService.permutation_statistics(poset, w.word).items():
                histograms[name][value] += 1
        return {name: dict(sorted(h.items())) for name, h in histograms.items()}

    @staticmethod
    def sigma_bridge_holds(poset: Poset, w: Permutation) -> bool:
        """pdes(σ(w)) = paexc(w)"""
        flattened = w.sigma_flatten()
        left = PTableauService.permutation_statistics(poset, flattened.word)['pdes']
        right = PTableauService.permutation_statistics(poset, w.word)['paexc']
        return left == right
