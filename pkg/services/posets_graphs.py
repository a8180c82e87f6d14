"""偏序集与图服务

- 不可比图、ngr(P)、诱导子结构
- 按类型计数的真着色（及其 q-版本）
- (a+b)-无关性与单位区间序识别、规范标号、与 312-避免置换的双射
- 无环定向、有序集合划分、有序不交圈覆盖
- 按同构类生成全部偏序集
"""
import math
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import networkx as nx

from models.partition import Composition, Partition
from models.permutation import PATTERN_312, Permutation, avoiders_of
from models.poset import Digraph, Graph, Poset
from models.scalar import ZERO, Scalar, q
from utils.error_handler import DomainError, ValidationError
from utils.logger import logger

OrderedPartition = Tuple[Tuple[int, ...], ...]


class PosetGraphService:
    """偏序集与图的组合运算"""

    # ==================== 基本构造 ====================

    @staticmethod
    def incomparability_graph(poset: Poset) -> Graph:
        return poset.incomparability_graph()

    @staticmethod
    def ngr(poset: Poset) -> Digraph:
        return poset.ngr()

    @staticmethod
    def induced(structure: Union[Poset, Graph], subset: Sequence[int]) -> Union[Poset, Graph]:
        """诱导子偏序集 / 诱导子图，按保序映射重新标号"""
        return structure.induced(subset)

    @staticmethod
    def are_isomorphic(left: Poset, right: Poset) -> bool:
        if left.n != right.n or len(left.relations) != len(right.relations):
            return False
        return nx.is_isomorphic(left.to_networkx(), right.to_networkx())

    # ==================== 着色 ====================

    @staticmethod
    def _colorings_by_class(graph: Graph, alpha: Composition) -> Iterator[int]:
        """
        按颜色类回溯：第 k 种颜色选取大小为 α_k 的独立集

        产出每个真着色的 inv_G 值
        """
        if alpha.n != graph.n:
            raise ValidationError(f"组合 {alpha} 的大小与顶点数 {graph.n} 不一致")
        parts = alpha.parts

        def search(k: int, remaining: Tuple[int, ...], colored: Tuple[int, ...], inv: int):
            if k == len(parts):
                yield inv
                return
            for block in combinations(remaining, parts[k]):
                if any(graph.adjacent(u, v) for u, v in combinations(block, 2)):
                    continue
                gained = sum(1 for v in block for u in graph.neighbors(v) if u in colored and u > v)
                rest = tuple(v for v in remaining if v not in block)
                yield from search(k + 1, rest, colored + block, inv + gained)

        yield from search(0, tuple(graph.vertices), (), 0)

    @staticmethod
    def count_colorings(graph: Graph, alpha: Composition) -> int:
        """类型为 α 的真着色个数（α_i 个顶点着颜色 i）"""
        return sum(1 for _ in PosetGraphService._colorings_by_class(graph, alpha))

    @staticmethod
    def count_colorings_q(graph: Graph, alpha: Composition) -> Scalar:
        """Σ q^{inv_G(κ)}，κ 取遍类型为 α 的真着色"""
        total = ZERO
        for inv in PosetGraphService._colorings_by_class(graph, alpha):
            total += q ** inv
        return total

    # ==================== 无关性与单位区间序 ====================

    @staticmethod
    def chains(poset: Poset, length: int) -> List[Tuple[int, ...]]:
        """全部长为 length 的链 x_1 <_P ... <_P x_length"""
        if length <= 0:
            return [()]
        result = [(x,) for x in poset.elements]
        for _ in range(length - 1):
            result = [chain + (y,) for chain in result for y in poset.elements if poset.lt(chain[-1], y)]
        return result

    @staticmethod
    def is_ab_free(poset: Poset, a: int, b: int) -> bool:
        """是否不含同构于链 a 与链 b 不交并的诱导子偏序集"""
        if a < 1 or b < 1:
            raise ValidationError(f"要求 a, b ≥ 1，收到 a={a}, b={b}")
        chains_b = PosetGraphService.chains(poset, b)
        for first in PosetGraphService.chains(poset, a):
            for second in chains_b:
                if set(first) & set(second):
                    continue
                if all(poset.incomparable(x, y) for x in first for y in second):
                    return False
        return True

    @staticmethod
    def height(poset: Poset) -> int:
        """最长链的长度"""
        if poset.n == 0:
            return 0
        return nx.dag_longest_path_length(poset.to_networkx()) + 1

    @staticmethod
    def width(poset: Poset) -> int:
        """最大反链的大小（不可比图的团数）"""
        if poset.n == 0:
            return 0
        return max(len(clique) for clique in nx.find_cliques(poset.incomparability_graph().to_networkx()))

    @staticmethod
    def is_unit_interval_order(poset: Poset) -> bool:
        """(3+1)-无关且 (2+2)-无关"""
        return PosetGraphService.is_ab_free(poset, 3, 1) and PosetGraphService.is_ab_free(poset, 2, 2)

    @staticmethod
    def _require_uio(poset: Poset) -> None:
        if not PosetGraphService.is_unit_interval_order(poset):
            raise DomainError("偏序集不是单位区间序（含 3+1 或 2+2）", ["只对单位区间序使用此操作"])

    @staticmethod
    def is_canonically_labeled(poset: Poset) -> bool:
        """β(1) ≤ β(2) ≤ ... ≤ β(n)"""
        betas = [poset.beta(y) for y in poset.elements]
        return all(betas[i] <= betas[i + 1] for i in range(len(betas) - 1))

    @staticmethod
    def uio_canonical_labeling(poset: Poset) -> Poset:
        """
        按 β 值递增重新标号（β 相等的元素是孪生元，次序无关）

        Raises:
            DomainError: 不是单位区间序
        """
        PosetGraphService._require_uio(poset)
        order = sorted(poset.elements, key=lambda y: (poset.beta(y), y))
        return poset.relabel({old: new for new, old in enumerate(order, start=1)})

    @staticmethod
    def uio_to_312_avoiding(poset: Poset) -> Permutation:
        """
        w(P)：w_j = max({i | i ≯_P j} \\ {w_1, ..., w_{j-1}})

        非规范标号的输入先做规范标号。

        Raises:
            DomainError: 不是单位区间序
        """
        PosetGraphService._require_uio(poset)
        if not PosetGraphService.is_canonically_labeled(poset):
            logger.debug("输入未按 β 规范标号，先重新标号")
            poset = PosetGraphService.uio_canonical_labeling(poset)
        used = set()
        word = []
        for j in poset.elements:
            candidates = [i for i in poset.elements if not poset.gt(i, j) and i not in used]
            if not candidates:
                raise DomainError(f"贪心规则在 j={j} 处无可选元素")
            choice = max(candidates)
            used.add(choice)
            word.append(choice)
        return Permutation(tuple(word))

    @staticmethod
    def uio_from_312_avoiding(w: Permutation) -> Poset:
        """
        w(P) 的逆：令 m_j = max(w_1..w_j)，则 i >_P j 当且仅当 i > m_j

        Raises:
            ValidationError: w 含 312 模式
        """
        if w.contains(PATTERN_312):
            raise ValidationError(f"置换 {w} 含 312 模式", ["只对 312-避免置换使用此操作"])
        relations = set()
        running_max = 0
        for j in range(1, w.n + 1):
            running_max = max(running_max, w(j))
            relations.update((j, i) for i in range(running_max + 1, w.n + 1))
        return Poset(w.n, frozenset(relations))

    # ==================== 定向 ====================

    @staticmethod
    def acyclic_orientations(graph: Graph) -> List[Digraph]:
        """全部无环定向（即各线性序诱导的不同定向）"""
        seen = set()
        result = []
        for order in permutations(graph.vertices):
            position = {v: k for k, v in enumerate(order)}
            arcs = frozenset((u, v) if position[u] < position[v] else (v, u) for u, v in graph.edges)
            if arcs not in seen:
                seen.add(arcs)
                result.append(Digraph(graph.n, arcs))
        logger.debug(f"图 (n={graph.n}, m={len(graph.edges)}) 共有 {len(result)} 个无环定向")
        return sorted(result, key=lambda d: sorted(d.arcs))

    @staticmethod
    def orientation_statistics(orientation: Digraph) -> Dict[str, int]:
        """sources / sinks / inv"""
        return {
            'sources': len(orientation.sources()),
            'sinks': len(orientation.sinks()),
            'inv': orientation.inv(),
        }

    @staticmethod
    def count_orientations_by_sources(graph: Graph) -> Dict[int, int]:
        """k ↦ 恰有 k 个源点的无环定向个数"""
        counts: Dict[int, int] = {}
        for orientation in PosetGraphService.acyclic_orientations(graph):
            k = len(orientation.sources())
            counts[k] = counts.get(k, 0) + 1
        return counts

    # ==================== 集合划分 ====================

    @staticmethod
    def ordered_set_partitions(n: int, lam: Sequence[int]) -> List[OrderedPartition]:
        """[n] 的类型为 λ 的有序集合划分 (I_1, ..., I_r)，|I_j| = λ_j"""
        parts = tuple(lam.parts if isinstance(lam, (Partition, Composition)) else lam)
        if sum(parts) != n:
            raise ValidationError(f"类型 {parts} 的大小与 n={n} 不一致")

        def split(remaining: Tuple[int, ...], k: int) -> Iterator[OrderedPartition]:
            if k == len(parts):
                yield ()
                return
            for block in combinations(remaining, parts[k]):
                rest = tuple(v for v in remaining if v not in block)
                for tail in split(rest, k + 1):
                    yield (block,) + tail

        return list(split(tuple(range(1, n + 1)), 0))

    @staticmethod
    def ordered_induced_subgraph_partitions(graph: Graph, lam: Sequence[int]) -> List[Tuple[OrderedPartition, Tuple[Graph, ...]]]:
        """有序诱导子图划分：每个有序集合划分连同各块的诱导子图"""
        return [
            (blocks, tuple(graph.induced(block) for block in blocks))
            for blocks in PosetGraphService.ordered_set_partitions(graph.n, lam)
        ]

    # ==================== 圈覆盖 ====================

    @staticmethod
    def _cycles_on(digraph: Digraph, vertices: Tuple[int, ...]) -> int:
        """以 vertices 为顶点集的有向圈个数（圈从最小顶点起读）"""
        first, rest = vertices[0], vertices[1:]
        if not rest:
            return 1 if digraph.has_arc(first, first) else 0
        count = 0
        for order in permutations(rest):
            cycle = (first,) + order
            if all(digraph.has_arc(cycle[k], cycle[(k + 1) % len(cycle)]) for k in range(len(cycle))):
                count += 1
        return count

    @staticmethod
    def ordered_disjoint_cycle_covers(digraph: Digraph, lam: Partition, rooted: bool = False) -> int:
        """
        有序不交圈覆盖 (H_1, ..., H_r) 的个数，H_j 是长为 λ_j 的有向圈（自环为长 1 的圈）

        rooted=True 时每个圈再选定起点（结果乘以 Π λ_j）
        """
        if lam.n != digraph.n:
            raise ValidationError(f"分拆 {lam} 的大小与顶点数 {digraph.n} 不一致")
        total = 0
        for blocks in PosetGraphService.ordered_set_partitions(digraph.n, lam):
            product = 1
            for block in blocks:
                product *= PosetGraphService._cycles_on(digraph, block)
                if not product:
                    break
            total += product
        return total * math.prod(lam.parts) if rooted else total

    @staticmethod
    def disjoint_cycle_cover_sets(digraph: Digraph, lam: Partition) -> int:
        """不计顺序的不交圈覆盖个数"""
        ordered = PosetGraphService.ordered_disjoint_cycle_covers(digraph, lam)
        return ordered // math.prod(math.factorial(m) for m in lam.multiplicities().values())

    # ==================== 偏序集生成 ====================

    @staticmethod
    def _order_ideals(poset: Poset) -> List[Tuple[int, ...]]:
        ideals = []
        for size in range(poset.n + 1):
            for subset in combinations(poset.elements, size):
                chosen = set(subset)
                if all(x in chosen for y in subset for x in poset.elements if poset.lt(x, y)):
                    ideals.append(subset)
        return ideals

    @staticmethod
    @lru_cache(maxsize=None)
    def all_posets(n: int) -> Tuple[Poset, ...]:
        """
        n 元偏序集的全部同构类（自然标号）

        由 n-1 元的同构类添加一个以某个序理想为下集的新极大元得到，再按同构去重
        """
        if n < 0:
            raise ValidationError(f"要求 n ≥ 0，收到 {n}")
        if n == 0:
            return (Poset(0),)
        buckets: Dict[str, List[Poset]] = {}
        result: List[Poset] = []
        for smaller in PosetGraphService.all_posets(n - 1):
            for ideal in PosetGraphService._order_ideals(smaller):
                candidate = Poset(n, smaller.relations | frozenset((x, n) for x in ideal))
                graph = candidate.to_networkx()
                fingerprint = f"{len(candidate.relations)}:{nx.weisfeiler_lehman_graph_hash(graph)}"
                bucket = buckets.setdefault(fingerprint, [])
                if any(nx.is_isomorphic(graph, other.to_networkx()) for other in bucket):
                    continue
                bucket.append(candidate)
                result.append(candidate)
        logger.debug(f"{n} 元偏序集共 {len(result)} 个同构类")
        return tuple(result)

    @staticmethod
    @lru_cache(maxsize=None)
    def all_unit_interval_orders(n: int) -> Tuple[Poset, ...]:
        """全部 n 元单位区间序（规范标号，经 312-避免置换生成）"""
        return tuple(PosetGraphService.uio_from_312_avoiding(w) for w in avoiders_of(n))

    @staticmethod
    def random_poset(n: int, rng, density: float = 0.4) -> Poset:
        """随机自然标号偏序集：每对 i < j 以概率 density 加入关系后取传递闭包"""
        relations = frozenset(
            (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < density
        )
        return Poset(n, relations)

    @staticmethod
    def total_proper_colorings(graph: Graph, k: int) -> int:
        """用不超过 k 种颜色的真着色总数（色多项式在 k 处的值，按类型计数求和）"""
        total = 0
        for size in range(1, min(k, graph.n) + 1):
            for alpha_set in _compositions_with_parts(graph.n, size):
                total += PosetGraphService.count_colorings(graph, alpha_set) * math.comb(k, size)
        return total if graph.n else 1


def _compositions_with_parts(n: int, parts: int) -> Iterator[Composition]:
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield Composition(tuple(bounds[i + 1] - bounds[i] for i in range(parts)))
