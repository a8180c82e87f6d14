"""平面网络服务

路径矩阵、路径与路径族枚举、双射骨架与 z(K)、路径族偏序集 P(π)、π-表计数，
以及 Lindström 定理、骨架分解、钩形/积和式/幂和/Stembridge 矩形公式等内积式解释的验证。
"""
from collections import Counter
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from models.matrix import Matrix
from models.network import NetworkEdge, Path, PathFamily, PiTableau, PlanarNetwork, Skeleton
from models.partition import Partition, partitions_of
from models.permutation import Permutation, avoiders_of
from models.poset import Poset
from models.report import VerificationReport
from models.scalar import ONE, ZERO, Scalar, is_nonnegative
from models.trace import GroupAlgebraElement, TraceBasis
from utils.config_service import ConfigService
from utils.error_handler import ErrorHandler, SizeLimitError, ValidationError
from utils.logger import logger

from .chromatic import ChromaticService
from .immanants import ImmanantService
from .p_tableaux import PTableauService
from .posets_graphs import PosetGraphService
from .sn_algebra import SymmetricGroupService, TraceService

PI_PREDICATES = ('row_closed_left_row_strict', 'cylindrical', 'column_strict_cylindrical')


def staircase_network() -> PlanarNetwork:
    """
    五阶阶梯网络：对角线 s5→a→b→c→d→t1 与四条横向路径交于 a, b, c, d

    路径矩阵各行为 11000 / 11100 / 11110 / 11111 / 11111
    """
    arcs = [
        ('s5', 'a'), ('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 't1'),
        ('s4', 'a'), ('a', 't5'),
        ('s3', 'b'), ('b', 't4'),
        ('s2', 'c'), ('c', 't3'),
        ('s1', 'd'), ('d', 't2'),
    ]
    return PlanarNetwork(
        vertices=('s1', 's2', 's3', 's4', 's5', 'a', 'b', 'c', 'd', 't1', 't2', 't3', 't4', 't5'),
        edges=tuple(NetworkEdge(u, v, ONE) for u, v in arcs),
        sources=('s1', 's2', 's3', 's4', 's5'),
        sinks=('t1', 't2', 't3', 't4', 't5'),
    )


class PlanarNetworkService:
    """平面网络上的路径组合"""

    def __init__(self, config: Optional[ConfigService] = None):
        """
        初始化平面网络服务

        Args:
            config: 配置服务（路径与路径族的枚举上限）
        """
        self.config = config or ConfigService()
        self._path_cache: Dict[PlanarNetwork, Dict[Tuple[int, int], List[Path]]] = {}
        self._family_cache: Dict[PlanarNetwork, List[PathFamily]] = {}

    # ==================== 路径矩阵 ====================

    @staticmethod
    def path_matrix(network: PlanarNetwork) -> Matrix:
        """a_{i,j} = s_i 到 t_j 全部路径权重之和（按拓扑序动态规划）"""
        order = network.topological_order()
        rows = []
        for s in network.sources:
            reach: Dict[str, Scalar] = {s: ONE}
            for u in order:
                value = reach.get(u)
                if not value:
                    continue
                for key in network.out_edges(u):
                    edge = network.edges[key]
                    reach[edge.v] = reach.get(edge.v, ZERO) + value * edge.weight
            rows.append(tuple(reach.get(t, ZERO) for t in network.sinks))
        return Matrix(tuple(rows))

    # ==================== 路径与路径族 ====================

    def _check_vertices(self, network: PlanarNetwork) -> None:
        limit = self.config.get_config_value('max_network_vertices', 40)
        if len(network.vertices) > limit:
            raise SizeLimitError(f"网络有 {len(network.vertices)} 个顶点，超过上限 {limit}", 'max_network_vertices')

    def paths(self, network: PlanarNetwork) -> Dict[Tuple[int, int], List[Path]]:
        """(i, j) ↦ s_i 到 t_j 的全部路径（深度优先）"""
        if network in self._path_cache:
            return self._path_cache[network]
        self._check_vertices(network)
        limit = self.config.get_config_value('max_paths_per_pair', 2000)
        sink_index = {t: j for j, t in enumerate(network.sinks, start=1)}
        result: Dict[Tuple[int, int], List[Path]] = {
            (i, j): [] for i in range(1, network.n + 1) for j in range(1, network.n + 1)
        }

        for i, s in enumerate(network.sources, start=1):
            stack: List[Tuple[str, Tuple[int, ...], Tuple[str, ...], Scalar]] = [(s, (), (s,), ONE)]
            while stack:
                vertex, edges, vertices, weight = stack.pop()
                if vertex in sink_index:
                    bucket = result[(i, sink_index[vertex])]
                    bucket.append(Path(i, sink_index[vertex], edges, vertices, weight))
                    if len(bucket) > limit:
                        raise SizeLimitError(
                            f"s{i} 到 t{sink_index[vertex]} 的路径数超过上限 {limit}", 'max_paths_per_pair'
                        )
                    continue
                for key in reversed(network.out_edges(vertex)):
                    edge = network.edges[key]
                    stack.append((edge.v, edges + (key,), vertices + (edge.v,), weight * edge.weight))
        for bucket in result.values():
            bucket.sort(key=lambda p: p.edges)
        self._path_cache[network] = result
        logger.debug(f"路径枚举完成: {sum(len(b) for b in result.values())} 条")
        return result

    def enumerate_families(self, network: PlanarNetwork, w: Optional[Permutation] = None) -> List[PathFamily]:
        """
        全部路径族（或类型为 w 的路径族）

        Raises:
            SizeLimitError: 路径族总数超过 max_families
        """
        if w is not None:
            ErrorHandler.validate_same_size(w.n, network.n, "类型与网络")
            return [family for family in self._all_families(network) if family.path_type() == w]
        return self._all_families(network)

    def _all_families(self, network: PlanarNetwork) -> List[PathFamily]:
        if network in self._family_cache:
            return self._family_cache[network]
        table = self.paths(network)
        n = network.n
        limit = self.config.get_config_value('max_families', 200000)
        families: List[PathFamily] = []

        def extend(i: int, chosen: Tuple[Path, ...], used: frozenset) -> None:
            if i > n:
                families.append(PathFamily(chosen))
                if len(families) > limit:
                    raise SizeLimitError(f"路径族总数超过上限 {limit}", 'max_families')
                return
            for j in range(1, n + 1):
                if j in used:
                    continue
                for path in table[(i, j)]:
                    extend(i + 1, chosen + (path,), used | {j})

        extend(1, (), frozenset())
        self._family_cache[network] = families
        logger.debug(f"路径族枚举完成: {len(families)} 个")
        return families

    def skeletons(self, network: PlanarNetwork) -> Dict[Skeleton, List[PathFamily]]:
        """K ↦ Π(K)：按边多重集归类全部路径族"""
        grouped: Dict[Tuple[int, ...], List[PathFamily]] = {}
        for family in self._all_families(network):
            grouped.setdefault(family.edge_multiset(), []).append(family)
        result = {}
        for edges, families in sorted(grouped.items()):
            result[Skeleton(edges, families[0].weight)] = families
        return result

    @staticmethod
    def z_of_skeleton(families: Sequence[PathFamily]) -> GroupAlgebraElement:
        """z(K) = Σ_{π∈Π(K)} type(π)"""
        n = families[0].n if families else 0
        return GroupAlgebraElement.sum_of(n, [family.path_type() for family in families])

    @staticmethod
    def poset_of_family(family: PathFamily) -> Poset:
        """
        P(π)：π_i < π_j 当且仅当 i < j 且两条路径不相交

        Raises:
            ValidationError: 关系不传递（网络嵌入不是平面的）
        """
        relations = frozenset(
            (i, j) for i, j in combinations(range(1, family.n + 1), 2) if not family.intersect(i, j)
        )
        poset = Poset(family.n, relations)
        if poset.relations != relations:
            extra = sorted(poset.relations - relations)
            raise ValidationError(f"路径族偏序不传递，缺少关系 {extra}", ["检查网络的平面嵌入与边界顺序"])
        return poset

    # ==================== π-表 ====================

    @staticmethod
    def _iter_fillings(n: int, shape: Partition, cell_ok: Callable, row_ok: Callable) -> Iterator[Tuple[Tuple[int, ...], ...]]:
        rows: List[List[int]] = [[] for _ in shape.parts]
        used = set()

        def fill(r: int, c: int):
            if r == len(shape.parts):
                yield tuple(tuple(row) for row in rows)
                return
            if c == shape.parts[r]:
                if row_ok(rows[r]):
                    yield from fill(r + 1, 0)
                return
            for x in range(1, n + 1):
                if x in used or not cell_ok(rows, r, c, x):
                    continue
                used.add(x)
                rows[r].append(x)
                yield from fill(r, c + 1)
                rows[r].pop()
                used.discard(x)

        yield from fill(0, 0)

    @staticmethod
    def pi_tableaux(family: PathFamily, shape: Partition, predicate: str) -> List[PiTableau]:
        """满足谓词的 π-表（row_closed_left_row_strict / cylindrical / column_strict_cylindrical）"""
        ErrorHandler.validate_choice(predicate, list(PI_PREDICATES), "π-表谓词")
        ErrorHandler.validate_same_size(shape.n, family.n, "形状与路径族")
        sink = {i: path.sink for i, path in enumerate(family.paths, start=1)}
        poset = PlanarNetworkService.poset_of_family(family) if predicate == 'column_strict_cylindrical' else None

        def cell_ok(rows, r, c, x):
            row = rows[r]
            if predicate == 'row_closed_left_row_strict':
                return not row or row[-1] < x
            if c > 0 and sink[row[-1]] != x:
                return False
            if poset is not None and r > 0 and not poset.lt(rows[r - 1][c], x):
                return False
            return True

        def row_ok(row):
            if predicate == 'row_closed_left_row_strict':
                return sorted(sink[x] for x in row) == sorted(row)
            return sink[row[-1]] == row[0]

        return [
            PiTableau(family, rows)
            for rows in PlanarNetworkService._iter_fillings(family.n, shape, cell_ok, row_ok)
        ]

    def pi_tableau_counts(self, network: PlanarNetwork, shape: Partition, predicate: str) -> Scalar:
        """Σ_{π∈𝒫(D)} wgt(π)·#{满足谓词的 π-表}"""
        total = ZERO
        for family in self._all_families(network):
            count = len(self.pi_tableaux(family, shape, predicate))
            if count:
                total += family.weight * count
        return total

    def p_tableau_counts(self, network: PlanarNetwork, shape: Partition, predicate: str) -> Scalar:
        """Σ_{π∈𝒫_e(D)} wgt(π)·#{满足谓词的 P(π)-表}"""
        total = ZERO
        for family in self.enumerate_families(network, Permutation.identity(network.n)):
            count = PTableauService.enumerate(self.poset_of_family(family), shape, predicate)
            if count:
                total += family.weight * count
        return total

    # ==================== 验证 ====================

    def verify_lindstrom(self, network: PlanarNetwork) -> VerificationReport:
        """det(A_{I,J}) = Σ 从 {s_i}_{i∈I} 到 {t_j}_{j∈J} 的保序不交路径族权重之和（含 I = J = [n]）"""
        A = self.path_matrix(network)
        table = self.paths(network)
        n = network.n
        report = VerificationReport('lindstrom', parameters={'n': n})

        def nonintersecting_weight(I: Sequence[int], J: Sequence[int]) -> Scalar:
            total = ZERO

            def extend(k: int, chosen: Tuple[Path, ...], weight: Scalar):
                nonlocal total
                if k == len(I):
                    total += weight
                    return
                for path in table[(I[k], J[k])]:
                    if any(path.meets(other) for other in chosen):
                        continue
                    extend(k + 1, chosen + (path,), weight * path.weight)

            extend(0, (), ONE)
            return total

        report.check('det', ImmanantService.det(A), nonintersecting_weight(tuple(range(1, n + 1)), tuple(range(1, n + 1))))
        for size in range(1, n):
            for I in combinations(range(1, n + 1), size):
                for J in combinations(range(1, n + 1), size):
                    report.check(f"minor I={I} J={J}", ImmanantService.minor(A, I, J), nonintersecting_weight(I, J))
        return report

    def skeleton_decomposition_check(self, network: PlanarNetwork, theta) -> VerificationReport:
        """
        Imm_θ(A) = Σ_K wgt(K)·θ(z(K))，且 θ(z(K)) = Σ_{π∈Π_e(K)} θ(inc(P(π)))
        """
        A = self.path_matrix(network)
        identity = Permutation.identity(network.n)
        report = VerificationReport('skeletons', parameters={'n': network.n})
        total = ZERO
        for skeleton, families in self.skeletons(network).items():
            value = TraceService.evaluate(theta, self.z_of_skeleton(families))
            total += skeleton.weight * value
            via_posets = sum((
                ChromaticService.trace_of_graph(theta, self.poset_of_family(f).incomparability_graph())
                for f in families if f.path_type() == identity
            ), ZERO)
            report.check(f"skeleton {skeleton.key()}", value, via_posets)
        report.check('immanant', ImmanantService.immanant(theta, A), total)
        return report

    def hook_immanant_check(self, network: PlanarNetwork) -> VerificationReport:
        """钩形 χ-内积式 = Σ_{π∈𝒫_e} wgt·#标准钩形 P(π)-表"""
        A = self.path_matrix(network)
        n = network.n
        report = VerificationReport('hook-immanant', parameters={'n': n})
        for k in range(1, n + 1):
            hook = Partition.hook(n, k)
            report.check(
                f"chi^{hook}",
                ImmanantService.basis_immanant(TraceBasis.CHI, hook, A),
                self.p_tableau_counts(network, hook, 'standard'),
            )
        return report

    def permanent_check(self, network: PlanarNetwork) -> VerificationReport:
        """perm(A) = Σ_{π∈𝒫(D)} wgt(π) = 无下降 / 无超越 P(π)-置换的加权计数"""
        A = self.path_matrix(network)
        permanent = ImmanantService.perm(A)
        row = Partition((network.n,))
        report = VerificationReport('permanent', parameters={'n': network.n})
        report.check('family weight', permanent, sum((f.weight for f in self._all_families(network)), ZERO))
        report.check('descent-free', permanent, self.p_tableau_counts(network, row, 'descent_free'))
        report.check('excedance-free', permanent, self.p_tableau_counts(network, row, 'excedance_free'))
        return report

    def eta_immanant_check(self, network: PlanarNetwork, shape: Partition) -> VerificationReport:
        """Imm_{η^λ}(A) 的三种解释"""
        A = self.path_matrix(network)
        value = ImmanantService.basis_immanant(TraceBasis.ETA, shape, A)
        report = VerificationReport('eta-immanant', parameters={'lambda': str(shape)})
        report.check('row-closed left row-strict', value,
                     self.pi_tableau_counts(network, shape, 'row_closed_left_row_strict'))
        report.check('descent-free', value, self.p_tableau_counts(network, shape, 'descent_free'))
        report.check('excedance-free', value, self.p_tableau_counts(network, shape, 'excedance_free'))
        return report

    def power_immanant_check(self, network: PlanarNetwork, shape: Partition) -> VerificationReport:
        """Imm_{ψ^λ}(A) 的三种解释"""
        A = self.path_matrix(network)
        value = ImmanantService.basis_immanant(TraceBasis.PSI, shape, A)
        report = VerificationReport('power-immanant', parameters={'lambda': str(shape)})
        report.check('cycle type sum', value, ImmanantService.power_immanant_by_cycle_type(shape, A))
        report.check('cyclically row-semistrict', value,
                     self.p_tableau_counts(network, shape, 'cyclically_row_semistrict'))
        report.check('record-free row-semistrict', value,
                     self.p_tableau_counts(network, shape, 'record_free_and_row_semistrict'))
        report.check('cylindrical', value, self.pi_tableau_counts(network, shape, 'cylindrical'))
        return report

    def epsilon_immanant_check(self, network: PlanarNetwork, shape: Partition) -> VerificationReport:
        """Imm_{ε^λ}(A) = Σ_{π∈𝒫_e} wgt·#列严格 P(π)-表（形状 λ^tr）"""
        A = self.path_matrix(network)
        report = VerificationReport('epsilon-immanant', parameters={'lambda': str(shape)})
        report.check('column-strict', ImmanantService.basis_immanant(TraceBasis.EPSILON, shape, A),
                     self.p_tableau_counts(network, shape.transpose(), 'column_strict'))
        return report

    def stembridge_rectangular_check(self, network: PlanarNetwork, shape: Partition) -> VerificationReport:
        """
        Imm_{φ^λ}(A) 与 Σ wgt·#列严格柱形 π-表 比较

        λ 为矩形时两者相等；非矩形时只记录两值（预期可能不同）
        """
        A = self.path_matrix(network)
        value = ImmanantService.basis_immanant(TraceBasis.PHI, shape, A)
        count = self.pi_tableau_counts(network, shape, 'column_strict_cylindrical')
        report = VerificationReport('stembridge-rect', parameters={'lambda': str(shape)})
        if shape.is_rectangle():
            report.check(f"phi^{shape}", value, count)
        else:
            report.record_divergence(f"phi^{shape} (non-rectangular)", value, count)
        return report

    # ==================== 随机网络 ====================

    @staticmethod
    def random_network(n: int, rng, pool: Sequence[Scalar], gaps: Optional[int] = None) -> PlanarNetwork:
        """
        随机分层平面网络

        第 i 行顶点 (i, 0..L)，行内有横向边；每个列间隙、每对相邻行至多一条斜边（向上或向下），
        因而嵌入是平面的。源点为第 0 列，汇点为第 L 列。
        """
        ErrorHandler.validate_positive_int(n, "n")
        L = gaps if gaps is not None else rng.randint(1, 3)
        weights = [w for w in pool if is_nonnegative(w)] or [ONE]

        def name(i: int, c: int) -> str:
            if c == 0:
                return f"s{i}"
            if c == L:
                return f"t{i}"
            return f"v{i}_{c}"

        vertices = tuple(name(i, c) for c in range(L + 1) for i in range(1, n + 1))
        edges = []
        for c in range(L):
            for i in range(1, n + 1):
                edges.append(NetworkEdge(name(i, c), name(i, c + 1), weights[rng.randrange(len(weights))]))
            for i in range(1, n):
                choice = rng.choice(('none', 'up', 'down'))
                if choice == 'up':
                    edges.append(NetworkEdge(name(i, c), name(i + 1, c + 1), weights[rng.randrange(len(weights))]))
                elif choice == 'down':
                    edges.append(NetworkEdge(name(i + 1, c), name(i, c + 1), weights[rng.randrange(len(weights))]))
        return PlanarNetwork(
            vertices=vertices,
            edges=tuple(edges),
            sources=tuple(name(i, 0) for i in range(1, n + 1)),
            sinks=tuple(name(i, L) for i in range(1, n + 1)),
        )

    # ==================== 完全非负性蕴含关系 ====================

    def tnn_implication_suite(self, n: int, rng, trials: int = 5) -> VerificationReport:
        """
        蕴含关系的经验检查

        - 随机网络上 χ^λ 的骨架分解且内积式非负
        - 单位区间序 P 上 θ(inc(P)) = θ(C'_{w(P)}(1))，θ 取遍六组基
        - 312-避免置换 w 上 χ^λ(C'_w(1)) ≥ 0
        """
        ErrorHandler.validate_positive_int(n, "n")
        report = VerificationReport('tnn-implications', parameters={'n': n, 'trials': trials})
        pool = ImmanantService.parse_weight_pool(self.config.get_config_value('random_weight_pool', "0,1,2,1/2,3"))
        for trial in range(trials):
            network = self.random_network(n, rng, pool)
            A = self.path_matrix(network)
            for lam in partitions_of(n):
                theta = TraceService.trace_basis(n, TraceBasis.CHI, lam)
                report.merge(self.skeleton_decomposition_check(network, theta), prefix=f"trial {trial} chi^{lam} ")
                value = ImmanantService.immanant(theta, A)
                report.check_true(f"trial {trial} Imm chi^{lam} ≥ 0", is_nonnegative(value), value)
        for poset in PosetGraphService.all_unit_interval_orders(n):
            w = PosetGraphService.uio_to_312_avoiding(poset)
            element = SymmetricGroupService.kl_basis_element_q1(w)
            graph = poset.incomparability_graph()
            for basis in TraceBasis:
                for lam in partitions_of(n):
                    theta = TraceService.trace_basis(n, basis, lam)
                    report.check(f"w={w} {basis.value}^{lam}", TraceService.evaluate(theta, element),
                                 ChromaticService.trace_of_graph(theta, graph))
        for w in avoiders_of(n):
            element = SymmetricGroupService.kl_basis_element_q1(w)
            for lam in partitions_of(n):
                value = TraceService.evaluate(TraceService.trace_basis(n, TraceBasis.CHI, lam), element)
                report.check_true(f"chi^{lam}(C'_{w}) ≥ 0", is_nonnegative(value), value)
        logger.info(f"完全非负性蕴含检查完成: {len(report.cases)} 个用例")
        return report

    @staticmethod
    def family_statistics(families: Sequence[PathFamily]) -> Dict[str, int]:
        """各类型路径族的个数"""
        return dict(sorted(Counter(family.path_type().compact() for family in families).items()))
