"""色对称函数服务

X_G 与 X_{G,q} 的计算、六组基下的展开、迹求值 θ(G)，
以及由这些展开推出的各类恒等式检查。
"""
import threading
from itertools import combinations
from typing import Dict, List, Tuple, Union

from models.partition import Composition, DescentSet, Partition, compositions_of, partitions_of
from models.poset import Graph, Poset
from models.report import VerificationReport
from models.scalar import ONE, ZERO, Scalar, at_q_one, is_nonnegative, q
from models.symfunc import BasisTag, QSymFunc, QSymKind, SymFunc
from models.trace import Trace, TraceBasis
from utils.error_handler import DomainError, ErrorHandler, SymmetryError
from utils.logger import logger

from .p_tableaux import PTableauService
from .posets_graphs import PosetGraphService
from .sn_algebra import SymmetricGroupService, TraceService
from .symmetric_functions import SymmetricFunctionService

# θ^λ(G) 读自 X_G 在哪组基下的展开
_TRACE_READING = {
    TraceBasis.EPSILON: BasisTag.MONOMIAL,
    TraceBasis.ETA: BasisTag.FORGOTTEN,
    TraceBasis.PSI: BasisTag.POWER,
    TraceBasis.CHI: BasisTag.SCHUR,
    TraceBasis.PHI: BasisTag.ELEMENTARY,
    TraceBasis.GAMMA: BasisTag.HOMOGENEOUS,
}


class ChromaticService:
    """色对称函数及其迹（按图缓存）"""

    _lock = threading.RLock()
    _symfunc_cache: Dict[Graph, SymFunc] = {}
    _qsym_cache: Dict[Graph, QSymFunc] = {}
    _expansion_cache: Dict[Tuple[Graph, BasisTag, bool], SymFunc] = {}

    @classmethod
    def clear_cache(cls) -> None:
        with cls._lock:
            cls._symfunc_cache.clear()
            cls._qsym_cache.clear()
            cls._expansion_cache.clear()

    # ==================== X_G 与 X_{G,q} ====================

    @classmethod
    def chromatic_symfunc(cls, graph: Graph) -> SymFunc:
        """X_G = Σ_λ c(G,λ)·m_λ"""
        with cls._lock:
            if graph not in cls._symfunc_cache:
                coeffs = {
                    lam: ONE * PosetGraphService.count_colorings(graph, Composition(lam.parts))
                    for lam in partitions_of(graph.n)
                }
                cls._symfunc_cache[graph] = SymFunc(graph.n, BasisTag.MONOMIAL, coeffs)
                logger.debug(f"X_G 已缓存 (n={graph.n}, 边数={len(graph.edges)})")
            return cls._symfunc_cache[graph]

    @classmethod
    def chromatic_qsym(cls, graph: Graph) -> QSymFunc:
        """X_{G,q} = Σ_α (Σ_κ q^{inv(κ)})·M_α"""
        with cls._lock:
            if graph not in cls._qsym_cache:
                coeffs = {
                    alpha: PosetGraphService.count_colorings_q(graph, alpha) for alpha in compositions_of(graph.n)
                }
                cls._qsym_cache[graph] = QSymFunc(graph.n, QSymKind.MONOMIAL, coeffs)
            return cls._qsym_cache[graph]

    @staticmethod
    def symmetrize_if_symmetric(g: QSymFunc) -> SymFunc:
        """
        对称的拟对称函数读回 m-展开

        Raises:
            SymmetryError: 某个重排类上系数不为常数，附带见证组合对
        """
        witness = SymmetricFunctionService.rearrangement_witness(g)
        if witness is not None:
            left, right = witness
            raise SymmetryError(
                f"拟对称函数不对称: M_{left} 与 M_{right} 的系数不同",
                witness=(left, right),
            )
        return SymmetricFunctionService.qsym_to_symmetric(g)

    @classmethod
    def chromatic_symfunc_q(cls, graph: Graph) -> SymFunc:
        """
        对称时的 X_{G,q}（系数为 q 的多项式）

        Raises:
            SymmetryError: X_{G,q} 不对称
        """
        return cls.symmetrize_if_symmetric(cls.chromatic_qsym(graph))

    @staticmethod
    def require_canonical_uio(poset: Poset) -> None:
        """
        q-对象只接受按 β 规范标号的单位区间序

        Raises:
            DomainError: 不是单位区间序或未规范标号
        """
        if not PosetGraphService.is_unit_interval_order(poset):
            raise DomainError("q-展开要求单位区间序", ["检查输入是否含 3+1 或 2+2"])
        if not PosetGraphService.is_canonically_labeled(poset):
            raise DomainError(
                "q-展开要求按 β 规范标号的单位区间序",
                ["先调用 uio_canonical_labeling 重新标号"],
            )

    # ==================== 展开 ====================

    @classmethod
    def expansion(cls, graph: Graph, basis: Union[str, BasisTag], use_q: bool = False) -> SymFunc:
        """X_G（或 X_{G,q}）在给定基下的展开"""
        tag = BasisTag.parse(basis)
        key = (graph, tag, use_q)
        with cls._lock:
            if key not in cls._expansion_cache:
                source = cls.chromatic_symfunc_q(graph) if use_q else cls.chromatic_symfunc(graph)
                cls._expansion_cache[key] = SymmetricFunctionService.convert(source, tag)
            return cls._expansion_cache[key]

    @classmethod
    def expansions(cls, graph: Graph, use_q: bool = False) -> Dict[BasisTag, SymFunc]:
        return {tag: cls.expansion(graph, tag, use_q) for tag in BasisTag}

    @classmethod
    def trace_value(cls, graph: Graph, basis: Union[str, TraceBasis], lam: Partition, use_q: bool = False) -> Scalar:
        """
        θ^λ(G)（或 θ_q^λ(G)），直接从 X_G 的展开读出

        ε: [m_λ]，η: [f_λ]，ψ: (-1)^{n-ℓ(λ)} z_λ [p_λ]，χ: [s_{λ^tr}]，φ: [e_λ]，γ: [h_λ]
        """
        trace_basis = TraceBasis.parse(basis)
        ErrorHandler.validate_same_size(lam.n, graph.n, "分拆与图")
        if graph.n == 0:
            return ONE
        expanded = cls.expansion(graph, _TRACE_READING[trace_basis], use_q)
        if trace_basis == TraceBasis.CHI:
            return expanded.coefficient(lam.transpose())
        if trace_basis == TraceBasis.PSI:
            return expanded.coefficient(lam) * (lam.sign() * lam.z())
        return expanded.coefficient(lam)

    @classmethod
    def trace_table(cls, graph: Graph, basis: Union[str, TraceBasis], use_q: bool = False) -> Dict[Partition, Scalar]:
        return {lam: cls.trace_value(graph, basis, lam, use_q) for lam in partitions_of(graph.n)}

    @classmethod
    def poset_trace_table(cls, poset: Poset, basis: Union[str, TraceBasis], use_q: bool = False) -> Dict[Partition, Scalar]:
        """θ^λ(inc(P))；q-版本要求规范标号的单位区间序"""
        if use_q:
            cls.require_canonical_uio(poset)
        return cls.trace_table(poset.incomparability_graph(), basis, use_q)

    @staticmethod
    def trace_of_graph(theta: Trace, graph: Graph) -> Scalar:
        """
        θ(G) = Σ_λ a_λ·c(G,λ)，其中 θ = Σ_λ a_λ ε^λ

        a_λ 即 Frob(θ) 的 e-系数
        """
        ErrorHandler.validate_same_size(theta.n, graph.n, "迹与图")
        if graph.n == 0:
            return theta.values.get(Partition(()), ZERO)
        in_e = SymmetricFunctionService.convert(TraceService.frobenius(theta), BasisTag.ELEMENTARY)
        X = ChromaticService.chromatic_symfunc(graph)
        return sum((a * X.coefficient(lam) for lam, a in in_e.items()), ZERO)

    @staticmethod
    def trace_of_graph_by_realization(theta: Trace, graph: Graph) -> Scalar:
        """θ(g)，g 为 Y(g) = X_G 的任一实现"""
        g = TraceService.realize_symfunc(ChromaticService.chromatic_symfunc(graph))
        return TraceService.evaluate(theta, g)

    @staticmethod
    def induced_product(theta1: Trace, theta2: Trace) -> Trace:
        """θ1 ⊗ θ2 诱导到 S_n：对应对称函数之积"""
        product = SymmetricFunctionService.multiply(TraceService.frobenius(theta1), TraceService.frobenius(theta2))
        return TraceService.frobenius_inverse(product)

    @staticmethod
    def trace_factorization(theta1: Trace, theta2: Trace, graph: Graph) -> Scalar:
        """Σ_{|J|=k} θ1(G_J)·θ2(G_J̄)"""
        ErrorHandler.validate_same_size(theta1.n + theta2.n, graph.n, "迹与图")
        total = ZERO
        for J in combinations(graph.vertices, theta1.n):
            rest = [v for v in graph.vertices if v not in J]
            total += ChromaticService.trace_of_graph(theta1, graph.induced(J)) * \
                ChromaticService.trace_of_graph(theta2, graph.induced(rest))
        return total

    # ==================== 基本拟对称展开 ====================

    @staticmethod
    def fundamental_coefficients(poset: Poset) -> Dict[DescentSet, Scalar]:
        """
        ξ^S(inc(P))：P-下降集为 S 的 P-置换个数

        同时与 ωX 的 F_S 系数、X 的 F_{[n-1]∖S} 系数比对

        Raises:
            DomainError: 三种算法结果不一致
        """
        census = PTableauService.descent_set_census(poset)
        X = ChromaticService.chromatic_symfunc(poset.incomparability_graph())
        via_omega = SymmetricFunctionService.to_fundamental(SymmetricFunctionService.omega(X))
        direct = SymmetricFunctionService.to_fundamental(X)
        result = {}
        for S, count in census.items():
            result[S] = ONE * count
        for S in set(result) | set(via_omega.coeffs):
            expected = result.get(S, ZERO)
            if via_omega.coefficient(S) != expected or direct.coefficient(S.complement()) != expected:
                raise DomainError(f"基本拟对称系数在 S={S} 处不一致")
        return dict(sorted(result.items(), key=lambda item: (len(item[0].elements), item[0].elements)))

    # ==================== 迹恒等式 ====================

    @staticmethod
    def _row_trace(graph: Graph, basis: TraceBasis) -> Scalar:
        """θ^{(m)}(G)，m = |G|；空图取 1"""
        if graph.n == 0:
            return ONE
        return ChromaticService.trace_value(graph, basis, Partition((graph.n,)))

    @staticmethod
    def verify_trace_identities(graph: Graph) -> VerificationReport:
        """
        n η^n(G) = Σ_J ψ^{|J|}(G_J) η^{n-|J|}(G_J̄)，
        n ε^n(G) = Σ_J (-1)^{|J|-1} ψ^{|J|}(G_J) ε^{n-|J|}(G_J̄)，
        Σ_J (-1)^{|J|} ε^{|J|}(G_J) η^{n-|J|}(G_J̄) = 0
        """
        n = graph.n
        report = VerificationReport('trace-identities', parameters={'graph': graph.to_dict()})
        eta_sum = epsilon_sum = alternating = ZERO
        for size in range(n + 1):
            for J in combinations(graph.vertices, size):
                inside = graph.induced(J)
                outside = graph.induced([v for v in graph.vertices if v not in J])
                sign = -1 if size % 2 else 1
                alternating += sign * ChromaticService._row_trace(inside, TraceBasis.EPSILON) * \
                    ChromaticService._row_trace(outside, TraceBasis.ETA)
                if size == 0:
                    continue
                psi = ChromaticService._row_trace(inside, TraceBasis.PSI)
                eta_sum += psi * ChromaticService._row_trace(outside, TraceBasis.ETA)
                epsilon_sum += -sign * psi * ChromaticService._row_trace(outside, TraceBasis.EPSILON)
        if n == 0:
            return report
        report.check('n·eta^n', n * ChromaticService._row_trace(graph, TraceBasis.ETA), eta_sum)
        report.check('n·epsilon^n', n * ChromaticService._row_trace(graph, TraceBasis.EPSILON), epsilon_sum)
        report.check('alternating epsilon/eta', ZERO, alternating)
        return report

    # ==================== 单项式迹 ====================

    @staticmethod
    def k_source_check(graph: Graph) -> VerificationReport:
        """Σ_{ℓ(λ)=k} φ^λ(G) = 恰有 k 个源点的无环定向个数"""
        report = VerificationReport('k-sources', parameters={'graph': graph.to_dict()})
        phi = ChromaticService.trace_table(graph, TraceBasis.PHI)
        by_sources = PosetGraphService.count_orientations_by_sources(graph)
        for k in range(1, graph.n + 1):
            total = sum((v for lam, v in phi.items() if lam.ell == k), ZERO)
            report.check(f"k={k}", ONE * by_sources.get(k, 0), total)
        return report

    @staticmethod
    def k_record_check(poset: Poset) -> VerificationReport:
        """Σ_{ℓ(λ)=k} φ^λ(inc(P)) = 恰有 k 个 P-纪录的无下降 P-置换个数"""
        report = VerificationReport('k-records', parameters={'poset': poset.to_dict()})
        phi = ChromaticService.poset_trace_table(poset, TraceBasis.PHI)
        counts: Dict[int, int] = {}
        for U in PTableauService.iter_tableaux(poset, Partition((poset.n,)), 'descent_free'):
            k = PTableauService.records(U)
            counts[k] = counts.get(k, 0) + 1
        for k in range(1, poset.n + 1):
            total = sum((v for lam, v in phi.items() if lam.ell == k), ZERO)
            report.check(f"k={k}", ONE * counts.get(k, 0), total)
        return report

    @staticmethod
    def _refines_components(lam: Partition, sizes: List[int]) -> bool:
        """λ 的各部分能否分组使每组之和恰为一个连通分支的大小"""
        parts = list(lam.parts)

        def assign(k: int, remaining: Tuple[int, ...]) -> bool:
            if k == len(parts):
                return all(r == 0 for r in remaining)
            tried = set()
            for idx, r in enumerate(remaining):
                if r >= parts[k] and r not in tried:
                    tried.add(r)
                    if assign(k + 1, remaining[:idx] + (r - parts[k],) + remaining[idx + 1:]):
                        return True
            return False

        return assign(0, tuple(sizes))

    @staticmethod
    def monomial_special_cases(poset: Poset) -> VerificationReport:
        """
        已知 φ^λ(inc(P)) ≥ 0 的特殊情形逐一核对

        3-无关的 P；(3+1)-无关且 λ 为矩形；(3+1)-无关且 λ_1 ≤ 2；
        形如 i <_P j ⟺ i+k < j（k = 1, 2, n-3）的 P；
        单位区间序含 (λ_1+1)-反链或 inc(P) 分支大小与 λ 不相容时 φ^λ = 0
        """
        report = VerificationReport('monomial-traces', parameters={'poset': poset.to_dict()})
        phi = ChromaticService.poset_trace_table(poset, TraceBasis.PHI)
        n = poset.n
        three_free = PosetGraphService.height(poset) <= 2
        claw_free = PosetGraphService.is_ab_free(poset, 3, 1)
        uio = claw_free and PosetGraphService.is_ab_free(poset, 2, 2)
        named = any(
            poset == Poset.natural_unit_interval(n, k) for k in {1, 2, n - 3} if k >= 0
        )
        width = PosetGraphService.width(poset)
        sizes = [len(c) for c in poset.incomparability_graph().components()]
        for lam, value in phi.items():
            if three_free:
                report.check_true(f"3-free λ={lam}", is_nonnegative(value), value)
            if claw_free and lam.is_rectangle():
                report.check_true(f"rectangle λ={lam}", is_nonnegative(value), value)
            if claw_free and lam.parts and lam.parts[0] <= 2:
                report.check_true(f"λ1≤2 λ={lam}", is_nonnegative(value), value)
            if named:
                report.check_true(f"named poset λ={lam}", is_nonnegative(value), value)
            if uio and width >= lam.parts[0] + 1:
                report.check(f"antichain vanishing λ={lam}", ZERO, value)
            if uio and not ChromaticService._refines_components(lam, sizes):
                report.check(f"component vanishing λ={lam}", ZERO, value)
        return report

    # ==================== 单位区间序与 q-求和 ====================

    @staticmethod
    def uio_kl_consistency(poset: Poset) -> bool:
        """X_{inc(P)} = Y(C'_{w(P)}(1))"""
        w = PosetGraphService.uio_to_312_avoiding(poset)
        left = ChromaticService.chromatic_symfunc(poset.incomparability_graph())
        right = TraceService.y_of(SymmetricGroupService.kl_basis_element_q1(w))
        return left == right

    @staticmethod
    def q_trace_sums(poset: Poset) -> Dict[str, Dict[str, Scalar]]:
        """
        η_q^n(inc(P)) = Σ_λ φ_q^λ 的四种算法及按 k 细化的三种算法

        (a) X_{inc(P),q} 的 e-展开；(b) Σ_O q^{inv(O)}；(c) Σ_U q^{pinv(U)}，U 无下降；
        (d) Σ_{v≤w(P)} q^{ℓ(v)} 以及 Σ_U q^{inv(U)}，U 无超越

        Raises:
            DomainError: 不是规范标号的单位区间序
        """
        ChromaticService.require_canonical_uio(poset)
        n = poset.n
        graph = poset.incomparability_graph()
        phi_q = ChromaticService.trace_table(graph, TraceBasis.PHI, use_q=True)
        w = PosetGraphService.uio_to_312_avoiding(poset)
        row = Partition((n,))

        totals = {
            'monomial': sum(phi_q.values(), ZERO),
            'orientations': sum((q ** O.inv() for O in PosetGraphService.acyclic_orientations(graph)), ZERO),
            'descent_free': PTableauService.q_count(poset, row, 'descent_free', 'pinv'),
            'bruhat': sum((q ** v.length() for v in SymmetricGroupService.bruhat_lower_interval(w)), ZERO),
            'excedance_free': PTableauService.q_count(poset, row, 'excedance_free', 'inv'),
        }

        refined: Dict[str, Dict[int, Scalar]] = {'monomial': {}, 'orientations': {}, 'descent_free': {}}
        for k in range(1, n + 1):
            refined['monomial'][k] = sum((v for lam, v in phi_q.items() if lam.ell == k), ZERO)
            refined['orientations'][k] = ZERO
            refined['descent_free'][k] = ZERO
        for O in PosetGraphService.acyclic_orientations(graph):
            refined['orientations'][len(O.sources())] += q ** O.inv()
        for U in PTableauService.iter_tableaux(poset, row, 'descent_free'):
            refined['descent_free'][PTableauService.records(U)] += q ** PTableauService.pinv(U)
        logger.debug(f"q-求和完成 w(P)={w}")
        return {'totals': totals, 'by_k': refined}

    @staticmethod
    def bruhat_excedance_check(poset: Poset) -> bool:
        """{v | exc_P(v) = 0} = {v | v ≤ w(P)}"""
        ChromaticService.require_canonical_uio(poset)
        w = PosetGraphService.uio_to_312_avoiding(poset)
        below = {v.word for v in SymmetricGroupService.bruhat_lower_interval(w)}
        excedance_free = {
            U.rows[0] for U in PTableauService.iter_tableaux(poset, Partition((poset.n,)), 'excedance_free')
        } if poset.n else {()}
        return below == excedance_free

    @staticmethod
    def at_one(values: Dict[Partition, Scalar]) -> Dict[Partition, Scalar]:
        """q-表在 q=1 处的取值"""
        return {lam: at_q_one(v) for lam, v in values.items()}

