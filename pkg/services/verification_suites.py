"""验证套件服务

`verify` 子命令背后的套件注册表。每个套件穷举（小规模全部对象）或随机（固定种子）地
核对一组恒等式，返回 VerificationReport。
"""
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from models.matrix import Matrix
from models.partition import Composition, Partition, partitions_of
from models.permutation import Permutation, avoiders_of, permutations_of
from models.poset import Graph, Poset
from models.report import VerificationReport
from models.scalar import ONE, ZERO, Scalar, is_nonnegative, rational
from models.symfunc import BasisTag, SymFunc
from models.trace import TraceBasis
from utils.config_service import ConfigService
from utils.error_handler import DomainError, ErrorHandler
from utils.logger import logger

from .chromatic import ChromaticService
from .immanants import ImmanantService
from .p_tableaux import PTableauService
from .planar_network import PlanarNetworkService, staircase_network
from .posets_graphs import PosetGraphService
from .sn_algebra import SymmetricGroupService, TraceService
from .symmetric_functions import SymmetricFunctionService

# 阶梯网络的路径矩阵
STAIRCASE_MATRIX = (
    (1, 1, 0, 0, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1),
)

# 阶梯网络（及其唯一覆盖路径族的偏序集）上的 φ^λ 取值
STAIRCASE_PHI = {
    '5': 5, '4,1': 3, '3,2': 7, '2,2,1': 1, '3,1,1': 0, '2,1,1,1': 0, '1,1,1,1,1': 0,
}

COUNTEREXAMPLE_RELATIONS = ((1, 3), (3, 5), (1, 4), (2, 4), (2, 5))


def counterexample_poset() -> Poset:
    """五元偏序集 1<3<5，1<4，2<4，2<5；inc(P) 为路径 1-2-3-4-5"""
    return Poset.from_relations(5, COUNTEREXAMPLE_RELATIONS)


@dataclass
class SuiteParameters:
    """
    套件运行参数

    Attributes:
        n: 规模上限
        seed: 随机种子
        trials: 随机试验次数
        known_counterexample: 是否附带复现已知反例
    """
    n: int
    seed: int
    trials: int
    known_counterexample: bool = False
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self):
        self.rng = random.Random(self.seed)

    def to_dict(self) -> Dict[str, int]:
        data = {'n': self.n, 'seed': self.seed, 'trials': self.trials}
        if self.known_counterexample:
            data['known_counterexample'] = True
        return data


@dataclass(frozen=True)
class SuiteEntry:
    """注册表条目：处理方法名、规模类别（poset / uio / matrix / algebra）、说明"""
    handler: str
    kind: str
    description: str


SUITES: Dict[str, SuiteEntry] = {
    'frobenius': SuiteEntry('_suite_frobenius', 'algebra', "迹基两条路线、Frobenius 往返、特征标正交性"),
    'yexpand': SuiteEntry('_suite_yexpand', 'algebra', "Y(g) 六种展开与 ω 像、realize 往返、基本拟对称展开"),
    'kostka': SuiteEntry('_suite_kostka', 'algebra', "K·K⁻¹ = I、带状图展开、换基往返、ω、c_μ"),
    'uio-bijection': SuiteEntry('_suite_uio_bijection', 'uio', "单位区间序与 312-避免置换的双射及 X = Y(C')"),
    'eta-interpretations': SuiteEntry('_suite_eta', 'poset', "η^λ(inc(P)) 的三种组合解释"),
    'psi-interpretations': SuiteEntry('_suite_psi', 'poset', "ψ^λ(inc(P)) 的四种组合解释与非负性"),
    'hook-gasharov': SuiteEntry('_suite_hook_gasharov', 'poset', "钩形与 (3+1)-无关情形的标准 P-表计数"),
    'equidistribution': SuiteEntry('_suite_equidistribution', 'poset', "pdes/pasc/pexc/paexc 等分布与 σ 桥"),
    'bruhat-excedance': SuiteEntry('_suite_bruhat_excedance', 'uio', "无超越置换集合 = Bruhat 下区间"),
    'lindstrom': SuiteEntry('_suite_lindstrom', 'matrix', "Lindström 定理（全部子式）"),
    'lmw': SuiteEntry('_suite_lmw', 'matrix', "ε/η 内积式的主子式展开"),
    'muir': SuiteEntry('_suite_muir', 'matrix', "Muir 恒等式"),
    'factorization': SuiteEntry('_suite_factorization', 'matrix', "诱导迹内积式的分解"),
    'skeletons': SuiteEntry('_suite_skeletons', 'matrix', "骨架分解与 ε-骨架解释"),
    'hook-immanant': SuiteEntry('_suite_hook_immanant', 'matrix', "钩形 χ-内积式与 η/ε-内积式的解释"),
    'permanent': SuiteEntry('_suite_permanent', 'matrix', "积和式的三种解释"),
    'power-immanant': SuiteEntry('_suite_power_immanant', 'matrix', "ψ-内积式的解释"),
    'stembridge-rect': SuiteEntry('_suite_stembridge', 'matrix', "矩形 φ-内积式的柱形 π-表公式"),
    'q-sums': SuiteEntry('_suite_q_sums', 'uio', "Σ_λ φ_q^λ 的四种算法与按 k 细化"),
    'trace-identities': SuiteEntry('_suite_trace_identities', 'poset', "ψ/η/ε 的图恒等式与 k-源点"),
    'monomial-traces': SuiteEntry('_suite_monomial_traces', 'poset', "φ^λ(inc(P)) 的特殊情形与 k-纪录"),
    'tnn-implications': SuiteEntry('_suite_tnn_implications', 'matrix', "完全非负性蕴含关系的经验检查"),
}


class VerificationSuiteService:
    """验证套件注册表与执行"""

    def __init__(self, config: Optional[ConfigService] = None):
        """
        初始化验证套件服务

        Args:
            config: 配置服务（默认规模、种子、试验次数与规模保护）
        """
        self.config = config or ConfigService()
        self.networks = PlanarNetworkService(self.config)
        logger.info("验证套件服务初始化完成")

    @staticmethod
    def suite_names() -> List[str]:
        return list(SUITES)

    def default_n(self, kind: str) -> int:
        if kind == 'uio':
            return self.config.get_config_value('uio_suite_max_n', 6)
        if kind == 'matrix':
            return min(4, self.config.get_config_value('max_immanant_size', 5))
        return self.config.get_config_value('suite_max_n', 5)

    def _guard(self, name: str, n: int, force: bool) -> None:
        kind = SUITES[name].kind
        if kind == 'matrix':
            limit = self.config.get_config_value('max_immanant_size', 5)
            ErrorHandler.validate_size(n, limit, "矩阵阶数", 'max_immanant_size', force)
        else:
            limit = self.config.get_config_value('max_poset_size', 8)
            ErrorHandler.validate_size(n, limit, "偏序集", 'max_poset_size', force)

    def run(self, name: str, n: Optional[int] = None, seed: Optional[int] = None,
            trials: Optional[int] = None, known_counterexample: bool = False,
            force: bool = False) -> VerificationReport:
        """
        运行一个套件

        Args:
            name: 套件名
            n: 规模上限（缺省按套件类别取配置）
            seed: 随机种子（缺省取 default_seed）
            trials: 随机试验次数（缺省取 default_trials）
            known_counterexample: 附带复现已知反例
            force: 跳过规模保护

        Raises:
            ValidationError: 未知套件或参数不合法
            SizeLimitError: 超过规模保护
        """
        ErrorHandler.validate_choice(name, self.suite_names(), "套件")
        entry = SUITES[name]
        n = self.default_n(entry.kind) if n is None else n
        ErrorHandler.validate_positive_int(n, "n")
        self._guard(name, n, force)
        seed = self.config.get_config_value('default_seed', 7) if seed is None else seed
        trials = self.config.get_config_value('default_trials', 100) if trials is None else trials
        ErrorHandler.validate_nonnegative_int(seed, "seed")
        ErrorHandler.validate_positive_int(trials, "trials")

        params = SuiteParameters(n, seed, trials, known_counterexample)
        logger.info(f"运行套件 {name}: n={n} seed={seed} trials={trials}")
        handler: Callable[[SuiteParameters], VerificationReport] = getattr(self, entry.handler)
        report = handler(params)
        report.suite = name
        report.parameters = params.to_dict()
        logger.info(f"套件 {name} 完成: {len(report.cases)} 个用例，失败 {len(report.failures)} 个")
        return report

    # ==================== 代数基础 ====================

    def _suite_frobenius(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('frobenius')
        for m in range(1, params.n + 1):
            index = partitions_of(m)
            for basis in TraceBasis:
                for lam in index:
                    direct = TraceService.trace_basis(m, basis, lam)
                    via = TraceService.trace_basis_via_frobenius(m, basis, lam)
                    report.check(f"n={m} {basis.value}^{lam} two routes", direct.to_dict(), via.to_dict())
            for lam in index:
                report.check(f"n={m} psi^{lam} direct", TraceService.psi_direct(lam).to_dict(),
                             TraceService.trace_basis(m, TraceBasis.PSI, lam).to_dict())
                for mu in index:
                    report.check(f"n={m} chi^{mu}({lam}) Murnaghan-Nakayama",
                                 ONE * SymmetricFunctionService.murnaghan_nakayama(mu, lam),
                                 SymmetricFunctionService.character(mu, lam))
            for mu in index:
                for nu in index:
                    inner = sum((
                        SymmetricFunctionService.character(mu, lam) * SymmetricFunctionService.character(nu, lam)
                        * rational(1, lam.z())
                        for lam in index
                    ), ZERO)
                    report.check(f"n={m} <chi^{mu}, chi^{nu}>", ONE if mu == nu else ZERO, inner)
            for trial in range(min(params.trials, 20)):
                theta = TraceService.random_trace(m, params.rng)
                back = TraceService.frobenius_inverse(TraceService.frobenius(theta))
                report.check(f"n={m} trial {trial} Frobenius round trip", theta.to_dict(), back.to_dict())
        return report

    def _suite_yexpand(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('yexpand')
        for m in range(1, min(params.n, 5) + 1):
            for trial in range(min(params.trials, 10)):
                g = TraceService.random_group_element(m, params.rng)
                y = TraceService.y_of(g)
                for tag, f in TraceService.y_expansions(g).items():
                    report.check(f"n={m} trial {trial} Y via {tag.value}", y,
                                 SymmetricFunctionService.convert(f, BasisTag.MONOMIAL))
                omega_y = SymmetricFunctionService.convert(SymmetricFunctionService.omega(y), BasisTag.MONOMIAL)
                for tag, f in TraceService.omega_y_expansions(g).items():
                    report.check(f"n={m} trial {trial} ωY via {tag.value}", omega_y,
                                 SymmetricFunctionService.convert(f, BasisTag.MONOMIAL))
                fundamental = SymmetricFunctionService.to_fundamental(y)
                for S, d in fundamental.items():
                    expected = sum((
                        SymmetricFunctionService.b_statistic(lam, S) *
                        TraceService.evaluate(TraceService.trace_basis(m, TraceBasis.CHI, lam.transpose()), g)
                        for lam in partitions_of(m)
                    ), ZERO)
                    report.check(f"n={m} trial {trial} F[{S.key()}]", expected, d)
                f = SymFunc(m, BasisTag.SCHUR, {
                    lam: rational(params.rng.randint(-3, 3), 1) for lam in partitions_of(m)
                })
                report.check(f"n={m} trial {trial} realize round trip",
                             SymmetricFunctionService.convert(f, BasisTag.MONOMIAL),
                             TraceService.y_of(TraceService.realize_symfunc(f)))
        for m in range(1, min(params.n, 4) + 1):
            for poset in PosetGraphService.all_posets(m):
                label = f"n={m} P={poset.to_dict()['relations']}"
                try:
                    census = ChromaticService.fundamental_coefficients(poset)
                except DomainError as e:
                    report.check_true(f"{label} ξ^S three ways", False, e.detail)
                    continue
                report.check(f"{label} Σξ^S = n!", ONE * len(permutations_of(m)), sum(census.values(), ZERO))
        return report

    def _suite_kostka(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('kostka')
        for m in range(1, params.n + 1):
            K = SymmetricFunctionService.kostka(m)
            report.check_true(f"n={m} K·K⁻¹ = I", K.compose(SymmetricFunctionService.inverse_kostka(m)).is_identity())
            report.check(f"n={m} Kostka = s→m", K.entries,
                         SymmetricFunctionService.transition(m, BasisTag.SCHUR, BasisTag.MONOMIAL).entries)
            p_n = SymFunc.basis_element(BasisTag.POWER, Partition((m,)))
            via_cycles = SymFunc(m, BasisTag.ELEMENTARY, {
                mu: SymmetricFunctionService.cycle_removal_coeff(mu) * mu.sign() for mu in partitions_of(m)
            })
            report.check(f"n={m} p_n via c_μ", SymmetricFunctionService.convert(p_n, BasisTag.ELEMENTARY), via_cycles)
            for trial in range(min(params.trials, 5)):
                f = SymFunc(m, BasisTag.MONOMIAL, {
                    lam: rational(params.rng.randint(-3, 3), params.rng.randint(1, 2)) for lam in partitions_of(m)
                })
                for tag in BasisTag:
                    there = SymmetricFunctionService.convert(f, tag)
                    report.check(f"n={m} trial {trial} round trip via {tag.value}", f,
                                 SymmetricFunctionService.convert(there, BasisTag.MONOMIAL))
                report.check(f"n={m} trial {trial} ω two ways",
                             SymmetricFunctionService.convert(SymmetricFunctionService.omega(f), BasisTag.MONOMIAL),
                             SymmetricFunctionService.omega_by_generator_swap(f))
        if params.n >= 6:
            s3111 = SymFunc.basis_element(BasisTag.SCHUR, Partition((3, 1, 1, 1)))
            expected = SymFunc(6, BasisTag.ELEMENTARY, {
                Partition((4, 1, 1)): ONE, Partition((4, 2)): -ONE, Partition((5, 1)): -ONE, Partition((6,)): ONE,
            })
            report.check("s_3111 in e (transition)", expected, SymmetricFunctionService.convert(s3111, BasisTag.ELEMENTARY))
            ribbons = SymmetricFunctionService.ribbon_expansion(Partition((3, 1, 1, 1)))
            report.check("s_3111 in e (ribbons)", expected,
                         SymFunc(6, BasisTag.ELEMENTARY, {lam: ONE * c for lam, c in ribbons.items()}))
        return report

    # ==================== 单位区间序 ====================

    @staticmethod
    def _bruhat_by_tableau(v: Permutation, w: Permutation) -> bool:
        """Ehresmann 准则：每个前缀排序后逐位不超过"""
        return all(
            all(a <= b for a, b in zip(sorted(v.word[:k]), sorted(w.word[:k])))
            for k in range(1, v.n + 1)
        )

    def _suite_uio_bijection(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('uio-bijection')
        for m in range(1, params.n + 1):
            for w in avoiders_of(m):
                poset = PosetGraphService.uio_from_312_avoiding(w)
                report.check(f"w={w} round trip", w, PosetGraphService.uio_to_312_avoiding(poset))
                report.check_true(f"w={w} canonical", PosetGraphService.is_canonically_labeled(poset))
                report.check_true(f"w={w} X = Y(C')", ChromaticService.uio_kl_consistency(poset))
            for poset in PosetGraphService.all_unit_interval_orders(m):
                again = PosetGraphService.uio_from_312_avoiding(PosetGraphService.uio_to_312_avoiding(poset))
                report.check(f"n={m} P={poset.to_dict()['relations']} round trip", poset, again)
        for m in range(1, min(params.n, 5) + 1):
            pool = permutations_of(m)
            disagreements = [
                f"{v}≤{w}" for v in pool for w in pool
                if SymmetricGroupService.bruhat_leq(v, w) != self._bruhat_by_tableau(v, w)
            ]
            report.check(f"n={m} Bruhat rank matrix vs tableau criterion", [], disagreements)
        for m in range(1, min(params.n, 4) + 1):
            for w in permutations_of(m):
                if not w.is_smooth():
                    continue
                element = SymmetricGroupService.kl_basis_element_q1(w)
                for lam in partitions_of(m):
                    value = TraceService.evaluate(TraceService.trace_basis(m, TraceBasis.CHI, lam), element)
                    report.check_true(f"w={w} χ^{lam}(C'_w) ≥ 0", is_nonnegative(value), value)
        return report

    def _suite_bruhat_excedance(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('bruhat-excedance')
        for m in range(1, params.n + 1):
            for poset in PosetGraphService.all_unit_interval_orders(m):
                w = PosetGraphService.uio_to_312_avoiding(poset)
                report.check_true(f"w={w}", ChromaticService.bruhat_excedance_check(poset))
        return report

    def _suite_q_sums(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('q-sums')
        for m in range(1, params.n + 1):
            for poset in PosetGraphService.all_unit_interval_orders(m):
                w = PosetGraphService.uio_to_312_avoiding(poset)
                sums = ChromaticService.q_trace_sums(poset)
                totals = sums['totals']
                for name, value in totals.items():
                    if name != 'monomial':
                        report.check(f"w={w} total {name}", totals['monomial'], value)
                refined = sums['by_k']
                for k in range(1, m + 1):
                    for name in ('orientations', 'descent_free'):
                        report.check(f"w={w} k={k} {name}", refined['monomial'][k], refined[name][k])
        return report

    # ==================== 偏序集上的迹 ====================

    @staticmethod
    def _orientation_counts(graph: Graph, cache: Dict[Graph, Tuple[int, int, int]]) -> Tuple[int, int, int]:
        """(无环定向数, 恰有一个源点的无环定向数, 恰有一个汇点的无环定向数)"""
        if graph not in cache:
            orientations = PosetGraphService.acyclic_orientations(graph)
            cache[graph] = (
                len(orientations),
                sum(1 for O in orientations if len(O.sources()) == 1),
                sum(1 for O in orientations if len(O.sinks()) == 1),
            )
        return cache[graph]

    def _suite_eta(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('eta-interpretations')
        cache: Dict[Graph, Tuple[int, int, int]] = {}
        for m in range(1, params.n + 1):
            for poset in PosetGraphService.all_posets(m):
                graph = poset.incomparability_graph()
                label = f"P={poset.to_dict()['relations']}"
                for lam in partitions_of(m):
                    value = ChromaticService.trace_value(graph, TraceBasis.ETA, lam)
                    orientations = sum(
                        math.prod(self._orientation_counts(block, cache)[0] for block in blocks)
                        for _, blocks in PosetGraphService.ordered_induced_subgraph_partitions(graph, lam)
                    )
                    report.check(f"{label} λ={lam} descent-free", value,
                                 ONE * PTableauService.enumerate(poset, lam, 'descent_free'))
                    report.check(f"{label} λ={lam} excedance-free", value,
                                 ONE * PTableauService.enumerate(poset, lam, 'excedance_free'))
                    report.check(f"{label} λ={lam} orientations", value, ONE * orientations)
                if m <= 4:
                    for U in PTableauService.iter_tableaux(poset, Partition((m,)), 'descent_free'):
                        blocks, orientations = PTableauService.tableau_to_orientation(U)
                        back = PTableauService.orientation_to_tableau(poset, blocks, orientations)
                        report.check(f"{label} bijection {U.rows}", U.rows, back.rows)
        return report

    def _suite_psi(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('psi-interpretations')
        cache: Dict[Graph, Tuple[int, int, int]] = {}
        for m in range(1, params.n + 1):
            for poset in PosetGraphService.all_posets(m):
                graph = poset.incomparability_graph()
                label = f"P={poset.to_dict()['relations']}"
                for lam in partitions_of(m):
                    value = ChromaticService.trace_value(graph, TraceBasis.PSI, lam)
                    single_source = sum(
                        math.prod(self._orientation_counts(block, cache)[1] for block in blocks)
                        for _, blocks in PosetGraphService.ordered_induced_subgraph_partitions(graph, lam)
                    )
                    report.check_true(f"{label} λ={lam} ψ ≥ 0", is_nonnegative(value), value)
                    report.check(f"{label} λ={lam} cyclically row-semistrict", value,
                                 ONE * PTableauService.enumerate(poset, lam, 'cyclically_row_semistrict'))
                    report.check(f"{label} λ={lam} record-free row-semistrict", value,
                                 ONE * PTableauService.enumerate(poset, lam, 'record_free_and_row_semistrict'))
                    report.check(f"{label} λ={lam} cycle covers", value,
                                 ONE * PosetGraphService.ordered_disjoint_cycle_covers(poset.ngr(), lam, rooted=True))
                    single_sink = sum(
                        math.prod(self._orientation_counts(block, cache)[2] for block in blocks)
                        for _, blocks in PosetGraphService.ordered_induced_subgraph_partitions(graph, lam)
                    )
                    report.check(f"{label} λ={lam} single-source orientations", value, ONE * single_source)
                    report.check(f"{label} λ={lam} single-sink orientations", value, ONE * single_sink)
        return report

    def _suite_hook_gasharov(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('hook-gasharov')
        for m in range(1, params.n + 1):
            for poset in PosetGraphService.all_posets(m):
                graph = poset.incomparability_graph()
                label = f"P={poset.to_dict()['relations']}"
                claw_free = PosetGraphService.is_ab_free(poset, 3, 1)
                for lam in partitions_of(m):
                    if not (lam.is_hook() or claw_free):
                        continue
                    value = ChromaticService.trace_value(graph, TraceBasis.CHI, lam)
                    report.check(f"{label} λ={lam} standard", value,
                                 ONE * PTableauService.enumerate(poset, lam, 'standard'))
                    if claw_free:
                        report.check_true(f"{label} λ={lam} χ ≥ 0", is_nonnegative(value), value)
        return report

    def _suite_equidistribution(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('equidistribution')
        posets: List[Poset] = [poset for m in range(1, params.n + 1) for poset in PosetGraphService.all_posets(m)]
        if params.n < 6:
            # 穷举范围之外再抽几个 6 元偏序集
            posets.extend(PosetGraphService.random_poset(6, params.rng) for _ in range(min(params.trials, 5)))
        for poset in posets:
            label = f"n={poset.n} P={poset.to_dict()['relations']}"
            histograms = PTableauService.equidistribution_check(poset)
            for name in ('pasc', 'pexc', 'paexc'):
                report.check(f"{label} pdes ~ {name}", histograms['pdes'], histograms[name])
        for m in range(1, min(params.n, 4) + 1):
            for poset in PosetGraphService.all_posets(m):
                holds = all(PTableauService.sigma_bridge_holds(poset, w) for w in permutations_of(m))
                report.check_true(f"n={m} P={poset.to_dict()['relations']} σ bridge", holds)
            flattened = {w.sigma_flatten() for w in permutations_of(m)}
            report.check(f"n={m} σ bijective", len(permutations_of(m)), len(flattened))
        return report

    def _suite_trace_identities(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('trace-identities')
        graphs = [poset.incomparability_graph() for m in range(1, params.n + 1) for poset in PosetGraphService.all_posets(m)]
        for _ in range(min(params.trials, 20)):
            m = params.rng.randint(1, params.n)
            edges = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if params.rng.random() < 0.5]
            graphs.append(Graph.from_edges(m, edges))
        for graph in graphs:
            label = f"G={graph.to_dict()}"
            report.merge(ChromaticService.verify_trace_identities(graph), prefix=f"{label} ")
            report.merge(ChromaticService.k_source_check(graph), prefix=f"{label} sources ")
            for lam in partitions_of(graph.n):
                report.check(f"{label} ε^{lam} = c(G,λ)", ONE * PosetGraphService.count_colorings(
                    graph, Composition(lam.parts)), ChromaticService.trace_value(graph, TraceBasis.EPSILON, lam))
        return report

    def _suite_monomial_traces(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('monomial-traces')
        posets = [poset for m in range(1, params.n + 1) for poset in PosetGraphService.all_posets(m)]
        posets.extend(Poset.natural_unit_interval(6, k) for k in (1, 2, 3) if params.n >= 6)
        for poset in posets:
            label = f"n={poset.n} P={poset.to_dict()['relations']}"
            report.merge(ChromaticService.monomial_special_cases(poset), prefix=f"{label} ")
            report.merge(ChromaticService.k_record_check(poset), prefix=f"{label} records ")
        if params.n >= 5:
            phi = ChromaticService.poset_trace_table(counterexample_poset(), TraceBasis.PHI)
            for key, value in STAIRCASE_PHI.items():
                report.check(f"counterexample φ^{key}", ONE * value, phi[Partition.parse(key)])
        return report

    # ==================== 内积式与平面网络 ====================

    def _pool(self) -> List[Scalar]:
        return ImmanantService.parse_weight_pool(self.config.get_config_value('random_weight_pool', "0,1,2,1/2,3"))

    def _random_networks(self, params: SuiteParameters):
        pool = self._pool()
        for trial in range(params.trials):
            n = params.rng.randint(1, params.n)
            yield trial, self.networks.random_network(n, params.rng, pool)

    def _suite_lindstrom(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('lindstrom')
        D = staircase_network()
        report.check("staircase path matrix", Matrix.from_rows(STAIRCASE_MATRIX), self.networks.path_matrix(D))
        report.merge(self.networks.verify_lindstrom(D), prefix="staircase ")
        for trial, network in self._random_networks(params):
            report.merge(self.networks.verify_lindstrom(network), prefix=f"trial {trial} ")
        return report

    def _random_matrices(self, params: SuiteParameters):
        pool = self._pool()
        for trial in range(params.trials):
            yield trial, ImmanantService.random_matrix(params.n, params.rng, pool)

    def _suite_lmw(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('lmw')
        for trial, A in self._random_matrices(params):
            for lam in partitions_of(A.n):
                report.merge(ImmanantService.verify_lmw(A, lam), prefix=f"trial {trial} ")
        return report

    def _suite_muir(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('muir')
        for trial, A in self._random_matrices(params):
            report.merge(ImmanantService.verify_muir(A), prefix=f"trial {trial} ")
        return report

    def _suite_factorization(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('factorization')
        for trial, A in self._random_matrices(params):
            if A.n < 2:
                continue
            k = params.rng.randint(1, A.n - 1)
            theta1 = TraceService.random_trace(k, params.rng)
            theta2 = TraceService.random_trace(A.n - k, params.rng)
            report.merge(ImmanantService.verify_factorization(theta1, theta2, A), prefix=f"trial {trial} ")
        return report

    def _suite_skeletons(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('skeletons')
        for trial, network in self._random_networks(params):
            n = network.n
            theta = TraceService.random_trace(n, params.rng)
            report.merge(self.networks.skeleton_decomposition_check(network, theta), prefix=f"trial {trial} random θ ")
            lam = partitions_of(n)[params.rng.randrange(len(partitions_of(n)))]
            epsilon = TraceService.trace_basis(n, TraceBasis.EPSILON, lam)
            report.merge(self.networks.skeleton_decomposition_check(network, epsilon), prefix=f"trial {trial} ε^{lam} ")
        return report

    def _suite_hook_immanant(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('hook-immanant')
        networks = [('staircase', staircase_network())] + [
            (f"trial {trial}", network) for trial, network in self._random_networks(params)
        ]
        for label, network in networks:
            report.merge(self.networks.hook_immanant_check(network), prefix=f"{label} ")
            for lam in partitions_of(network.n):
                report.merge(self.networks.eta_immanant_check(network, lam), prefix=f"{label} η^{lam} ")
                report.merge(self.networks.epsilon_immanant_check(network, lam), prefix=f"{label} ε^{lam} ")
        return report

    def _suite_permanent(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('permanent')
        D = staircase_network()
        report.check("staircase perm = 16", ONE * 16, ImmanantService.perm(self.networks.path_matrix(D)))
        report.merge(self.networks.permanent_check(D), prefix="staircase ")
        for trial, network in self._random_networks(params):
            report.merge(self.networks.permanent_check(network), prefix=f"trial {trial} ")
        return report

    def _suite_power_immanant(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('power-immanant')
        networks = [('staircase', staircase_network())] + [
            (f"trial {trial}", network) for trial, network in self._random_networks(params)
        ]
        for label, network in networks:
            for lam in partitions_of(network.n):
                report.merge(self.networks.power_immanant_check(network, lam), prefix=f"{label} ψ^{lam} ")
        return report

    def _suite_stembridge(self, params: SuiteParameters) -> VerificationReport:
        report = VerificationReport('stembridge-rect')
        D = staircase_network()
        A = self.networks.path_matrix(D)
        for key, value in STAIRCASE_PHI.items():
            lam = Partition.parse(key)
            report.check(f"staircase φ^{key}", ONE * value, ImmanantService.basis_immanant(TraceBasis.PHI, lam, A))
        for lam in (Partition((5,)), Partition((1, 1, 1, 1, 1))):
            report.merge(self.networks.stembridge_rectangular_check(D, lam), prefix="staircase ")
        if params.known_counterexample:
            report.merge(self.networks.stembridge_rectangular_check(D, Partition((3, 2))), prefix="staircase ")
            report.check("counterexample standard cyclic (3,2)", 4,
                         PTableauService.enumerate(counterexample_poset(), Partition((3, 2)), 'standard_and_cyclic'))
            report.check("counterexample standard record-free (3,2)", 5,
                         PTableauService.enumerate(counterexample_poset(), Partition((3, 2)), 'standard_and_record_free'))
        pool = self._pool()
        rectangles = [lam for lam in partitions_of(4) if lam.is_rectangle()]
        for trial in range(params.trials):
            network = self.networks.random_network(4, params.rng, pool)
            for lam in rectangles:
                report.merge(self.networks.stembridge_rectangular_check(network, lam), prefix=f"trial {trial} ")
        return report

    def _suite_tnn_implications(self, params: SuiteParameters) -> VerificationReport:
        return self.networks.tnn_implication_suite(params.n, params.rng, trials=min(params.trials, 5))

