"""命令处理器

专门负责 CLI 各子命令：读取输入、校验参数、调用计算服务并组装输出
"""
from typing import Any, Dict, List, Optional, Tuple

from models.partition import Partition
from models.poset import Graph, Poset
from models.symfunc import BasisTag
from models.trace import Trace, TraceBasis
from utils.config_service import ConfigService
from utils.decorators import command_error_handler
from utils.error_handler import ErrorHandler, ValidationError
from utils.logger import logger
from utils.report_formatter import fmt_summary, fmt_table, fmt_value
from utils.storage_manager import StorageManager

from .chromatic import ChromaticService
from .immanants import ImmanantService
from .p_tableaux import PREDICATES, STATISTICS, PTableauService
from .planar_network import PlanarNetworkService
from .sn_algebra import TraceService
from .verification_suites import SUITES, VerificationSuiteService

CommandResult = Tuple[int, List[str]]

# 展开基 → 从该基系数读出的迹基
BASIS_TO_TRACE = {
    BasisTag.MONOMIAL: TraceBasis.EPSILON,
    BasisTag.FORGOTTEN: TraceBasis.ETA,
    BasisTag.POWER: TraceBasis.PSI,
    BasisTag.SCHUR: TraceBasis.CHI,
    BasisTag.ELEMENTARY: TraceBasis.PHI,
    BasisTag.HOMOGENEOUS: TraceBasis.GAMMA,
}

OUTPUT_FORMATS = ['json', 'csv']


class CommandHandler:
    """
    命令处理器

    职责：
    - 解析输入（文件或内联 JSON）
    - 参数验证与规模保护
    - 调用计算服务
    - 组装确定性的 JSON / CSV 输出

    每个命令返回 (退出码, 输出行)；诊断信息（如验证摘要）累积在 diagnostics 中，由调用方写到 stderr。
    """

    def __init__(self, config: Optional[ConfigService] = None, storage: Optional[StorageManager] = None,
                 force: bool = False):
        self.config = config or ConfigService()
        self.storage = storage or StorageManager()
        self.force = force
        self.networks = PlanarNetworkService(self.config)
        self.suites = VerificationSuiteService(self.config)
        self.diagnostics: List[str] = []

        logger.info("命令处理器初始化完成")

    # ==================== 辅助 ====================

    def _guard_poset(self, n: int) -> None:
        ErrorHandler.validate_size(n, self.config.get_config_value('max_poset_size', 8),
                                   "偏序集/图", 'max_poset_size', self.force)

    def _guard_immanant(self, n: int) -> None:
        ErrorHandler.validate_size(n, self.config.get_config_value('max_immanant_size', 5),
                                   "矩阵阶数", 'max_immanant_size', self.force)

    def _load_graph_input(self, source: str, kind: str) -> Tuple[Graph, Optional[Poset]]:
        ErrorHandler.validate_choice(kind, ['poset', 'graph'], "输入类型")
        if kind == 'poset':
            poset = self.storage.load_poset(source)
            self._guard_poset(poset.n)
            return poset.incomparability_graph(), poset
        graph = self.storage.load_graph(source)
        self._guard_poset(graph.n)
        return graph, None

    def _parse_trace(self, text: str, n: int) -> Trace:
        if not text:
            raise ValidationError("缺少迹描述", ["使用 --trace 名称:分拆，例如 --trace phi:3,2"])
        return TraceService.parse_trace(text, n)

    def _render(self, payload: Dict[str, Any], output_format: str,
                rows: Optional[List[List[str]]] = None, header: Optional[List[str]] = None) -> CommandResult:
        ErrorHandler.validate_choice(output_format, OUTPUT_FORMATS, "输出格式")
        if output_format == 'csv':
            text = self.storage.dumps_csv(rows or [], header)
        else:
            text = self.storage.dumps_json(payload)
        return 0, text.rstrip("\n").split("\n")

    # ==================== 子命令 ====================

    @command_error_handler("展开")
    def expand(self, source: str, kind: str = 'poset', basis: str = 'all', use_q: bool = False,
               output_format: str = 'json') -> CommandResult:
        """X_G 的六组基展开、对应的迹表；偏序集输入附带基本拟对称系数 ξ^S"""
        graph, poset = self._load_graph_input(source, kind)
        tags = list(BasisTag) if basis == 'all' else [BasisTag.parse(basis)]
        if use_q and poset is not None:
            ChromaticService.require_canonical_uio(poset)

        expansions: Dict[str, Dict[str, str]] = {}
        traces: Dict[str, Dict[str, str]] = {}
        for tag in tags:
            expansions[tag.value] = fmt_table(ChromaticService.expansion(graph, tag, use_q).coeffs)
            trace_basis = BASIS_TO_TRACE[tag]
            traces[trace_basis.value] = fmt_table(ChromaticService.trace_table(graph, trace_basis, use_q))

        payload: Dict[str, Any] = {
            'kind': kind,
            'n': graph.n,
            'q': use_q,
            'expansions': expansions,
            'traces': traces,
        }
        if poset is not None and not use_q:
            payload['fundamental'] = fmt_table(ChromaticService.fundamental_coefficients(poset))
        logger.info(f"展开完成: n={graph.n} 基={','.join(tag.value for tag in tags)} q={use_q}")
        rows = self.storage.table_rows(expansions) + self.storage.table_rows(traces)
        return self._render(payload, output_format, rows, ['table', 'key', 'value'])

    @command_error_handler("内积式计算")
    def immanant(self, source: str, trace_text: str, network: bool = False,
                 output_format: str = 'json') -> CommandResult:
        """Imm_θ(A)；--network 时 A 取路径矩阵并附带骨架分解表"""
        payload: Dict[str, Any] = {'trace': trace_text}
        rows: List[List[str]] = []
        if network:
            planar = self.storage.load_network(source)
            self._guard_immanant(planar.n)
            A = self.networks.path_matrix(planar)
            theta = self._parse_trace(trace_text, A.n)
            table = []
            for skeleton, families in sorted(self.networks.skeletons(planar).items(), key=lambda item: item[0].edges):
                theta_z = TraceService.evaluate(theta, self.networks.z_of_skeleton(families))
                table.append({
                    'skeleton': skeleton.key(),
                    'weight': fmt_value(skeleton.weight),
                    'families': len(families),
                    'theta_z': fmt_value(theta_z),
                })
                rows.append(['skeleton', skeleton.key(), fmt_value(skeleton.weight), fmt_value(theta_z)])
            payload['skeletons'] = table
        else:
            A = self.storage.load_matrix(source)
            self._guard_immanant(A.n)
            theta = self._parse_trace(trace_text, A.n)
        value = ImmanantService.immanant(theta, A)
        payload['n'] = A.n
        payload['matrix'] = A.to_lists()
        payload['value'] = fmt_value(value)
        rows.insert(0, ['immanant', trace_text, fmt_value(value), ''])
        logger.info(f"内积式 {trace_text} = {fmt_value(value)}")
        return self._render(payload, output_format, rows, ['row', 'key', 'value', 'theta_z'])

    @command_error_handler("迹求值")
    def trace_eval(self, source: str, trace_text: str, kind: str = 'poset',
                   output_format: str = 'json') -> CommandResult:
        """θ(G)（偏序集取 inc(P)）或 θ(g)（群代数元素）"""
        ErrorHandler.validate_choice(kind, ['poset', 'graph', 'group-element'], "输入类型")
        if kind == 'group-element':
            element = self.storage.load_group_element(source)
            self._guard_poset(element.n)
            theta = self._parse_trace(trace_text, element.n)
            value = TraceService.evaluate(theta, element)
            n = element.n
        else:
            graph, _ = self._load_graph_input(source, kind)
            theta = self._parse_trace(trace_text, graph.n)
            value = ChromaticService.trace_of_graph(theta, graph)
            n = graph.n
        payload = {'kind': kind, 'n': n, 'trace': trace_text, 'value': fmt_value(value)}
        return self._render(payload, output_format, [[trace_text, fmt_value(value)]], ['trace', 'value'])

    @command_error_handler("P-表计数")
    def tableaux_count(self, source: str, shape: str, predicate: str, statistic: Optional[str] = None,
                       output_format: str = 'json') -> CommandResult:
        """满足谓词的 P-表个数；给定统计量时同时输出 q-计数"""
        poset = self.storage.load_poset(source)
        self._guard_poset(poset.n)
        lam = Partition.parse(shape)
        ErrorHandler.validate_same_size(lam.n, poset.n, "形状与偏序集")
        ErrorHandler.validate_choice(predicate, list(PREDICATES), "谓词")
        count = PTableauService.enumerate(poset, lam, predicate)
        payload: Dict[str, Any] = {'shape': lam.key(), 'predicate': predicate, 'count': count}
        rows = [[lam.key(), predicate, str(count)]]
        if statistic:
            ErrorHandler.validate_choice(statistic, list(STATISTICS), "统计量")
            q_value = fmt_value(PTableauService.q_count(poset, lam, predicate, statistic))
            payload['statistic'] = statistic
            payload['q_count'] = q_value
            rows.append([lam.key(), f"{predicate}:{statistic}", q_value])
        return self._render(payload, output_format, rows, ['shape', 'predicate', 'value'])

    @command_error_handler("验证")
    def verify(self, suite: str, n: Optional[int] = None, seed: Optional[int] = None,
               trials: Optional[int] = None, known_counterexample: bool = False) -> CommandResult:
        """运行验证套件；有失败用例时退出码为 1，报告仍写到 stdout"""
        report = self.suites.run(suite, n=n, seed=seed, trials=trials,
                                 known_counterexample=known_counterexample, force=self.force)
        data = report.to_dict()
        self.diagnostics.extend(fmt_summary(data))
        code = 0 if report.passed else 1
        return code, self.storage.dumps_json(data).split("\n")

    def list_suites(self) -> CommandResult:
        return 0, [f"{name:22s} {entry.description}" for name, entry in SUITES.items()]
