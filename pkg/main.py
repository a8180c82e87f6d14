"""色迹计算工具 - 命令行入口

对称群迹在色对称函数与内积式上的精确计算与验证，支持：
- X_G 的六组基展开与迹表（可选 q-版本）
- 矩阵与平面网络的内积式、骨架分解
- P-表计数
- 可复现的定理验证套件
"""

import argparse
import sys
from typing import List, Optional

from services.command_handler import CommandHandler
from services.p_tableaux import PREDICATES, STATISTICS
from services.verification_suites import SUITES
from utils.config_service import ConfigService
from utils.error_handler import ValidationError
from utils.logger import logger, setup_logging
from utils.report_formatter import fmt_error
from utils.storage_manager import StorageManager

__version__ = "1.0.0"

BASIS_CHOICES = ['all', 'm', 'e', 'h', 'p', 's', 'f']


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromatic-traces",
        description="对称群迹、色对称函数与完全非负矩阵内积式的精确计算",
    )
    parser.add_argument('--config', default=None, help="本地 JSON 配置文件")
    parser.add_argument('--log-level', default=None, help="日志级别（默认取配置 log_level）")
    parser.add_argument('--force', action='store_true', help="跳过规模保护")
    parser.add_argument('--output-dir', default=None, help="同时把报告写入该目录")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    expand = sub.add_parser('expand', help="X_G 的基展开与迹表")
    expand.add_argument('input', help="偏序集/图 JSON 文件路径或内联 JSON")
    expand.add_argument('--kind', choices=['poset', 'graph'], default='poset')
    expand.add_argument('--basis', choices=BASIS_CHOICES, default='all')
    expand.add_argument('--q', action='store_true', help="计算 X_{G,q}")
    expand.add_argument('--format', choices=['json', 'csv'], default='json')

    immanant = sub.add_parser('immanant', help="内积式 Imm_θ(A)")
    immanant.add_argument('input', help="矩阵或平面网络 JSON")
    immanant.add_argument('--network', action='store_true', help="输入为平面网络，输出骨架分解表")
    immanant.add_argument('--trace', required=True, help="迹描述，如 phi:3,2")
    immanant.add_argument('--format', choices=['json', 'csv'], default='json')

    trace_eval = sub.add_parser('trace-eval', help="θ(G) 或 θ(g)")
    trace_eval.add_argument('input')
    trace_eval.add_argument('--trace', required=True)
    trace_eval.add_argument('--kind', choices=['poset', 'graph', 'group-element'], default='poset')
    trace_eval.add_argument('--format', choices=['json', 'csv'], default='json')

    tableaux = sub.add_parser('tableaux-count', help="满足谓词的 P-表计数")
    tableaux.add_argument('input', help="偏序集 JSON")
    tableaux.add_argument('--shape', required=True, help="形状，如 3,2")
    tableaux.add_argument('--predicate', required=True, choices=list(PREDICATES))
    tableaux.add_argument('--statistic', choices=list(STATISTICS), default=None, help="同时输出 q-计数")
    tableaux.add_argument('--format', choices=['json', 'csv'], default='json')

    verify = sub.add_parser('verify', help="运行验证套件")
    verify.add_argument('suite', choices=list(SUITES) + ['list'])
    verify.add_argument('--n', type=int, default=None)
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--trials', type=int, default=None)
    verify.add_argument('--paper-counterexample', '--known-counterexample', dest='known_counterexample',
                        action='store_true', help="附带复现已知反例")
    return parser


def dispatch(handler: CommandHandler, args: argparse.Namespace):
    if args.command == 'expand':
        return handler.expand(args.input, kind=args.kind, basis=args.basis, use_q=args.q, output_format=args.format)
    if args.command == 'immanant':
        return handler.immanant(args.input, args.trace, network=args.network, output_format=args.format)
    if args.command == 'trace-eval':
        return handler.trace_eval(args.input, args.trace, kind=args.kind, output_format=args.format)
    if args.command == 'tableaux-count':
        return handler.tableaux_count(args.input, args.shape, args.predicate, statistic=args.statistic,
                                      output_format=args.format)
    if args.suite == 'list':
        return handler.list_suites()
    return handler.verify(args.suite, n=args.n, seed=args.seed, trials=args.trials,
                          known_counterexample=args.known_counterexample)


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行入口

    Returns:
        退出码：0 成功，1 验证失败，2 用法/解析/范围/规模错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2

    config = ConfigService(args.config)
    setup_logging(args.log_level or config.get_config_value('log_level', "WARNING"))
    storage = StorageManager(args.output_dir)
    handler = CommandHandler(config, storage, force=args.force)

    code, lines = dispatch(handler, args)
    stream = sys.stderr if code == 2 else sys.stdout
    print("\n".join(lines), file=stream)
    if code != 2 and not (args.command == 'verify' and args.suite == 'list'):
        try:
            storage.save_text(f"{args.command}.{getattr(args, 'format', 'json')}", "\n".join(lines) + "\n")
        except ValidationError as e:
            print("\n".join(fmt_error("保存报告失败", e.detail, e.suggestions)), file=sys.stderr)
            code = 2
    if handler.diagnostics:
        print("\n".join(handler.diagnostics), file=sys.stderr)
    logger.debug(f"命令 {args.command} 结束，退出码 {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
