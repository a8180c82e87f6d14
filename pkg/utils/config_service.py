"""配置管理服务

提供规模保护、枚举上限和随机种子的统一管理
"""
import json
from pathlib import Path
from typing import Any, Dict, Optional

from .logger import logger

DEFAULT_CONFIG_FILE = "chromatic_traces_config.json"


class ConfigService:
    """配置管理服务"""

    def __init__(self, config_file: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None):
        """
        初始化配置服务

        Args:
            config_file: 本地 JSON 配置文件路径，缺省时使用当前目录下的默认文件（若存在）
            overrides: 命令行等显式覆盖的配置
        """
        self._local_config_file = Path(config_file) if config_file else Path(DEFAULT_CONFIG_FILE)
        self._explicit_file = config_file is not None
        self._overrides = dict(overrides or {})
        if self._explicit_file and not self._local_config_file.exists():
            logger.warning(f"配置文件不存在，使用默认配置: {self._local_config_file}")

    def _load_local_config(self) -> Dict[str, Any]:
        """加载本地配置文件"""
        try:
            if self._local_config_file.exists():
                with open(self._local_config_file, 'r', encoding='utf-8') as f:
                    return json.load(f)
            return {}
        except Exception as e:
            logger.error(f"加载本地配置失败: {e}")
            return {}

    def get_config_value(self, key: str, default: Any = None) -> Any:
        """
        获取配置值

        优先级：显式覆盖 > 本地配置 > 默认配置 > default

        Args:
            key: 配置键名
            default: 默认值

        Returns:
            配置值
        """
        config = self.get_all_config()
        if key in config:
            return config[key]
        logger.debug(f"使用调用方默认值 {key}: {default}")
        return default

    def get_all_config(self) -> Dict[str, Any]:
        """
        获取合并并校验后的全部配置

        Returns:
            合并后的配置字典
        """
        merged_config = self.get_default_config()
        merged_config.update(self._load_local_config())
        merged_config.update(self._overrides)
        return self.validate_config(merged_config)

    def get_default_config(self) -> Dict[str, Any]:
        """
        获取默认配置

        Returns:
            默认配置字典
        """
        return {
            'max_poset_size': 8,            # 偏序集/图的规模上限
            'max_immanant_size': 5,         # n! 直接求和的矩阵阶数上限
            'max_paths_per_pair': 2000,     # 单个源汇对的路径数上限
            'max_families': 200000,         # 路径族总数上限
            'max_network_vertices': 40,     # 平面网络顶点数上限
            'default_seed': 7,              # 随机套件默认种子
            'default_trials': 100,          # 随机套件默认试验次数
            'suite_max_n': 5,               # 穷举套件默认规模
            'uio_suite_max_n': 6,           # 单位区间序套件默认规模
            'random_weight_pool': "0,1,2,1/2,3",  # 随机网络的权重池
            'log_level': "WARNING",         # 日志级别
        }

    def validate_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """
        验证和修正配置值

        Args:
            config: 要验证的配置

        Returns:
            验证后的配置
        """
        validated = config.copy()
        default = self.get_default_config()

        validations = {
            'max_poset_size': (1, 10),
            'max_immanant_size': (1, 8),
            'max_paths_per_pair': (1, 10 ** 6),
            'max_families': (1, 10 ** 7),
            'max_network_vertices': (2, 500),
            'default_seed': (0, 2 ** 31 - 1),
            'default_trials': (1, 100000),
            'suite_max_n': (1, 7),
            'uio_suite_max_n': (1, 7),
        }

        for key, (min_val, max_val) in validations.items():
            if key in validated:
                value = validated[key]
                if not isinstance(value, int) or isinstance(value, bool) or value < min_val or value > max_val:
                    logger.warning(f"配置值 {key}={value} 无效，使用默认值 {default[key]}")
                    validated[key] = default[key]

        if not isinstance(validated.get('random_weight_pool'), str) or not validated['random_weight_pool'].strip():
            logger.warning("随机权重池配置无效，使用默认值")
            validated['random_weight_pool'] = default['random_weight_pool']

        if str(validated.get('log_level', '')).upper() not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            logger.warning(f"日志级别 {validated.get('log_level')} 无效，使用默认值")
            validated['log_level'] = default['log_level']

        return validated
