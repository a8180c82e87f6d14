"""统一存储管理器

输入（文件路径或内联 JSON）的读取与解析，以及 JSON / CSV 报告的写出
"""
import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

from models.matrix import Matrix
from models.network import PlanarNetwork
from models.poset import Graph, Poset
from models.trace import GroupAlgebraElement

from .error_handler import ValidationError
from .logger import logger


class StorageManager:
    """统一存储管理器"""

    def __init__(self, output_dir: Optional[str] = None):
        """
        初始化存储管理器

        Args:
            output_dir: 报告输出目录，缺省时只写 stdout
        """
        self.output_dir = Path(output_dir) if output_dir else None
        if self.output_dir is not None:
            self.output_dir.mkdir(parents=True, exist_ok=True)
        logger.debug(f"存储管理器初始化完成: {self.output_dir or 'stdout'}")

    # ==================== 读取 ====================

    @staticmethod
    def load_json(source: str) -> Any:
        """
        读取 JSON：source 以 { 或 [ 开头时按内联 JSON 解析，否则视为文件路径

        Raises:
            ValidationError: 文件不存在或 JSON 无法解析
        """
        text = str(source).strip()
        if text.startswith('{') or text.startswith('['):
            origin = "内联 JSON"
        else:
            path = Path(text)
            if not path.exists():
                raise ValidationError(f"输入文件不存在: {path}", ["检查路径", "或直接传入内联 JSON"])
            try:
                with open(path, 'r', encoding='utf-8') as f:
                    text = f.read()
            except OSError as e:
                raise ValidationError(f"读取文件失败 {path}: {e}")
            origin = str(path)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"{origin} 不是合法 JSON: 第 {e.lineno} 行第 {e.colno} 列，{e.msg}")
        logger.debug(f"已读取输入: {origin}")
        return data

    @staticmethod
    def _require_object(data: Any, what: str) -> Dict[str, Any]:
        if not isinstance(data, dict):
            raise ValidationError(f"{what} JSON 必须是对象")
        return data

    def load_poset(self, source: str) -> Poset:
        return Poset.from_dict(self._require_object(self.load_json(source), "偏序集"))

    def load_graph(self, source: str) -> Graph:
        return Graph.from_dict(self._require_object(self.load_json(source), "图"))

    def load_matrix(self, source: str) -> Matrix:
        return Matrix.from_dict(self.load_json(source))

    def load_network(self, source: str) -> PlanarNetwork:
        return PlanarNetwork.from_dict(self._require_object(self.load_json(source), "平面网络"))

    def load_group_element(self, source: str) -> GroupAlgebraElement:
        return GroupAlgebraElement.from_dict(self._require_object(self.load_json(source), "群代数元素"))

    # ==================== 写出 ====================

    @staticmethod
    def dumps_json(payload: Any) -> str:
        """确定性的 JSON 文本"""
        return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)

    @staticmethod
    def dumps_csv(rows: Sequence[Sequence[Any]], header: Optional[Sequence[str]] = None) -> str:
        """二维表 → CSV 文本（单元格为精确字符串）"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        if header:
            writer.writerow(header)
        for row in rows:
            writer.writerow([str(cell) for cell in row])
        return buffer.getvalue()

    @staticmethod
    def table_rows(tables: Mapping[str, Mapping[str, str]]) -> List[List[str]]:
        """{基: {键: 系数}} → [基, 键, 系数] 行"""
        return [[name, key, value] for name, table in tables.items() for key, value in table.items()]

    def save_text(self, filename: str, text: str) -> Optional[Path]:
        """写入输出目录；未设置输出目录时返回 None"""
        if self.output_dir is None:
            return None
        path = self.output_dir / filename
        try:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(text)
        except OSError as e:
            logger.error(f"保存文件失败 {path}: {e}")
            raise ValidationError(f"无法写入 {path}: {e}")
        logger.info(f"报告已保存: {path}")
        return path
