"""平面网络数据模型

- NetworkEdge: 带权有向边
- PlanarNetwork: 带边界源点 s1..sn 与汇点 t1..tn 的带权无环有向图
- Path / PathFamily: 源到汇的路径与路径族
- Skeleton: 路径族的边多重集
- PiTableau: 由路径族中的路径填充的表
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import networkx as nx

from utils.error_handler import ValidationError

from .partition import Partition
from .permutation import Permutation
from .scalar import ONE, Scalar, format_scalar, scalar


@dataclass(frozen=True)
class NetworkEdge:
    """带权有向边 u → v"""
    u: str
    v: str
    weight: Scalar = field(default_factory=lambda: ONE)

    def to_dict(self) -> Dict[str, Any]:
        return {'u': self.u, 'v': self.v, 'w': format_scalar(self.weight)}


@dataclass(frozen=True, eq=False)
class PlanarNetwork:
    """
    平面网络 D

    平面嵌入由提供者保证，这里只检查无环性与边界度数。

    Attributes:
        vertices: 顶点名
        edges: 带权边（允许平行边）
        sources: s1..sn（入度为 0）
        sinks: t1..tn（出度为 0）
    """
    vertices: Tuple[str, ...]
    edges: Tuple[NetworkEdge, ...]
    sources: Tuple[str, ...]
    sinks: Tuple[str, ...]
    _graph: Any = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise ValidationError("网络顶点名重复")
        if len(self.sources) != len(self.sinks):
            raise ValidationError(f"源点数 {len(self.sources)} 与汇点数 {len(self.sinks)} 不一致")
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for index, edge in enumerate(self.edges):
            if edge.u not in vertex_set or edge.v not in vertex_set:
                raise ValidationError(f"边 {edge.u}→{edge.v} 引用了未知顶点")
            graph.add_edge(edge.u, edge.v, key=index)
        if not nx.is_directed_acyclic_graph(graph):
            raise ValidationError("网络必须是无环有向图")
        for s in self.sources:
            if s not in vertex_set or graph.in_degree(s) != 0:
                raise ValidationError(f"源点 {s} 必须存在且入度为 0")
        for t in self.sinks:
            if t not in vertex_set or graph.out_degree(t) != 0:
                raise ValidationError(f"汇点 {t} 必须存在且出度为 0")
        if len(set(self.sources) | set(self.sinks)) != 2 * len(self.sources):
            raise ValidationError("源点与汇点必须两两不同")
        object.__setattr__(self, '_graph', graph)

    @property
    def n(self) -> int:
        return len(self.sources)

    @property
    def graph(self) -> nx.MultiDiGraph:
        return self._graph

    def out_edges(self, vertex: str) -> List[int]:
        """从 vertex 出发的边下标（按输入顺序）"""
        return sorted(key for _, _, key in self._graph.out_edges(vertex, keys=True))

    def topological_order(self) -> List[str]:
        return list(nx.lexicographical_topological_sort(self._graph, key=self.vertices.index))

    def to_dict(self) -> Dict[str, Any]:
        """JSON 形式 {"n":..,"vertices":..,"edges":[{"u":..,"v":..,"w":"1"}],"sources":..,"sinks":..}"""
        return {
            'n': self.n,
            'vertices': list(self.vertices),
            'edges': [edge.to_dict() for edge in self.edges],
            'sources': list(self.sources),
            'sinks': list(self.sinks),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PlanarNetwork':
        try:
            edges = tuple(
                NetworkEdge(str(e['u']), str(e['v']), scalar(str(e.get('w', '1'))))
                for e in data['edges']
            )
            sources = tuple(str(s) for s in data['sources'])
            sinks = tuple(str(t) for t in data['sinks'])
            if 'vertices' in data:
                vertices = tuple(str(v) for v in data['vertices'])
            else:
                seen: Dict[str, None] = {}
                for name in list(sources) + [x for e in edges for x in (e.u, e.v)] + list(sinks):
                    seen.setdefault(name, None)
                vertices = tuple(seen)
        except (KeyError, TypeError) as e:
            raise ValidationError(f"网络 JSON 格式错误: {e}")
        network = cls(vertices, edges, sources, sinks)
        if 'n' in data and int(data['n']) != network.n:
            raise ValidationError(f"声明的 n={data['n']} 与源点数 {network.n} 不符")
        return network


@dataclass(frozen=True)
class Path:
    """
    从 s_source 到 t_sink 的路径

    Attributes:
        source: 源点下标（1..n）
        sink: 汇点下标（1..n）
        edges: 依次经过的边下标
        vertices: 依次经过的顶点
        weight: 边权乘积
    """
    source: int
    sink: int
    edges: Tuple[int, ...]
    vertices: Tuple[str, ...]
    weight: Scalar = field(default_factory=lambda: ONE)

    def meets(self, other: 'Path') -> bool:
        """两条路径是否有公共顶点"""
        return not set(self.vertices).isdisjoint(other.vertices)


@dataclass(frozen=True)
class PathFamily:
    """
    路径族 π = (π_1, ..., π_n)，π_i 从 s_i 出发

    Attributes:
        paths: 各路径
    """
    paths: Tuple[Path, ...]

    def __post_init__(self):
        for i, path in enumerate(self.paths, start=1):
            if path.source != i:
                raise ValidationError(f"路径族第 {i} 条路径应从 s{i} 出发")
        Permutation(tuple(path.sink for path in self.paths))

    @property
    def n(self) -> int:
        return len(self.paths)

    def path_type(self) -> Permutation:
        """type(π)：π_i 终止于 t_{w_i}"""
        return Permutation(tuple(path.sink for path in self.paths))

    @property
    def weight(self) -> Scalar:
        result = ONE
        for path in self.paths:
            result *= path.weight
        return result

    def edge_multiset(self) -> Tuple[int, ...]:
        """骨架：全部路径所用边下标的多重集（排序）"""
        return tuple(sorted(e for path in self.paths for e in path.edges))

    def intersect(self, i: int, j: int) -> bool:
        return self.paths[i - 1].meets(self.paths[j - 1])

    def is_nonintersecting(self) -> bool:
        return all(not self.intersect(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1))


@dataclass(frozen=True)
class Skeleton:
    """
    双射骨架 K：边多重集

    Attributes:
        edges: 边下标的有序多重集
        weight: 多重集中边权的乘积
    """
    edges: Tuple[int, ...]
    weight: Scalar = field(default_factory=lambda: ONE)

    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.edges))

    def key(self) -> str:
        return ",".join(str(e) for e in self.edges)


@dataclass(frozen=True)
class PiTableau:
    """
    π-表：用路径族的路径（按下标 1..n）填充形状 λ

    Attributes:
        family: 路径族
        rows: 各行的路径下标
    """
    family: PathFamily
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        content = sorted(i for row in self.rows for i in row)
        if content != list(range(1, self.family.n + 1)):
            raise ValidationError(f"π-表必须恰好使用每条路径一次: {self.rows}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def left(self) -> Tuple[Tuple[int, ...], ...]:
        """L(U)：各路径的源点下标"""
        return tuple(tuple(self.family.paths[i - 1].source for i in row) for row in self.rows)

    def right(self) -> Tuple[Tuple[int, ...], ...]:
        """R(U)：各路径的汇点下标"""
        return tuple(tuple(self.family.paths[i - 1].sink for i in row) for row in self.rows)
