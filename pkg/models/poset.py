"""偏序集与图数据模型

- Poset: [n] 上的严格偏序（构造时做传递闭包）
- Graph: 简单无向图
- Digraph: 有向图（允许自环），用于 ngr(P) 与定向
- Coloring: 顶点着色
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from utils.error_handler import ValidationError

from .partition import Composition


def _check_vertex(v: int, n: int, what: str) -> None:
    if not isinstance(v, int) or not 1 <= v <= n:
        raise ValidationError(f"{what}中的顶点 {v} 不在 1..{n} 内")


@dataclass(frozen=True)
class Poset:
    """
    [n] 上的严格偏序

    Attributes:
        n: 元素个数
        relations: 全部 (i, j) 满足 i <_P j（已传递闭包）

    Example:
        >>> P = Poset.from_relations(5, [(1, 3), (3, 5), (1, 4), (2, 4), (2, 5)])
        >>> P.lt(1, 5)  # True
    """
    n: int
    relations: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(1, self.n + 1))
        for i, j in self.relations:
            _check_vertex(i, self.n, "偏序关系")
            _check_vertex(j, self.n, "偏序关系")
            if i == j:
                raise ValidationError(f"严格偏序不能包含 ({i}, {i})")
            digraph.add_edge(i, j)
        if not nx.is_directed_acyclic_graph(digraph):
            cycle = nx.find_cycle(digraph)
            raise ValidationError(f"偏序关系含有环: {cycle}")
        closure = nx.transitive_closure_dag(digraph)
        object.__setattr__(self, 'relations', frozenset(closure.edges()))
        matrix = [[False] * (self.n + 1) for _ in range(self.n + 1)]
        for i, j in self.relations:
            matrix[i][j] = True
        object.__setattr__(self, '_less', tuple(tuple(row) for row in matrix))

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[Sequence[int]]) -> 'Poset':
        return cls(n, frozenset((int(i), int(j)) for i, j in relations))

    @classmethod
    def chain(cls, n: int) -> 'Poset':
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def antichain(cls, n: int) -> 'Poset':
        return cls(n, frozenset())

    @classmethod
    def natural_unit_interval(cls, n: int, k: int = 1) -> 'Poset':
        """i <_P j 当且仅当 i + k < j"""
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i + k < j))

    def lt(self, i: int, j: int) -> bool:
        """i <_P j"""
        return self._less[i][j]

    def gt(self, i: int, j: int) -> bool:
        """i >_P j"""
        return self._less[j][i]

    def comparable(self, i: int, j: int) -> bool:
        return self._less[i][j] or self._less[j][i]

    def incomparable(self, i: int, j: int) -> bool:
        return i != j and not self.comparable(i, j)

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def beta(self, y: int) -> int:
        """β(y) = #{x | x ≤_P y} − #{z | z ≥_P y}"""
        below = sum(1 for x in self.elements if self.lt(x, y))
        above = sum(1 for z in self.elements if self.lt(y, z))
        return below - above

    def induced(self, subset: Iterable[int]) -> 'Poset':
        """由 J 诱导的子偏序集，按保序映射 J → [|J|] 重新标号"""
        elements = sorted(set(subset))
        for v in elements:
            _check_vertex(v, self.n, "子集")
        position = {v: k + 1 for k, v in enumerate(elements)}
        return Poset(len(elements), frozenset(
            (position[i], position[j]) for i in elements for j in elements if self.lt(i, j)
        ))

    def relabel(self, mapping: Dict[int, int]) -> 'Poset':
        """按双射 mapping: 旧标号 → 新标号 重新标号"""
        if sorted(mapping.values()) != list(self.elements):
            raise ValidationError("重新标号必须是 [n] 上的双射")
        return Poset(self.n, frozenset((mapping[i], mapping[j]) for i, j in self.relations))

    def incomparability_graph(self) -> 'Graph':
        """inc(P)：每对不可比元素连一条边"""
        return Graph(self.n, frozenset(
            (i, j) for i, j in combinations(self.elements, 2) if not self.comparable(i, j)
        ))

    def ngr(self) -> 'Digraph':
        """ngr(P)：全部 (i, j) 满足 i ≯_P j（含自环）"""
        return Digraph(self.n, frozenset(
            (i, j) for i in self.elements for j in self.elements if not self.gt(i, j)
        ))

    def is_naturally_labeled(self) -> bool:
        """i <_P j 蕴含 i < j"""
        return all(i < j for i, j in self.relations)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from(self.relations)
        return graph

    def cover_relations(self) -> List[Tuple[int, int]]:
        """Hasse 图的覆盖关系"""
        return sorted(nx.transitive_reduction(self.to_networkx()).edges())

    def to_dict(self) -> Dict[str, Any]:
        """JSON 形式 {"n":5,"relations":[[1,3],...]}（覆盖关系）"""
        return {'n': self.n, 'relations': [list(pair) for pair in self.cover_relations()]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Poset':
        try:
            n = int(data['n'])
            relations = [tuple(pair) for pair in data.get('relations', [])]
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"偏序集 JSON 格式错误: {e}")
        if any(len(pair) != 2 for pair in relations):
            raise ValidationError("偏序关系必须是二元组")
        return cls.from_relations(n, relations)


@dataclass(frozen=True)
class Graph:
    """
    简单无向图

    Attributes:
        n: 顶点数（顶点为 1..n）
        edges: 边集，每条边 (i, j) 满足 i < j
    """
    n: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        normalized = set()
        for i, j in self.edges:
            _check_vertex(i, self.n, "边")
            _check_vertex(j, self.n, "边")
            if i == j:
                raise ValidationError(f"简单图不能含自环 ({i}, {i})")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, 'edges', frozenset(normalized))
        adjacency = [set() for _ in range(self.n + 1)]
        for i, j in normalized:
            adjacency[i].add(j)
            adjacency[j].add(i)
        object.__setattr__(self, '_adjacency', tuple(frozenset(s) for s in adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> 'Graph':
        return cls(n, frozenset((int(i), int(j)) for i, j in edges))

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def edgeless(cls, n: int) -> 'Graph':
        return cls(n, frozenset())

    @classmethod
    def path(cls, n: int) -> 'Graph':
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> 'Graph':
        edges = {(i, i + 1) for i in range(1, n)}
        if n >= 3:
            edges.add((1, n))
        return cls(n, frozenset(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._adjacency[i]

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def induced(self, subset: Iterable[int]) -> 'Graph':
        """诱导子图 G_J，按保序映射重新标号"""
        vertices = sorted(set(subset))
        for v in vertices:
            _check_vertex(v, self.n, "子集")
        position = {v: k + 1 for k, v in enumerate(vertices)}
        return Graph(len(vertices), frozenset(
            (position[i], position[j]) for i, j in self.edges if i in position and j in position
        ))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def components(self) -> List[Tuple[int, ...]]:
        """连通分支（按最小顶点排序）"""
        return sorted((tuple(sorted(c)) for c in nx.connected_components(self.to_networkx())), key=lambda c: c[0])

    def to_dict(self) -> Dict[str, Any]:
        """JSON 形式 {"n":5,"edges":[[1,2],[2,3]]}"""
        return {'n': self.n, 'edges': [list(edge) for edge in sorted(self.edges)]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Graph':
        try:
            return cls.from_edges(int(data['n']), [tuple(edge) for edge in data.get('edges', [])])
        except (KeyError, TypeError, ValueError) as e:
            raise ValidationError(f"图 JSON 格式错误: {e}")


@dataclass(frozen=True)
class Digraph:
    """
    有向图（允许自环）

    Attributes:
        n: 顶点数
        arcs: 有向边 (u, v)
    """
    n: int
    arcs: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        for u, v in self.arcs:
            _check_vertex(u, self.n, "有向边")
            _check_vertex(v, self.n, "有向边")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def indegree(self, v: int) -> int:
        """入度（不计自环）"""
        return sum(1 for a, b in self.arcs if b == v and a != v)

    def outdegree(self, v: int) -> int:
        """出度（不计自环）"""
        return sum(1 for a, b in self.arcs if a == v and a != b)

    def sources(self) -> List[int]:
        return [v for v in self.vertices if self.indegree(v) == 0]

    def sinks(self) -> List[int]:
        return [v for v in self.vertices if self.outdegree(v) == 0]

    def inv(self) -> int:
        """有向边 (j, i) 且 j > i 的个数"""
        return sum(1 for u, v in self.arcs if u > v)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arcs)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def underlying_edges(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.arcs if u != v)

    def reversed(self) -> 'Digraph':
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def induced(self, subset: Iterable[int]) -> 'Digraph':
        vertices = sorted(set(subset))
        position = {v: k + 1 for k, v in enumerate(vertices)}
        return Digraph(len(vertices), frozenset(
            (position[u], position[v]) for u, v in self.arcs if u in position and v in position
        ))

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'arcs': [list(arc) for arc in sorted(self.arcs)]}


@dataclass(frozen=True)
class Coloring:
    """
    顶点着色 κ: [n] → 正整数

    Attributes:
        colors: (κ(1), ..., κ(n))
    """
    colors: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 1 for c in self.colors):
            raise ValidationError(f"颜色必须是正整数: {self.colors}")

    def __call__(self, v: int) -> int:
        return self.colors[v - 1]

    def is_proper(self, graph: Graph) -> bool:
        return all(self(i) != self(j) for i, j in graph.edges)

    def color_type(self) -> Composition:
        """类型 α：α_i 个顶点着第 i 种颜色（要求颜色 1..k 均被使用）"""
        k = max(self.colors, default=0)
        counts = [sum(1 for c in self.colors if c == i) for i in range(1, k + 1)]
        if any(c == 0 for c in counts):
            raise ValidationError(f"着色未使用全部颜色 1..{k}: {self.colors}")
        return Composition(tuple(counts))

    def inv(self, graph: Graph) -> int:
        """inv_G(κ)：边 i < j 且 κ(i) > κ(j) 的个数"""
        return sum(1 for i, j in graph.edges if self(i) > self(j))
