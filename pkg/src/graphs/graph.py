"""
简单无向图的表示
顶点编号为0..n-1，构造后不可变，可在并行任务之间安全共享
"""

from collections import deque
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
import numpy as np
from src.core.exceptions import ParameterError

Edge = Tuple[int, int]


class Graph:
    """简单无向图：无自环、无重边"""

    __slots__ = ("_n", "_edges", "_adjacency", "_arcs")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ParameterError(f"顶点数不能为负: {n}")
        normalized = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise ParameterError(f"不允许自环: {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"边({u}, {v})的端点超出范围0..{n - 1}")
            normalized.add((u, v) if u < v else (v, u))

        neighbors: List[List[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)

        self._n = n
        self._edges: FrozenSet[Edge] = frozenset(normalized)
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(row)) for row in neighbors)
        self._arcs: Optional[Tuple[np.ndarray, np.ndarray]] = None

    def __getstate__(self):
        return (self._n, sorted(self._edges))

    def __setstate__(self, state):
        n, edges = state
        Graph.__init__(self, n, edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edges or (v, u) in self._edges

    def directed_arcs(self) -> Tuple[np.ndarray, np.ndarray]:
        """每条无向边的两个方向，(tails, heads)两个int数组"""
        if self._arcs is None:
            ordered = self.sorted_edges()
            tails = np.fromiter((e[0] for e in ordered), dtype=np.int64, count=len(ordered))
            heads = np.fromiter((e[1] for e in ordered), dtype=np.int64, count=len(ordered))
            self._arcs = (np.concatenate([tails, heads]), np.concatenate([heads, tails]))
        return self._arcs

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self._n, self._n), dtype=np.int64)
        for u, v in self._edges:
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.sorted_edges()})"

    # 结构变换

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self._n, list(self._edges) + [(u, v)])

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """顶点v映射为permutation[v]"""
        if sorted(permutation) != list(range(self._n)):
            raise ParameterError("relabel需要0..n-1的一个排列")
        return Graph(self._n, ((permutation[u], permutation[v]) for u, v in self._edges))

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """返回诱导子图和重编号映射（子图顶点i对应原图顶点mapping[i]）"""
        mapping = sorted(set(vertices))
        index = {v: i for i, v in enumerate(mapping)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return Graph(len(mapping), edges), mapping


def degree(g: Graph, v: int) -> int:
    """顶点度数"""
    if not 0 <= v < g.n:
        raise ParameterError(f"顶点{v}超出范围0..{g.n - 1}")
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    return max((len(g.neighbors(v)) for v in range(g.n)), default=0)


def _bfs_order(g: Graph, root: int, seen: List[bool]) -> Iterator[int]:
    queue = deque([root])
    seen[root] = True
    while queue:
        u = queue.popleft()
        yield u
        for w in g.neighbors(u):
            if not seen[w]:
                seen[w] = True
                queue.append(w)


def connected_components(g: Graph) -> List[List[int]]:
    """连通分量，按最小顶点排序"""
    seen = [False] * g.n
    components = []
    for root in range(g.n):
        if not seen[root]:
            components.append(sorted(_bfs_order(g, root, seen)))
    return components


def component_labels(g: Graph) -> List[int]:
    labels = [0] * g.n
    for index, component in enumerate(connected_components(g)):
        for v in component:
            labels[v] = index
    return labels


def is_connected(g: Graph) -> bool:
    """图是否连通（空图视为连通）"""
    if g.n == 0:
        return True
    seen = [False] * g.n
    return sum(1 for _ in _bfs_order(g, 0, seen)) == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def cycle_vertices(g: Graph) -> List[int]:
    """反复删除度数<=1的顶点后剩下的顶点（2-核）"""
    remaining = [len(g.neighbors(v)) for v in range(g.n)]
    removed = [False] * g.n
    queue = deque(v for v in range(g.n) if remaining[v] <= 1)
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = True
        for w in g.neighbors(v):
            if not removed[w]:
                remaining[w] -= 1
                if remaining[w] <= 1:
                    queue.append(w)
    return [v for v in range(g.n) if not removed[v]]


def unicyclic_cycle_length(g: Graph) -> Optional[int]:
    """g是单圈图时返回圈长，否则返回None"""
    if g.n < 3 or g.edge_count != g.n or not is_connected(g):
        return None
    # 连通且|E| = n时恰有一个圈，2-核就是这个圈
    return len(cycle_vertices(g))
