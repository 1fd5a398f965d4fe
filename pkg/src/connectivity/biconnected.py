"""
双连通分量与割点（基于DFS low值的线性时间算法，迭代实现，避免递归深度限制）
"""

from typing import Dict, FrozenSet, List, Set, Tuple
from src.graphs.graph import Graph

Edge = Tuple[int, int]


class BiconnectedComponent:
    """一个双连通分量：顶点集合与边集合"""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices: FrozenSet[int], edges: FrozenSet[Edge]):
        self.vertices = vertices
        self.edges = edges

    @property
    def is_bridge(self) -> bool:
        return len(self.vertices) == 2

    def __repr__(self) -> str:
        return f"BiconnectedComponent(vertices={sorted(self.vertices)})"


class BiconnectedDecomposition:
    """双连通分解：分量列表、割点集合、边到分量的索引"""

    __slots__ = ("components", "articulation_points", "edge_component")

    def __init__(self, components: List[BiconnectedComponent], articulation_points: FrozenSet[int]):
        self.components = components
        self.articulation_points = articulation_points
        self.edge_component: Dict[Edge, int] = {
            edge: index for index, component in enumerate(components) for edge in component.edges
        }

    def component_of(self, u: int, v: int) -> int:
        return self.edge_component[(u, v) if u < v else (v, u)]

    def blocks(self, min_size: int = 3) -> List[BiconnectedComponent]:
        """顶点数不少于min_size的分量；只有这些分量内部的路径矩阵元素可能大于1"""
        return [c for c in self.components if len(c.vertices) >= min_size]


def biconnected_components(g: Graph) -> BiconnectedDecomposition:
    """计算双连通分量与割点"""
    n = g.n
    discovery = [-1] * n
    low = [0] * n
    clock = 0
    edge_stack: List[Edge] = []
    components: List[BiconnectedComponent] = []
    articulation: Set[int] = set()

    def pop_component(u: int, v: int) -> None:
        vertices: Set[int] = set()
        edges: Set[Edge] = set()
        while True:
            a, b = edge_stack.pop()
            vertices.update((a, b))
            edges.add((a, b) if a < b else (b, a))
            if (a, b) == (u, v):
                break
        components.append(BiconnectedComponent(frozenset(vertices), frozenset(edges)))

    for root in range(n):
        if discovery[root] != -1:
            continue
        discovery[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, neighbors = stack[-1]
            descended = False
            for w in neighbors:
                if discovery[w] == -1:
                    edge_stack.append((u, w))
                    discovery[w] = low[w] = clock
                    clock += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    descended = True
                    break
                if w != parent and discovery[w] < discovery[u]:
                    # 回边
                    edge_stack.append((u, w))
                    low[u] = min(low[u], discovery[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= discovery[p]:
                if p != root:
                    articulation.add(p)
                pop_component(p, u)
        if root_children > 1:
            articulation.add(root)

    return BiconnectedDecomposition(components, frozenset(articulation))
