"""
顶点拆分网络与单位容量最大流

除s、t外的每个顶点v拆成v_in -> v_out（容量1），无向边{u, v}变成u_out -> v_in和v_out -> u_in两条弧。
s只保留s_out作为源点，t只保留t_in作为汇点。最大流的值就是s、t之间内部顶点不相交路径的最大条数。
"""

from collections import deque
from typing import List, Optional
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow
from src.core.config import settings
from src.core.exceptions import ParameterError
from src.core.models import FlowEngine
from src.graphs.graph import Graph


SOURCE = 0
SINK = 1


class FlowNetwork:
    """有向单位容量网络；残量状态由各次最大流计算私有持有"""

    __slots__ = ("node_count", "source", "sink", "tails", "heads", "node_labels")

    def __init__(self, node_count: int, tails: np.ndarray, heads: np.ndarray,
                 node_labels: List[str], source: int = SOURCE, sink: int = SINK):
        self.node_count = node_count
        self.source = source
        self.sink = sink
        self.tails = tails
        self.heads = heads
        self.node_labels = node_labels

    @property
    def arc_count(self) -> int:
        return int(self.tails.shape[0])

    def arcs(self) -> List[tuple]:
        """以节点标签表示的弧列表，例如('0_out', '1_in')"""
        return [
            (self.node_labels[int(u)], self.node_labels[int(v)])
            for u, v in zip(self.tails, self.heads)
        ]

    def augmentation_bound(self) -> int:
        """min(源点出度, 汇点入度)，流值不可能超过它"""
        return min(
            int(np.count_nonzero(self.tails == self.source)),
            int(np.count_nonzero(self.heads == self.sink)),
        )


def _check_pair(g: Graph, s: int, t: int) -> None:
    if s == t:
        raise ParameterError(f"源点和汇点必须不同: s=t={s}")
    for v in (s, t):
        if not 0 <= v < g.n:
            raise ParameterError(f"顶点{v}超出范围0..{g.n - 1}")


def split_transform(g: Graph, s: int, t: int, prune_terminal_arcs: bool = True) -> FlowNetwork:
    """为(s, t)构造顶点拆分网络

    prune_terminal_arcs为True时省略进入s_out和离开t_in的弧（它们永远不会有流量），
    为False时保留全部(n-2) + 2|E|条弧。两者的最大流相同。
    """
    _check_pair(g, s, t)
    n = g.n
    others = np.array([v for v in range(n) if v != s and v != t], dtype=np.int64)
    ranks = np.arange(others.shape[0], dtype=np.int64)

    in_index = np.full(n, -1, dtype=np.int64)
    out_index = np.full(n, -1, dtype=np.int64)
    in_index[others] = 2 + 2 * ranks
    out_index[others] = 3 + 2 * ranks
    out_index[s] = SOURCE
    in_index[t] = SINK
    # s、t不拆分：未剪枝时进入s的弧落在s_out上，离开t的弧从t_in出发
    in_index[s] = SOURCE
    out_index[t] = SINK

    edge_tails, edge_heads = g.directed_arcs()
    if prune_terminal_arcs:
        keep = (edge_heads != s) & (edge_tails != t)
        edge_tails, edge_heads = edge_tails[keep], edge_heads[keep]

    tails = np.concatenate([in_index[others], out_index[edge_tails]])
    heads = np.concatenate([out_index[others], in_index[edge_heads]])

    labels = [f"{s}_out", f"{t}_in"]
    for v in others.tolist():
        labels += [f"{v}_in", f"{v}_out"]
    return FlowNetwork(2 + 2 * int(others.shape[0]), tails, heads, labels)


def _max_flow_bfs(net: FlowNetwork, bound: int) -> int:
    """残量网络上反复用BFS找最短增广路，每次增广1个单位"""
    # 弧i的正向残量弧编号为2i，反向为2i+1
    head: List[int] = []
    capacity: List[int] = []
    adjacency: List[List[int]] = [[] for _ in range(net.node_count)]
    for u, v in zip(net.tails.tolist(), net.heads.tolist()):
        adjacency[u].append(len(head))
        head.append(v)
        capacity.append(1)
        adjacency[v].append(len(head))
        head.append(u)
        capacity.append(0)

    source, sink = net.source, net.sink
    flow = 0
    while flow < bound:
        parent_arc = [-1] * net.node_count
        parent_arc[source] = -2
        queue = deque([source])
        reached = False
        while queue and not reached:
            u = queue.popleft()
            for arc in adjacency[u]:
                v = head[arc]
                if capacity[arc] and parent_arc[v] == -1:
                    parent_arc[v] = arc
                    if v == sink:
                        reached = True
                        break
                    queue.append(v)
        if not reached:
            break
        v = sink
        while v != source:
            arc = parent_arc[v]
            capacity[arc] -= 1
            capacity[arc ^ 1] += 1
            v = head[arc ^ 1]
        flow += 1
    return flow


def _max_flow_scipy(net: FlowNetwork) -> int:
    ones = np.ones(net.arc_count, dtype=np.int32)
    graph = csr_matrix((ones, (net.tails, net.heads)), shape=(net.node_count, net.node_count))
    return int(maximum_flow(graph, net.source, net.sink, method="edmonds_karp").flow_value)


def max_flow_unit(net: FlowNetwork, engine: Optional[FlowEngine] = None) -> int:
    """单位容量网络的最大s-t流（最短增广路）"""
    engine = FlowEngine(engine or settings.flow_engine)
    bound = net.augmentation_bound()
    if bound == 0:
        return 0
    if engine == FlowEngine.SCIPY:
        return _max_flow_scipy(net)
    return _max_flow_bfs(net, bound)


def max_disjoint_paths(g: Graph, s: int, t: int, engine: Optional[FlowEngine] = None) -> int:
    """s、t之间内部顶点不相交路径的最大条数；不连通时为0"""
    return max_flow_unit(split_transform(g, s, t), engine)
