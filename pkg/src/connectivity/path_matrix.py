"""
路径矩阵P(G)：p_ij为i、j之间内部顶点不相交路径的最大条数，对角线为0

双连通预处理：只有同属一个顶点数>=3的双连通分量的顶点对才可能p_ij > 1，
这类顶点对只在该分量的诱导子图上求最大流；其余连通的顶点对直接取1，不连通取0。
"""

import json
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple
import numpy as np
from src.core.config import settings
from src.core.exceptions import ParameterError
from src.core.logger import LoggerMixin
from src.core.models import FlowEngine
from src.connectivity.biconnected import biconnected_components
from src.connectivity.flow import max_disjoint_paths
from src.graphs.graph import Graph, component_labels

Pair = Tuple[int, int]


class PathMatrix:
    """对称非负整数矩阵，对角线为0"""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        entries = np.asarray(entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ParameterError(f"路径矩阵必须是方阵，实际形状{entries.shape}")
        if not np.array_equal(entries, entries.T):
            raise ParameterError("路径矩阵必须对称")
        if np.any(np.diag(entries) != 0):
            raise ParameterError("路径矩阵对角线必须为0")
        if np.any(entries < 0):
            raise ParameterError("路径矩阵元素必须非负")
        self.entries = entries

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    def __getitem__(self, index: Pair) -> int:
        return int(self.entries[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __repr__(self) -> str:
        return f"PathMatrix({self.entries.tolist()})"

    def square_sum(self) -> int:
        """所有元素的平方和，等于tr(P^2)"""
        return int(np.sum(self.entries * self.entries))

    def block_relabel(self, order: Sequence[int]) -> "PathMatrix":
        """按新顺序重排顶点：新矩阵的(a, b)元素为原矩阵的(order[a], order[b])元素"""
        index = np.asarray(order, dtype=np.int64)
        return PathMatrix(self.entries[np.ix_(index, index)])

    def to_tsv(self) -> str:
        rows = [str(self.order)] + ["\t".join(str(x) for x in row) for row in self.entries.tolist()]
        return "\n".join(rows) + "\n"

    def to_json(self) -> str:
        return json.dumps({"n": self.order, "p": self.entries.ravel().tolist()})


def _solve_pairs(task: Tuple[Graph, List[Pair], str]) -> List[int]:
    graph, pairs, engine = task
    return [max_disjoint_paths(graph, s, t, FlowEngine(engine)) for s, t in pairs]


class PathMatrixBuilder(LoggerMixin):
    """全体顶点对的路径矩阵计算；各顶点对相互独立，可并行，结果与worker数无关"""

    def __init__(self, engine: Optional[FlowEngine] = None, use_biconnected: Optional[bool] = None,
                 workers: Optional[int] = None):
        super().__init__()
        self.engine = FlowEngine(engine or settings.flow_engine)
        self.use_biconnected = (
            settings.biconnected_preprocessing if use_biconnected is None else use_biconnected
        )
        self.workers = max(1, workers or settings.workers)

    def _tasks(self, g: Graph) -> Tuple[np.ndarray, List[Tuple[Graph, List[Pair], List[Pair]]]]:
        """返回预填充的矩阵和待求流的任务（子图、子图中的顶点对、原图中的顶点对）"""
        entries = np.zeros((g.n, g.n), dtype=np.int64)
        tasks: List[Tuple[Graph, List[Pair], List[Pair]]] = []
        if not self.use_biconnected:
            pairs = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)]
            if pairs:
                tasks.append((g, pairs, pairs))
            return entries, tasks

        labels = np.asarray(component_labels(g), dtype=np.int64)
        entries[labels[:, None] == labels[None, :]] = 1
        np.fill_diagonal(entries, 0)

        decomposition = biconnected_components(g)
        blocks = decomposition.blocks(min_size=3)
        self.log_debug("双连通预处理", blocks=len(blocks),
                       articulation_points=len(decomposition.articulation_points))
        for block in sorted(blocks, key=lambda b: min(b.vertices)):
            subgraph, mapping = g.induced_subgraph(block.vertices)
            local = [(a, b) for a in range(subgraph.n) for b in range(a + 1, subgraph.n)]
            tasks.append((subgraph, local, [(mapping[a], mapping[b]) for a, b in local]))
        return entries, tasks

    def _chunks(self, tasks) -> List[Tuple[Graph, List[Pair], str, List[Pair]]]:
        total = sum(len(local) for _, local, _ in tasks)
        size = max(1, -(-total // (self.workers * 4)))
        chunks = []
        for subgraph, local, original in tasks:
            for start in range(0, len(local), size):
                chunks.append((subgraph, local[start:start + size], self.engine.value,
                               original[start:start + size]))
        return chunks

    def build(self, g: Graph) -> PathMatrix:
        with self.log_duration("路径矩阵计算完成", n=g.n, edges=g.edge_count, engine=self.engine.value,
                               biconnected=self.use_biconnected, workers=self.workers) as summary:
            entries, tasks = self._tasks(g)
            chunks = self._chunks(tasks)
            payloads = [(subgraph, local, engine) for subgraph, local, engine, _ in chunks]

            if self.workers == 1 or len(chunks) <= 1:
                results = [_solve_pairs(payload) for payload in payloads]
            else:
                with ProcessPoolExecutor(max_workers=self.workers) as executor:
                    results = list(executor.map(_solve_pairs, payloads))

            flows = 0
            for (_, _, _, original), values in zip(chunks, results):
                for (i, j), value in zip(original, values):
                    entries[i, j] = entries[j, i] = value
                    flows += 1
            summary["flows"] = flows
        return PathMatrix(entries)


def path_matrix(g: Graph, use_biconnected: Optional[bool] = None, workers: Optional[int] = None,
                engine: Optional[FlowEngine] = None) -> PathMatrix:
    """计算图的路径矩阵"""
    return PathMatrixBuilder(engine=engine, use_biconnected=use_biconnected, workers=workers).build(g)
