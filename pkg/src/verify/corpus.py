"""
验证语料：graph6流、单圈图族扫描、小图穷举和带种子的随机连通图样本

语料描述串（命令行使用）：
    exhaustive:MAX_N
    unicyclic:N_MIN..N_MAX
    random:COUNT:N[:SEED]
    graph6:PATH          PATH为"-"时读取标准输入
"""

import sys
from enum import Enum
from pathlib import Path
from typing import Iterable, List, Optional, Tuple
import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from src.core.config import settings
from src.core.exceptions import ParameterError, PathSpecError
from src.core.logger import LoggerMixin
from src.core.models import AttachmentShape
from src.graphs.generators import cycle, random_connected, unicyclic
from src.graphs.graph import Graph, is_connected
from src.graphs.graph6 import read_graph6_stream


class CorpusSource(str, Enum):
    """语料来源"""
    GRAPH6 = "graph6"
    UNICYCLIC = "unicyclic"
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class CorpusGraph(BaseModel):
    """语料中的一个图"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    graph_id: str = Field(description="图ID，报告按它排序合并")
    graph: Graph = Field(description="图")


class Corpus(BaseModel):
    """图语料；固定种子下完全确定"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    source: CorpusSource = Field(description="语料来源")
    description: str = Field(description="语料描述串")
    seed: Optional[int] = Field(default=None, description="随机种子")
    connected_only: bool = Field(default=True, description="是否只保留连通图")
    min_n: Optional[int] = Field(default=None, description="顶点数下限")
    max_n: Optional[int] = Field(default=None, description="顶点数上限")
    entries: List[CorpusGraph] = Field(default_factory=list, description="语料中的图")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def graphs(self) -> List[Graph]:
        return [entry.graph for entry in self.entries]

    def orders(self) -> List[int]:
        """语料中出现的不同顶点数，升序"""
        return sorted({entry.graph.n for entry in self.entries})

    @classmethod
    def parse(cls, spec: str) -> "Corpus":
        return CorpusLoader().parse(spec)


def _connected_bitmask(n: int, adjacency: List[int]) -> bool:
    reached = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        grown = 0
        v = 0
        bits = frontier
        while bits:
            if bits & 1:
                grown |= adjacency[v]
            bits >>= 1
            v += 1
        frontier = grown & ~reached
        reached |= grown
    return reached == full


def _connected_graphs_on(n: int) -> Iterable[Tuple[int, Graph]]:
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adjacency = [0] * n
        edges = []
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
                edges.append((i, j))
        if _connected_bitmask(n, adjacency):
            yield mask, Graph(n, edges)


class CorpusLoader(LoggerMixin):
    """语料构建器"""

    def __init__(self, connected_only: bool = True, min_n: Optional[int] = None,
                 max_n: Optional[int] = None):
        super().__init__()
        self.connected_only = connected_only
        self.min_n = min_n
        self.max_n = max_n

    def _finish(self, source: CorpusSource, description: str, entries: List[CorpusGraph],
                seed: Optional[int] = None) -> Corpus:
        kept: List[CorpusGraph] = []
        for entry in entries:
            g = entry.graph
            if self.connected_only and not is_connected(g):
                self.log_info("过滤掉不连通的图", graph_id=entry.graph_id, n=g.n)
                continue
            if (self.min_n is not None and g.n < self.min_n) or (self.max_n is not None and g.n > self.max_n):
                self.log_info("过滤掉超出规模范围的图", graph_id=entry.graph_id, n=g.n)
                continue
            kept.append(entry)
        self.log_info("语料构建完成", source=source.value, description=description,
                      size=len(kept), dropped=len(entries) - len(kept))
        return Corpus(
            source=source,
            description=description,
            seed=seed,
            connected_only=self.connected_only,
            min_n=self.min_n,
            max_n=self.max_n,
            entries=kept,
        )

    def exhaustive(self, max_n: int) -> Corpus:
        """按邻接位掩码穷举不超过max_n个顶点的全部带标号连通图（允许同构重复）"""
        limit = settings.exhaustive_max_n
        if not 1 <= max_n <= limit:
            raise ParameterError(f"穷举只支持1 <= max_n <= {limit}，实际{max_n}")
        entries = [
            CorpusGraph(graph_id=f"E(n={n},mask={mask})", graph=g)
            for n in range(1, max_n + 1)
            for mask, g in _connected_graphs_on(n)
        ]
        return self._finish(CorpusSource.EXHAUSTIVE, f"exhaustive:{max_n}", entries)

    def unicyclic_sweep(self, n_min: int, n_max: int,
                        shapes: Optional[List[AttachmentShape]] = None,
                        seed: Optional[int] = None) -> Corpus:
        """3 <= k <= n的全部U(n,k)，每个(n,k)取三种挂接方式；k = n时只有C_n"""
        if n_min > n_max:
            raise ParameterError(f"范围为空: {n_min}..{n_max}")
        shapes = list(AttachmentShape) if shapes is None else shapes
        seed = settings.default_seed if seed is None else seed
        entries: List[CorpusGraph] = []
        for n in range(max(3, n_min), n_max + 1):
            for k in range(3, n):
                for shape in shapes:
                    entries.append(CorpusGraph(
                        graph_id=f"U({n},{k},{shape.value})",
                        graph=unicyclic(n, k, shape, seed=seed + n * 1000 + k),
                    ))
            entries.append(CorpusGraph(graph_id=f"C({n})", graph=cycle(n)))
        return self._finish(CorpusSource.UNICYCLIC, f"unicyclic:{n_min}..{n_max}", entries, seed)

    def random_sample(self, count: int, n: int, seed: Optional[int] = None) -> Corpus:
        if count < 1:
            raise ParameterError(f"样本数必须为正: {count}")
        seed = settings.default_seed if seed is None else seed
        rng = np.random.default_rng(seed)
        graph_seeds = rng.integers(0, 2**31 - 1, size=count)
        entries = [
            CorpusGraph(graph_id=f"R(n={n},i={i})", graph=random_connected(n, seed=int(graph_seed)))
            for i, graph_seed in enumerate(graph_seeds)
        ]
        return self._finish(CorpusSource.RANDOM, f"random:{count}:{n}:{seed}", entries, seed)

    def graph6(self, text: str, description: str = "graph6:-") -> Corpus:
        entries = [
            CorpusGraph(graph_id=f"G{index}", graph=g)
            for index, g in enumerate(read_graph6_stream(text))
        ]
        return self._finish(CorpusSource.GRAPH6, description, entries)

    def parse(self, spec: str) -> Corpus:
        """解析语料描述串"""
        kind, _, rest = spec.partition(":")
        try:
            if kind == CorpusSource.EXHAUSTIVE.value:
                return self.exhaustive(int(rest))
            if kind == CorpusSource.UNICYCLIC.value:
                low, sep, high = rest.partition("..")
                if not sep:
                    raise ParameterError(f"单圈图范围应为N_MIN..N_MAX: {spec}")
                return self.unicyclic_sweep(int(low), int(high))
            if kind == CorpusSource.RANDOM.value:
                parts = rest.split(":")
                if len(parts) not in (2, 3):
                    raise ParameterError(f"随机语料应为random:COUNT:N[:SEED]: {spec}")
                seed = int(parts[2]) if len(parts) == 3 else None
                return self.random_sample(int(parts[0]), int(parts[1]), seed)
            if kind == CorpusSource.GRAPH6.value:
                if not rest:
                    raise ParameterError("graph6语料需要文件路径或-")
                text = sys.stdin.read() if rest == "-" else Path(rest).read_text(encoding="ascii")
                return self.graph6(text, spec)
        except PathSpecError:
            raise
        except ValueError as e:
            raise ParameterError(f"无法解析语料描述串{spec!r}: {e}") from e
        except OSError as e:
            raise ParameterError(f"无法读取语料文件{rest!r}: {e}") from e
        raise ParameterError(f"未知语料来源: {kind!r}")


def exhaustive_small_graphs(max_n: int) -> Corpus:
    """不超过max_n（<= 7）个顶点的全部带标号连通图"""
    return CorpusLoader().exhaustive(max_n)
