"""
图族生成器：路径、圈、完全图、星图、单圈图U(n,k)及随机连通图
"""

from typing import List, Optional, Tuple
import numpy as np
from src.core.config import settings
from src.core.exceptions import ParameterError
from src.core.models import AttachmentShape, FamilyKind, GraphFamily
from src.graphs.graph import Graph


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"圈至少需要3个顶点: n={n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for j in range(n) for i in range(j)))


def star(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"星图至少需要1个顶点: n={n}")
    return Graph(n, ((0, leaf) for leaf in range(1, n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def triangle_chain(triangles: int) -> Graph:
    """triangles个三角形依次共用一个顶点连成一串，顶点数2t+1"""
    if triangles < 1:
        raise ParameterError(f"至少需要一个三角形: {triangles}")
    edges: List[Tuple[int, int]] = []
    for t in range(triangles):
        a, b, c = 2 * t, 2 * t + 1, 2 * t + 2
        edges += [(a, b), (b, c), (a, c)]
    return Graph(2 * triangles + 1, edges)


def unicyclic(n: int, k: int, shape: AttachmentShape = AttachmentShape.PENDANT_PATH,
              seed: Optional[int] = None) -> Graph:
    """圈0..k-1，其余n-k个树顶点按shape挂在圈上"""
    if not 3 <= k <= n:
        raise ParameterError(f"单圈图要求3 <= k <= n，实际n={n}, k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    if shape == AttachmentShape.PENDANT_PATH:
        previous = 0
        for v in range(k, n):
            edges.append((previous, v))
            previous = v
    elif shape == AttachmentShape.PENDANT_STAR:
        edges += [(0, v) for v in range(k, n)]
    else:
        rng = np.random.default_rng(settings.default_seed if seed is None else seed)
        # 每个树顶点挂到任意一个更早的顶点上，不会产生新的圈
        edges += [(int(rng.integers(0, v)), v) for v in range(k, n)]
    return Graph(n, edges)


def random_connected(n: int, m: Optional[int] = None, seed: Optional[int] = None) -> Graph:
    """随机生成树加上均匀选取的额外边，共m条边；m缺省时随机选取"""
    if n < 1:
        raise ParameterError(f"随机连通图至少需要1个顶点: n={n}")
    rng = np.random.default_rng(settings.default_seed if seed is None else seed)
    max_edges = n * (n - 1) // 2
    if m is None:
        m = int(rng.integers(n - 1, max_edges + 1))
    if not n - 1 <= m <= max_edges:
        raise ParameterError(f"n={n}的连通简单图的边数应在{n - 1}..{max_edges}之间，实际m={m}")

    order = rng.permutation(n)
    tree = {
        tuple(sorted((int(order[i]), int(order[rng.integers(0, i)]))))
        for i in range(1, n)
    }
    rows, cols = np.triu_indices(n, k=1)
    candidates = [
        (int(u), int(v)) for u, v in zip(rows, cols) if (int(u), int(v)) not in tree
    ]
    extra = m - len(tree)
    chosen = rng.choice(len(candidates), size=extra, replace=False) if extra else []
    return Graph(n, list(tree) + [candidates[int(index)] for index in sorted(chosen)])


def generate(family: GraphFamily) -> Graph:
    """按图族参数生成图"""
    kind = family.kind
    if kind == FamilyKind.PATH:
        return path(family.n)
    if kind == FamilyKind.CYCLE:
        return cycle(family.n)
    if kind == FamilyKind.COMPLETE:
        return complete(family.n)
    if kind == FamilyKind.STAR:
        return star(family.n)
    if kind == FamilyKind.UNICYCLIC:
        if family.k is None:
            raise ParameterError("单圈图需要参数k")
        return unicyclic(family.n, family.k, family.shape, family.seed)
    if kind == FamilyKind.RANDOM:
        return random_connected(family.n, family.m, family.seed)
    if kind == FamilyKind.TRIANGLE_CHAIN:
        return triangle_chain(family.n)
    raise ParameterError(f"未知图族: {kind}")
