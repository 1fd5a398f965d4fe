"""
内部点不交路径数的暴力求解

与最大流归约无关：先枚举全部简单s-t路径，把每条路径的内部点集合记为位掩码，
再对可用顶点集合做带记忆的回溯，求两两内部不交的最大路径族。
"""

from typing import Dict, List, Optional, Set
from src.core.config import settings
from src.core.exceptions import ParameterError, ScaleGuardError
from src.core.logger import get_logger
from src.graphs.graph import Graph

logger = get_logger(__name__)


def simple_path_interiors(g: Graph, s: int, t: int, cap: Optional[int] = None) -> Set[int]:
    """所有简单s-t路径内部点集合的位掩码（去重）；直接边对应0"""
    cap = settings.oracle_path_cap if cap is None else cap
    interiors: Set[int] = set()
    found = 0
    # 栈元素：(当前顶点, 已访问掩码, 内部点掩码, 下一个待试邻居的下标)
    stack = [(s, 1 << s, 0, 0)]
    while stack:
        v, visited, interior, index = stack.pop()
        neighbors = g.neighbors(v)
        if index >= len(neighbors):
            continue
        stack.append((v, visited, interior, index + 1))
        w = neighbors[index]
        if visited >> w & 1:
            continue
        if w == t:
            found += 1
            if found > cap:
                raise ScaleGuardError(f"简单路径数超过上限{cap}（n={g.n}, s={s}, t={t}）")
            interiors.add(interior)
            continue
        stack.append((w, visited | 1 << w, interior | 1 << w, 0))
    return interiors


def _minimal(masks: Set[int]) -> List[int]:
    """去掉包含其他内部点集合的掩码，它们不会让最优解变大"""
    ordered = sorted(masks, key=lambda m: (bin(m).count("1"), m))
    kept: List[int] = []
    for mask in ordered:
        if not any(other & mask == other for other in kept):
            kept.append(mask)
    return kept


def _max_disjoint_family(masks: List[int], available: int) -> int:
    memo: Dict[int, int] = {}

    def best(free: int) -> int:
        if free in memo:
            return memo[free]
        usable = [m for m in masks if m & free == m]
        if not usable:
            memo[free] = 0
            return 0
        lowest = free & -free
        # 最低位顶点要么不用，要么被某条恰好经过它的路径占用
        result = best(free & ~lowest)
        for mask in usable:
            if mask & lowest:
                result = max(result, 1 + best(free & ~mask))
        memo[free] = result
        return result

    return best(available)


def oracle_disjoint_paths(g: Graph, s: int, t: int, cap: Optional[int] = None) -> int:
    """s与t之间内部点不交路径的最大条数（指数时间，n <= oracle_max_n）"""
    if g.n > settings.oracle_max_n:
        raise ParameterError(f"暴力求解只支持n <= {settings.oracle_max_n}，实际n={g.n}")
    for v in (s, t):
        if not 0 <= v < g.n:
            raise ParameterError(f"顶点{v}超出范围0..{g.n - 1}")
    if s == t:
        raise ParameterError(f"源点与汇点相同: {s}")

    interiors = simple_path_interiors(g, s, t, cap)
    direct = 1 if 0 in interiors else 0
    interiors.discard(0)
    if not interiors:
        return direct
    available = ((1 << g.n) - 1) & ~(1 << s) & ~(1 << t)
    return direct + _max_disjoint_family(_minimal(interiors), available)
