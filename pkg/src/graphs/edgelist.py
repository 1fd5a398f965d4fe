from typing import List, Tuple
from src.core.exceptions import GraphFormatError, ParameterError
from src.graphs.graph import Graph


def parse_edge_list(text: str) -> Graph:
    """解析边表：首行为顶点数n，之后每行一个0起始的'u v'顶点对；'#'开头的行为注释"""
    lines = [
        (number, raw.split("#", 1)[0].strip())
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, content) for number, content in lines if content]
    if not lines:
        raise GraphFormatError("边表为空", 1)

    header_line, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise GraphFormatError(f"边表首行应为顶点数，实际为{header!r}", header_line) from None
    if n < 0:
        raise GraphFormatError(f"顶点数不能为负: {n}", header_line)

    edges: List[Tuple[int, int]] = []
    for number, content in lines[1:]:
        parts = content.split()
        if len(parts) != 2:
            raise GraphFormatError(f"每行应为两个顶点编号，实际为{content!r}", number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"顶点编号不是整数: {content!r}", number) from None
        if u == v:
            raise GraphFormatError(f"不允许自环: {u} {v}", number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"顶点编号超出范围0..{n - 1}: {u} {v}", number)
        edges.append((u, v))

    try:
        return Graph(n, edges)
    except ParameterError as e:
        raise GraphFormatError(str(e)) from e


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
