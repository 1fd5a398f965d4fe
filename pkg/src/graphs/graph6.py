"""
graph6格式的编解码
格式：顶点数头部 N(n)，随后按列优先顺序排列的上三角邻接位（x(0,1), x(0,2), x(1,2), x(0,3), ...），
每6位打包为一个字符并加63。n <= 62时头部为单字符chr(63+n)，更大的n使用4字节或8字节长头部。
"""

from typing import Iterator, List, Tuple
from src.core.exceptions import GraphFormatError
from src.graphs.graph import Graph

HEADER = ">>graph6<<"
_MIN_CHAR = 63
_MAX_CHAR = 126
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047
_LONG_LIMIT = 68719476735


def _encode_size(n: int) -> str:
    if n <= _SHORT_LIMIT:
        return chr(_MIN_CHAR + n)
    if n <= _MEDIUM_LIMIT:
        return chr(_MAX_CHAR) + "".join(chr(_MIN_CHAR + ((n >> shift) & 0x3F)) for shift in (12, 6, 0))
    if n <= _LONG_LIMIT:
        return chr(_MAX_CHAR) * 2 + "".join(
            chr(_MIN_CHAR + ((n >> shift) & 0x3F)) for shift in (30, 24, 18, 12, 6, 0)
        )
    raise GraphFormatError(f"graph6无法表示{n}个顶点")


def _decode_size(data: str, base: int) -> Tuple[int, int]:
    """返回(n, 头部长度)，base是data在原始文本中的偏移"""
    if not data:
        raise GraphFormatError("graph6串为空", base)
    if data[0] != chr(_MAX_CHAR):
        return ord(data[0]) - _MIN_CHAR, 1
    if len(data) >= 2 and data[1] == chr(_MAX_CHAR):
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphFormatError("graph6长头部被截断", base + len(data))
    n = 0
    for ch in data[start:start + width]:
        n = (n << 6) | (ord(ch) - _MIN_CHAR)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """解析单个graph6编码的图"""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)

    for position, ch in enumerate(line):
        if not _MIN_CHAR <= ord(ch) <= _MAX_CHAR:
            raise GraphFormatError(f"graph6字符{ch!r}超出范围", base + position)

    n, header_length = _decode_size(line, base)
    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = line[header_length:]
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6数据长度错误：n={n}需要{expected}个字符，实际{len(body)}个",
            base + header_length + min(len(body), expected),
        )

    edges: List[Tuple[int, int]] = []
    bit_index = 0
    i, j = 0, 1
    for position, ch in enumerate(body):
        value = ord(ch) - _MIN_CHAR
        for shift in range(5, -1, -1):
            bit = (value >> shift) & 1
            if bit_index >= bit_count:
                if bit:
                    raise GraphFormatError("graph6填充位非零", base + header_length + position)
                continue
            if bit:
                edges.append((i, j))
            bit_index += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """把图编码为graph6串（不带>>graph6<<头部）"""
    chunks = [_encode_size(g.n)]
    value = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | int(g.has_edge(i, j))
            filled += 1
            if filled == 6:
                chunks.append(chr(_MIN_CHAR + value))
                value, filled = 0, 0
    if filled:
        chunks.append(chr(_MIN_CHAR + (value << (6 - filled))))
    return "".join(chunks)


def read_graph6_stream(text: str) -> Iterator[Graph]:
    """逐行解析graph6流，空行跳过"""
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)


def looks_like_graph6(line: str) -> bool:
    """判断首行是否是graph6（边表首行是数字，字符都小于63）"""
    stripped = line.strip()
    if stripped.startswith(HEADER):
        return True
    return bool(stripped) and all(_MIN_CHAR <= ord(ch) <= _MAX_CHAR for ch in stripped)
