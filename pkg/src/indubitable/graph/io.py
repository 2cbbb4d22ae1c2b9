"""图与划分的文本格式

- graph6：每行一个图，6 位编码，偏移 63（nauty / geng 的输出格式）
- 边表：首行 "n m"，随后 m 行 "u v"
- 划分：每行一个格子，空格分隔的顶点标号
"""
from typing import Iterable, Iterator, List, Sequence, TextIO, Tuple, Union

import networkx as nx

from indubitable.core.errors import GraphFormatError, InvalidGraphError
from indubitable.graph.graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def write_graph6(g: Graph) -> str:
    """编码为 graph6（不带换行）"""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n").decode("ascii")


def _validate_graph6(data: bytes, base: int) -> None:
    """networkx 解码前的逐字节校验，错误带 0 起始的字节偏移"""
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"非法字节 {byte!r}，graph6 字节须在 63..126", offset=base + pos)

    if not data:
        raise GraphFormatError("空的 graph6 串", offset=base)

    if data[0] == 126:
        start, width = (2, 6) if len(data) > 1 and data[1] == 126 else (1, 3)
        if len(data) < start + width:
            raise GraphFormatError("长度头残缺", offset=base + len(data))
        n = 0
        for byte in data[start:start + width]:
            n = (n << 6) | (byte - 63)
        pos = start + width
    else:
        n = data[0] - 63
        pos = 1

    if n < 1:
        raise GraphFormatError("graph6 声明了 0 个顶点", offset=base)

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != expected:
        raise GraphFormatError(
            f"长度头声明 {n} 个顶点，需要 {expected} 个载荷字节，实际 {len(payload)} 个",
            offset=base + pos + min(len(payload), expected),
        )

    pad = 6 * expected - nbits
    if pad and (payload[-1] - 63) & ((1 << pad) - 1):
        raise GraphFormatError("末尾填充位非零", offset=base + len(data) - 1)


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """解码一行 graph6

    Raises:
        GraphFormatError: 长度头残缺、字节越界、载荷长度不符、填充位非零，
            带 0 起始的字节偏移
    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphFormatError("graph6 只允许 ASCII 字符", offset=e.start) from e
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")

    base = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        base = len(GRAPH6_HEADER)
        data = data[base:]

    _validate_graph6(data, base)
    h = nx.from_graph6_bytes(data)
    return build_graph(h.number_of_nodes(), h.edges())


def read_graph6_lines(stream: Iterable[Union[str, bytes]]) -> Iterator[Tuple[int, str]]:
    """逐行读取 graph6 流，返回 (行号, 内容)，跳过空行；行号从 1 开始"""
    for line_no, line in enumerate(stream, 1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        line = line.strip()
        if line:
            yield line_no, line


def parse_edge_list(stream: Union[TextIO, Iterable[str]]) -> Graph:
    """读取边表：首行 "n m"，随后 m 行 "u v"；# 开头为注释"""
    lines = [
        (line_no, line.split())
        for line_no, line in enumerate(stream, 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError("空的边表")

    header_no, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError("首行应为 \"n m\"", line=header_no)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as e:
        raise GraphFormatError("首行 n, m 必须是整数", line=header_no) from e

    edges = []
    for line_no, tokens in lines[1:]:
        if len(tokens) != 2:
            raise GraphFormatError("边行应为 \"u v\"", line=line_no)
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError as e:
            raise GraphFormatError("顶点标号必须是整数", line=line_no) from e
    if len(edges) != m:
        raise GraphFormatError(f"首行声明 {m} 条边，实际 {len(edges)} 条", line=header_no)

    try:
        return build_graph(n, edges)
    except InvalidGraphError as e:
        raise GraphFormatError(str(e)) from e


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_partition(stream: Union[TextIO, Iterable[str]]) -> List[List[int]]:
    """读取划分文件：每行一个格子"""
    cells = []
    for line_no, line in enumerate(stream, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            cells.append([int(x) for x in line.split()])
        except ValueError as e:
            raise GraphFormatError("顶点标号必须是整数", line=line_no) from e
    return cells


def write_partition(cells: Sequence[Sequence[int]]) -> str:
    return "".join(" ".join(str(x) for x in cell) + "\n" for cell in cells)
