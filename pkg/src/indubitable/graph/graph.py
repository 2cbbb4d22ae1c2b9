"""图的表示

功能：
- 不可变的稠密 01 邻接矩阵
- 由边表构造
- 连通性 / 正则度 / 二部划分
- 距离矩阵 A_0..A_d
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import shortest_path

from indubitable.core.errors import InvalidGraphError, PreconditionError


@dataclass(frozen=True, eq=False)
class Graph:
    """简单无向图：n 个顶点，对称 01 邻接矩阵，对角线为 0

    顶点标号 0..n-1。构造后只读，可在线程之间共享。
    """

    n: int
    adj: np.ndarray

    def __post_init__(self):
        src = np.asarray(self.adj)
        if self.n < 1:
            raise InvalidGraphError(f"顶点数必须 ≥ 1: {self.n}")
        if not np.isin(src, (0, 1)).all():
            raise InvalidGraphError("邻接矩阵必须是 01 矩阵")
        adj = np.array(src, dtype=np.int64, copy=True)
        if adj.shape != (self.n, self.n):
            raise InvalidGraphError(f"邻接矩阵形状 {adj.shape} 与顶点数 {self.n} 不符")
        if not (adj == adj.T).all():
            i, j = np.argwhere(adj != adj.T)[0]
            raise InvalidGraphError(f"邻接矩阵不对称: ({i},{j})")
        if np.diag(adj).any():
            i = int(np.flatnonzero(np.diag(adj))[0])
            raise InvalidGraphError(f"顶点 {i} 有自环")
        adj.flags.writeable = False
        object.__setattr__(self, "adj", adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum() // 2)

    @property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def edges(self) -> List[Tuple[int, int]]:
        """按字典序列出边 (i<j)"""
        rows, cols = np.nonzero(np.triu(self.adj, 1))
        return [(int(i), int(j)) for i, j in zip(rows, cols)]

    def neighbors(self, x: int) -> List[int]:
        return [int(y) for y in np.flatnonzero(self.adj[x])]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class BasicProfile:
    """基本画像：连通性、正则度、二部划分"""

    connected: bool
    regular_degree: Optional[int]
    bipartition: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """由边表构造图，重复边合并

    Args:
        n: 顶点数
        edges: 顶点对序列

    Raises:
        InvalidGraphError: 端点越界或自环，消息里带上出错的边
    """
    if n < 1:
        raise InvalidGraphError(f"顶点数必须 ≥ 1: {n}")
    adj = np.zeros((n, n), dtype=np.int64)
    for edge in edges:
        u, v = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"边 ({u},{v}) 端点越界 [0,{n})")
        if u == v:
            raise InvalidGraphError(f"边 ({u},{v}) 是自环")
        adj[u, v] = adj[v, u] = 1
    return Graph(n, adj)


def basic_profile(g: Graph) -> BasicProfile:
    """连通性、正则度、二部划分（仅对连通图给出）"""
    nxg = g.to_networkx()
    connected = nx.is_connected(nxg)

    degrees = g.degrees
    regular_degree = int(degrees[0]) if (degrees == degrees[0]).all() else None

    bipartition = None
    if connected and g.n > 1 and nx.is_bipartite(nxg):
        coloring = nx.bipartite.color(nxg)
        side = coloring[0]
        first = tuple(sorted(x for x, c in coloring.items() if c == side))
        second = tuple(sorted(x for x, c in coloring.items() if c != side))
        bipartition = (first, second)

    return BasicProfile(connected=connected, regular_degree=regular_degree, bipartition=bipartition)


def distance_matrix(g: Graph) -> np.ndarray:
    """BFS 距离矩阵（整数），图必须连通"""
    dist = shortest_path(g.adj, method="D", directed=False, unweighted=True)
    if np.isinf(dist).any():
        raise PreconditionError("图不连通，距离矩阵无定义")
    return dist.astype(np.int64)


def distance_matrices(g: Graph) -> List[np.ndarray]:
    """距离-i 图的邻接矩阵 A_0=I, A_1=A, ..., A_d（d 为直径）"""
    dist = distance_matrix(g)
    diameter = int(dist.max())
    return [(dist == i).astype(np.int64) for i in range(diameter + 1)]
