"""图族与图变换

所有构造都给出确定的顶点顺序，测试可以直接比较矩阵：
- 笛卡尔积 / Kronecker 积按行优先：顶点 (i, j) ↦ i·n_h + j
- 完全多部图各部依次连续编号
- 二部双图：顶点 (s, x) ↦ s·n + x，s ∈ {0, 1}
"""
import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Dict, Sequence, Tuple

import numpy as np

from indubitable.core.errors import FamilyError
from indubitable.graph.graph import Graph, build_graph


def _complete_adj(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)


def complete(n: int) -> Graph:
    """完全图 K_n"""
    return Graph(n, _complete_adj(n))


def cycle(n: int) -> Graph:
    """圈 C_n，顶点 i 与 i±1 (mod n) 相邻"""
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """完全多部图：两端点在不同部时相邻"""
    labels = np.repeat(np.arange(len(sizes)), sizes)
    adj = (labels[:, None] != labels[None, :]).astype(np.int64)
    return Graph(len(labels), adj)


def petersen() -> Graph:
    """Petersen 图 = Kneser 图 K(5,2)，2-子集按字典序编号，不交则相邻"""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(pairs)), 2)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return build_graph(len(pairs), edges)


def hypercube(d: int) -> Graph:
    """超立方体 Q_d：二进制标号相差一位则相邻"""
    n = 1 << d
    edges = [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)]
    return build_graph(n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """笛卡尔积 g □ h，邻接矩阵 A ⊗ I + I ⊗ B"""
    adj = np.kron(g.adj, np.eye(h.n, dtype=np.int64)) + np.kron(np.eye(g.n, dtype=np.int64), h.adj)
    return Graph(g.n * h.n, adj)


def bipartite_double(g: Graph) -> Graph:
    """二部双图，邻接矩阵 (J_2 − I_2) ⊗ A"""
    return Graph(2 * g.n, np.kron(_complete_adj(2), g.adj))


def complement(g: Graph) -> Graph:
    """补图，邻接矩阵 J − I − A"""
    return Graph(g.n, _complete_adj(g.n) - g.adj)


def coclique_extension(g: Graph, t: int) -> Graph:
    """余团扩张：每个顶点换成 t 个互不相邻的拷贝，邻接矩阵 A ⊗ J_t"""
    if t < 1:
        raise FamilyError(f"扩张倍数必须 ≥ 1: {t}")
    return Graph(g.n * t, np.kron(g.adj, np.ones((t, t), dtype=np.int64)))


def line_graph(g: Graph) -> Graph:
    """线图：顶点是 g 的边（字典序），共享端点则相邻"""
    edges = g.edges()
    if not edges:
        raise FamilyError("没有边的图没有线图")
    incidence = np.zeros((g.n, len(edges)), dtype=np.int64)
    for idx, (u, v) in enumerate(edges):
        incidence[u, idx] = incidence[v, idx] = 1
    adj = incidence.T @ incidence
    np.fill_diagonal(adj, 0)
    return Graph(len(edges), adj)


def permute(g: Graph, order: Sequence[int]) -> Graph:
    """重新编号：新顶点 i 是旧顶点 order[i]"""
    order = np.asarray(order, dtype=np.int64)
    if sorted(order.tolist()) != list(range(g.n)):
        raise FamilyError("order 必须是 0..n-1 的一个排列")
    return Graph(g.n, g.adj[np.ix_(order, order)])


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyError(message)


def _build_complete(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 1 and p[0] >= 1, "complete 需要一个参数 n ≥ 1")
    return complete(p[0])


def _build_cycle(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 1 and p[0] >= 3, "cycle 需要一个参数 n ≥ 3")
    return cycle(p[0])


def _build_multipartite(p: Tuple[int, ...]) -> Graph:
    _require(len(p) >= 1 and all(s >= 1 for s in p), "complete_multipartite 的各部大小必须 ≥ 1")
    return complete_multipartite(p)


def _build_crown(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 1 and p[0] >= 1, "crown 需要一个参数 m ≥ 1")
    return bipartite_double(complete(p[0] + 1))


def _build_grid(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 2 and all(s >= 1 for s in p), "grid 需要两个参数 p, q ≥ 1")
    return cartesian_product(complete(p[0]), complete(p[1]))


def _build_path_of_products(p: Tuple[int, ...]) -> Graph:
    _require(len(p) >= 1 and all(s >= 1 for s in p), "path_of_products 的因子阶数必须 ≥ 1")
    return reduce(cartesian_product, (complete(s) for s in p))


def _build_petersen(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 0, "petersen 不带参数")
    return petersen()


def _build_hypercube(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 1 and 1 <= p[0] <= 12, "hypercube 需要一个参数 1 ≤ d ≤ 12")
    return hypercube(p[0])


def _build_cycle_by_complete(p: Tuple[int, ...]) -> Graph:
    _require(len(p) == 1 and p[0] >= 3, "cycle_by_complete 需要一个参数 m ≥ 3")
    return cartesian_product(cycle(p[0]), complete(p[0] + 1))


FAMILIES: Dict[str, Callable[[Tuple[int, ...]], Graph]] = {
    "complete": _build_complete,
    "cycle": _build_cycle,
    "complete_multipartite": _build_multipartite,
    "crown": _build_crown,
    "grid": _build_grid,
    "path_of_products": _build_path_of_products,
    "petersen": _build_petersen,
    "hypercube": _build_hypercube,
    "cycle_by_complete": _build_cycle_by_complete,
}


@dataclass(frozen=True)
class FamilySpec:
    """图族描述：kind + 整数参数

    文本形式 "grid:3,4"、"crown:4"、"petersen"。
    """

    kind: str
    parameters: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        kind = self.kind.strip().lower().replace("-", "_")
        if kind not in FAMILIES:
            raise FamilyError(f"未知图族 {self.kind!r}，可选: {', '.join(sorted(FAMILIES))}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "parameters", tuple(int(x) for x in self.parameters))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, _, rest = text.partition(":")
        try:
            params = tuple(int(x) for x in rest.replace(" ", "").split(",") if x)
        except ValueError as e:
            raise FamilyError(f"图族参数必须是整数: {text!r}") from e
        return cls(kind, params)

    def __str__(self) -> str:
        if not self.parameters:
            return self.kind
        return f"{self.kind}:{','.join(str(x) for x in self.parameters)}"


def generate(spec: FamilySpec) -> Graph:
    """按图族描述生成图，结果确定且顶点顺序稳定"""
    return FAMILIES[spec.kind](spec.parameters)
