"""距离正则性与余边正则性"""
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import networkx as nx
import numpy as np

from indubitable.core.errors import PreconditionError
from indubitable.graph.graph import Graph, basic_profile


@dataclass(frozen=True)
class IntersectionArray:
    """(b_0, …, b_{d−1}; c_1, …, c_d)"""

    b: Tuple[int, ...]
    c: Tuple[int, ...]

    @property
    def diameter(self) -> int:
        return len(self.c)

    @property
    def valency(self) -> int:
        return self.b[0] if self.b else 0

    @property
    def a(self) -> Tuple[int, ...]:
        """a_i = k − b_i − c_i，i = 1..d（b_d = 0）"""
        k = self.valency
        bs = self.b[1:] + (0,)
        return tuple(k - b - c for b, c in zip(bs, self.c))

    def as_tuple(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.b, self.c

    def __str__(self) -> str:
        return f"({','.join(map(str, self.b))}; {','.join(map(str, self.c))})"


def intersection_array(g: Graph) -> Optional[IntersectionArray]:
    """距离正则时返回交数组，否则 None

    Raises:
        PreconditionError: 图不连通
    """
    if not basic_profile(g).connected:
        raise PreconditionError("交数组只对连通图有定义")
    try:
        b, c = nx.intersection_array(g.to_networkx())
    except nx.NetworkXError:
        return None
    return IntersectionArray(b=tuple(int(x) for x in b), c=tuple(int(x) for x in c))


@dataclass(frozen=True)
class CoEdgeProfile:
    """非邻接对公共邻居数为常数 μ 时给出 μ；邻接对的公共邻居数集合"""

    mu: Optional[int]
    adjacent_common_counts: FrozenSet[int]

    @property
    def is_co_edge_regular(self) -> bool:
        return self.mu is not None


def co_edge_regular_profile(g: Graph) -> CoEdgeProfile:
    """余边正则画像；图必须正则（完全图没有非邻接对，μ 为空）"""
    if not basic_profile(g).is_regular:
        raise PreconditionError("余边正则画像需要正则图")
    common = g.adj @ g.adj
    off_diagonal = ~np.eye(g.n, dtype=bool)
    non_adjacent = common[(g.adj == 0) & off_diagonal]
    mu_values = np.unique(non_adjacent)
    mu = int(mu_values[0]) if len(mu_values) == 1 else None
    adjacent = frozenset(int(x) for x in np.unique(common[g.adj == 1]))
    return CoEdgeProfile(mu=mu, adjacent_common_counts=adjacent)
