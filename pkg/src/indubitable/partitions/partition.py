"""顶点划分与商矩阵

等价划分：AP = PQ（P 的列是各格子的特征向量），全部用整数运算判定。
不可疑划分：Q = aI + b(J − I)。
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from indubitable.core.errors import PartitionError, PreconditionError
from indubitable.graph.graph import Graph


@dataclass(frozen=True)
class Partition:
    """规范形式：格子内升序，格子按最小顶点排序"""

    n: int
    cells: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_cells(cls, cells: Iterable[Iterable[int]], n: int) -> "Partition":
        """校验并规范化

        Raises:
            PartitionError: 空格子、顶点越界、重叠或缺失，消息里带上顶点
        """
        seen = {}
        normalized = []
        for idx, cell in enumerate(cells):
            cell = sorted(int(x) for x in cell)
            if not cell:
                raise PartitionError(f"第 {idx} 个格子为空")
            for x in cell:
                if not 0 <= x < n:
                    raise PartitionError(f"顶点 {x} 越界 [0,{n})")
                if x in seen:
                    raise PartitionError(f"顶点 {x} 同时出现在第 {seen[x]} 和第 {idx} 个格子")
                seen[x] = idx
            normalized.append(tuple(cell))
        missing = [x for x in range(n) if x not in seen]
        if missing:
            raise PartitionError(f"顶点 {missing[0]} 不在任何格子中")
        return cls(n=n, cells=tuple(sorted(normalized, key=lambda c: c[0])))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        labels = np.asarray(labels)
        cells = [np.flatnonzero(labels == c).tolist() for c in np.unique(labels)]
        return cls.from_cells(cells, len(labels))

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> List[int]:
        return [len(c) for c in self.cells]

    @property
    def labels(self) -> np.ndarray:
        labels = np.empty(self.n, dtype=np.int64)
        for idx, cell in enumerate(self.cells):
            labels[list(cell)] = idx
        return labels

    @property
    def characteristic_matrix(self) -> np.ndarray:
        """n×s 的 01 矩阵 P，第 j 列是格子 j 的特征向量"""
        return np.eye(len(self.cells), dtype=np.int64)[self.labels]

    @property
    def clique_matrix(self) -> np.ndarray:
        """K = PPᵀ：同格子为 1"""
        P = self.characteristic_matrix
        return P @ P.T

    def as_lists(self) -> List[List[int]]:
        return [list(c) for c in self.cells]


PartitionLike = Union[Partition, Sequence[Sequence[int]]]


def as_partition(g: Graph, pi: PartitionLike) -> Partition:
    if isinstance(pi, Partition):
        if pi.n != g.n:
            raise PartitionError(f"划分覆盖 {pi.n} 个顶点，图有 {g.n} 个")
        return pi
    return Partition.from_cells(pi, g.n)


@dataclass(frozen=True, eq=False)
class QuotientResult:
    """商矩阵 Q：q_ij = 格子 i 中任一顶点在格子 j 中的邻居数"""

    partition: Partition
    Q: np.ndarray

    def eigenvalues(self) -> List[float]:
        """商矩阵的特征值（降序）；它们都是图的特征值"""
        vals = np.linalg.eigvals(self.Q.astype(float))
        return sorted((float(x) for x in vals.real), reverse=True)


def quotient_if_equitable(g: Graph, pi: PartitionLike) -> Optional[QuotientResult]:
    """等价划分返回商矩阵，否则返回 None"""
    pi = as_partition(g, pi)
    P = pi.characteristic_matrix
    counts = g.adj @ P
    Q = counts[[cell[0] for cell in pi.cells]]
    if not np.array_equal(counts, P @ Q):
        return None
    return QuotientResult(partition=pi, Q=Q)


def indubitable_params(g: Graph, pi: PartitionLike) -> Optional[Tuple[int, int]]:
    """Q = aI + b(J − I) 时返回 (a, b)；单格子划分没有 b，返回 None"""
    result = quotient_if_equitable(g, pi)
    if result is None or len(result.partition) < 2:
        return None
    Q = result.Q
    a = int(Q[0, 0])
    b = int(Q[0, 1])
    s = Q.shape[0]
    expected = a * np.eye(s, dtype=np.int64) + b * (np.ones((s, s), dtype=np.int64) - np.eye(s, dtype=np.int64))
    if not np.array_equal(Q, expected):
        return None
    return a, b


def predicted_params(k: int, lam: float, r: int) -> Tuple[float, float]:
    """r+1 个格子、特征值 λ 的不可疑划分必有 b = (k−λ)/(r+1)，a = λ + b"""
    if r < 1:
        raise PreconditionError(f"r 必须 ≥ 1: {r}")
    b = (k - lam) / (r + 1)
    return lam + b, b
