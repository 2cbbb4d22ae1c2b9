"""结合方案的 Bose–Mesner 代数

基 B_0 = I, B_1, …, B_d 两两不交、和为 J。乘积 B_i B_j 在每个 B_h 的支撑上
只读一个代表元素得到 p^h_ij，再整体核对，全程整数运算。
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from indubitable.core.errors import ConsistencyError, SchemeBasisError
from indubitable.graph.families import complement
from indubitable.graph.graph import Graph, basic_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SchemeBasis:
    """对称 01 矩阵 B_0..B_d"""

    matrices: Tuple[np.ndarray, ...]

    @classmethod
    def from_matrices(cls, matrices: Sequence[np.ndarray]) -> "SchemeBasis":
        """校验基：01、对称、B_0 = I、互不相交、和为 J、没有零矩阵

        Raises:
            SchemeBasisError: 消息里带上出错的下标和元素位置
        """
        mats = [np.asarray(M, dtype=np.int64) for M in matrices]
        if not mats:
            raise SchemeBasisError("空的基")
        n = mats[0].shape[0]
        for i, M in enumerate(mats):
            if M.shape != (n, n):
                raise SchemeBasisError(f"B_{i} 形状 {M.shape} 不是 {n}×{n}")
            bad = np.argwhere(~np.isin(M, (0, 1)))
            if len(bad):
                x, y = bad[0]
                raise SchemeBasisError(f"B_{i} 在 ({x},{y}) 处不是 01")
            bad = np.argwhere(M != M.T)
            if len(bad):
                x, y = bad[0]
                raise SchemeBasisError(f"B_{i} 在 ({x},{y}) 处不对称")
            if not M.any():
                raise SchemeBasisError(f"B_{i} 是零矩阵")
        if not np.array_equal(mats[0], np.eye(n, dtype=np.int64)):
            raise SchemeBasisError("B_0 必须是单位矩阵")

        total = np.sum(mats, axis=0)
        bad = np.argwhere(total != 1)
        if len(bad):
            x, y = bad[0]
            hits = [i for i, M in enumerate(mats) if M[x, y]]
            if len(hits) > 1:
                raise SchemeBasisError(f"B_{hits[0]} 与 B_{hits[1]} 在 ({x},{y}) 处相交")
            raise SchemeBasisError(f"({x},{y}) 不被任何 B_i 覆盖，和不等于 J")

        for M in mats:
            M.flags.writeable = False
        return cls(matrices=tuple(mats))

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0]

    @property
    def d(self) -> int:
        """类数"""
        return len(self.matrices) - 1

    def __len__(self) -> int:
        return len(self.matrices)


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """p[h, i, j]：B_i B_j = Σ_h p^h_ij B_h；k_i 为价"""

    p: np.ndarray
    valencies: Tuple[int, ...]

    def check_identities(self) -> List[str]:
        """p^h_ij = p^h_ji、Σ_j p^h_ij = k_i、k_h p^h_ij = k_j p^j_ih；返回不成立的条目"""
        failures = []
        size = len(self.valencies)
        k = self.valencies
        for h in range(size):
            for i in range(size):
                if int(self.p[h, i].sum()) != k[i]:
                    failures.append(f"Σ_j p^{h}_{i}j ≠ k_{i}")
                for j in range(size):
                    if self.p[h, i, j] != self.p[h, j, i]:
                        failures.append(f"p^{h}_{i}{j} ≠ p^{h}_{j}{i}")
                    if k[h] * self.p[h, i, j] != k[j] * self.p[j, i, h]:
                        failures.append(f"k_{h} p^{h}_{i}{j} ≠ k_{j} p^{j}_{i}{h}")
        return failures


def bose_mesner_closure(basis: SchemeBasis) -> Optional[StructureConstants]:
    """基张成的空间对矩阵乘法封闭时给出结构常数，否则返回 None

    不相交 01 矩阵的逐元素乘积 B_i∘B_j = δ_ij B_i，逐元素封闭自动成立。
    """
    mats = basis.matrices
    size = len(mats)
    reps = [tuple(np.argwhere(B)[0]) for B in mats]
    p = np.zeros((size, size, size), dtype=np.int64)

    for i in range(size):
        for j in range(i, size):
            X = mats[i] @ mats[j]
            coeffs = np.array([X[x, y] for x, y in reps], dtype=np.int64)
            expansion = np.tensordot(coeffs, np.stack(mats), axes=1)
            if not np.array_equal(X, expansion):
                logger.debug(f"B_{i} B_{j} 不在基的张成空间中")
                return None
            p[:, i, j] = coeffs
            p[:, j, i] = coeffs

    valencies = tuple(int(B[0].sum()) for B in mats)
    constants = StructureConstants(p=p, valencies=valencies)
    failures = constants.check_identities()
    if failures:
        raise ConsistencyError(f"结构常数恒等式不成立: {failures[:3]}")
    return constants


def graph_basis(g: Graph) -> SchemeBasis:
    """{I, A, J − I − A}"""
    n = g.n
    identity = np.eye(n, dtype=np.int64)
    return SchemeBasis.from_matrices([identity, g.adj, complement(g).adj])


def srg_parameters(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """强正则图参数 (v, k, λ, μ)；完全图、空图、不连通或非强正则时返回 None"""
    if g.n < 3 or not basic_profile(g).connected or g.edge_count == g.n * (g.n - 1) // 2:
        return None
    constants = bose_mesner_closure(graph_basis(g))
    if constants is None:
        return None
    return g.n, constants.valencies[1], int(constants.p[1, 1, 1]), int(constants.p[2, 1, 1])
