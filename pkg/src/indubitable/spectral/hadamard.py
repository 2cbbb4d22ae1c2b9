"""矩阵元素取值类与 Hadamard（逐元素）代数

⟨J, E⟩∘ 的维数等于 E 不同元素的个数；恰为 2 时 E 可以写成
θ₀K + θ₁(J − K)，K 是等价关系矩阵（m+1 个等大的类）。
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from indubitable.core.config import resolve_tolerance
from indubitable.core.errors import PreconditionError, StructuralViolation
from indubitable.spectral.spectrum import Idempotent

logger = logging.getLogger(__name__)

MatrixLike = Union[Idempotent, np.ndarray]

# span oracle 的 Chebyshev 次数与最低相对阈值
ORACLE_DEGREE = 512
NOISE_FLOOR = 1e-10


def _as_matrix(M: MatrixLike) -> np.ndarray:
    return M.matrix if isinstance(M, Idempotent) else np.asarray(M, dtype=float)


@dataclass(frozen=True, eq=False)
class EntryClasses:
    """升序的不同元素值，以及每个元素所属类的下标矩阵"""

    values: Tuple[float, ...]
    class_matrix: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


def entry_classes(M: MatrixLike, tol: Optional[float] = None) -> EntryClasses:
    """元素单链聚类：排序后相邻元素之差 > tol 处断开"""
    tol = resolve_tolerance(tol)
    matrix = _as_matrix(M)
    flat = matrix.ravel()
    order = np.argsort(flat, kind="stable")
    breaks = np.diff(flat[order]) > tol
    ids = np.empty(flat.size, dtype=np.int64)
    ids[order] = np.concatenate([[0], np.cumsum(breaks)])
    values = np.bincount(ids, weights=flat) / np.bincount(ids)
    return EntryClasses(values=tuple(float(x) for x in values), class_matrix=ids.reshape(matrix.shape))


def hadamard_dim(E: MatrixLike, tol: Optional[float] = None) -> int:
    """dim ⟨J, E⟩∘ = E 的不同元素个数（Vandermonde）"""
    return len(entry_classes(E, tol))


def _chebyshev_columns(x: np.ndarray, degree: int) -> np.ndarray:
    """T_0(y)..T_degree(y)，y 是 x 仿射到 [−0.9, 0.9] 的像

    留出端点余量：T_k 在 ±1 处导数是 k²，内部只有 O(k)，
    舍入噪声不会被高次项放大到阈值以上。
    """
    lo, hi = float(x.min()), float(x.max())
    if hi - lo == 0.0:
        return np.ones((x.size, 1))
    y = 0.9 * (2.0 * x - lo - hi) / (hi - lo)
    return np.polynomial.chebyshev.chebvander(y, degree)


def hadamard_span_oracle(
    generators: Sequence[MatrixLike],
    max_power: int,
    tol: Optional[float] = None,
) -> int:
    """{J} ∪ {G, G∘G, …, G^∘max_power : G ∈ generators} 向量化后的数值秩

    与 hadamard_dim 是不同的计算路径，供交叉验证：不做元素聚类，
    只合并完全相同的行（不改变秩），然后对 Chebyshev 基求 SVD 秩，
    σ > max(tol, NOISE_FLOOR)·σ_max 计入。

    单项式幂次 {1, x, …, x^p} 在取值多时指数病态，这里改用
    次数 ORACLE_DEGREE 的 Chebyshev 基：次数 ≤ p 的多项式张成的空间
    维数是 min(不同取值数, p+1)，所以过采样得到的秩再截到 p+1
    （也不会超过向量长度）。多个生成元时依赖 max_power ≥ 各自的不同元素数，
    此时幂次张成空间已饱和，过采样不改变并集的维数。
    """
    tol = resolve_tolerance(tol)
    if max_power < 0:
        raise PreconditionError(f"max_power 必须 ≥ 0: {max_power}")
    if not generators:
        return 1
    degree = max(max_power, ORACLE_DEGREE)
    columns = np.column_stack([_chebyshev_columns(_as_matrix(G).ravel(), degree) for G in generators])
    rows = np.unique(columns, axis=0)
    norms = np.linalg.norm(rows, axis=0)
    rows = rows / np.where(norms > 0, norms, 1.0)
    singular = np.linalg.svd(rows, compute_uv=False)
    rank = int(np.sum(singular > max(tol, NOISE_FLOOR) * singular[0]))
    return min(rank, len(generators) * max_power + 1, rows.shape[0])


@dataclass(frozen=True, eq=False)
class TwoValuedDecomposition:
    """E = θ₀K + θ₁(J − K)，K 是 m+1 个等大类的等价关系矩阵"""

    theta0: float
    theta1: float
    K: np.ndarray
    m: int
    labels: np.ndarray

    @property
    def cell_count(self) -> int:
        return self.m + 1

    def cells(self):
        """按最小顶点排序的类"""
        cells = [np.flatnonzero(self.labels == c).tolist() for c in np.unique(self.labels)]
        return sorted(cells, key=lambda cell: cell[0])


def two_valued_decomposition(
    E: Idempotent,
    v: Optional[int] = None,
    tol: Optional[float] = None,
) -> Optional[TwoValuedDecomposition]:
    """E 恰有两个不同元素时分解出 K；否则返回 None

    Raises:
        PreconditionError: E 的行和不为 0（EJ ≠ 0）
        StructuralViolation: 两值但 θ₀ ≠ m/v、θ₁ ≠ −1/v，或 K 不是等大等价关系
    """
    tol = resolve_tolerance(tol)
    matrix = _as_matrix(E)
    v = v or matrix.shape[0]
    m = E.rank if isinstance(E, Idempotent) else int(round(np.trace(matrix)))

    row_sums = np.abs(matrix.sum(axis=1))
    if row_sums.max() > tol * v:
        raise PreconditionError(f"EJ ≠ 0：行和最大偏差 {row_sums.max():.1e}")

    ec = entry_classes(matrix, tol)
    if len(ec) != 2:
        return None

    diag_classes = np.unique(np.diag(ec.class_matrix))
    if len(diag_classes) != 1:
        raise StructuralViolation("两值幂等阵的对角线取了两个值")
    theta0 = ec.values[diag_classes[0]]
    theta1 = ec.values[1 - diag_classes[0]]
    if abs(theta0 - m / v) > tol or abs(theta1 + 1 / v) > tol:
        raise StructuralViolation(
            f"两值幂等阵的取值 θ₀={theta0:.12g}, θ₁={theta1:.12g} 不等于 m/v={m / v:.12g}, −1/v={-1 / v:.12g}"
        )

    K_float = (v * matrix + 1.0) / (m + 1)
    K = np.rint(K_float).astype(np.int64)
    if not np.isin(K, (0, 1)).all() or np.max(np.abs(K_float - K)) > tol * v:
        raise StructuralViolation("K = (vE + J)/(m+1) 不是 01 矩阵")

    _, labels = np.unique(K, axis=0, return_inverse=True)
    labels = np.asarray(labels).reshape(-1)
    P = np.eye(labels.max() + 1, dtype=np.int64)[labels]
    if not np.array_equal(P @ P.T, K):
        raise StructuralViolation("K 不是等价关系矩阵（不传递）")
    sizes = np.bincount(labels)
    if len(sizes) != m + 1 or (sizes != v // (m + 1)).any() or v % (m + 1):
        raise StructuralViolation(f"K 的类大小 {sizes.tolist()} 不是 {m + 1} 个 {v}/{m + 1}")

    logger.debug(f"两值分解: m={m}, θ₀={theta0:.6g}, θ₁={theta1:.6g}, 类大小 {sizes[0]}")
    return TwoValuedDecomposition(theta0=theta0, theta1=theta1, K=K, m=m, labels=labels)


def simplex_cosines(E: MatrixLike, decomposition: TwoValuedDecomposition) -> np.ndarray:
    """每类取一个代表顶点，其 Gram 向量两两夹角余弦（正则单纯形：−1/m）"""
    matrix = _as_matrix(E)
    reps = [cell[0] for cell in decomposition.cells()]
    G = matrix[np.ix_(reps, reps)]
    d = np.sqrt(np.diag(G))
    return G / np.outer(d, d)


def algebra_closed(matrices: Sequence[np.ndarray], tol: Optional[float] = None) -> Tuple[bool, bool]:
    """给定矩阵张成的空间是否对普通乘积、逐元素乘积封闭"""
    tol = resolve_tolerance(tol)
    mats = [np.asarray(M, dtype=float) for M in matrices]
    vecs = np.column_stack([M.ravel() for M in mats])
    U, s, _ = np.linalg.svd(vecs, full_matrices=False)
    Q = U[:, s > max(tol, 1e-8) * s[0]]

    def in_span(X: np.ndarray) -> bool:
        x = X.ravel()
        residual = x - Q @ (Q.T @ x)
        return float(np.max(np.abs(residual))) <= max(tol, 1e-8) * max(1.0, float(np.max(np.abs(x))))

    product = all(in_span(X @ Y) for i, X in enumerate(mats) for Y in mats[i:])
    entrywise = all(in_span(X * Y) for i, X in enumerate(mats) for Y in mats[i:])
    return product, entrywise
