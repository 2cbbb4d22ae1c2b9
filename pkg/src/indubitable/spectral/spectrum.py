"""邻接矩阵的谱分解与谱幂等阵

特征值按容差聚类成类，每类给出正交基 U，幂等阵取 E = U Uᵀ。
整数谱的小图额外用精确整数运算复核 E = ∏(A − μI) / ∏(λ − μ)。
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from indubitable.core.config import get_config, resolve_tolerance
from indubitable.core.errors import PreconditionError, SpectralError
from indubitable.graph.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenClass:
    """一个特征值类：代表值、重数、n×m 正交基"""

    value: float
    multiplicity: int
    basis: np.ndarray
    exact: Optional[int] = None

    @property
    def display_value(self):
        """整数谱时给出精确整数，否则给浮点"""
        return self.exact if self.exact is not None else float(self.value)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """降序排列的特征值类"""

    classes: Tuple[EigenClass, ...]
    n: int
    tol: float
    scale: float
    ambiguous: bool = False

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, idx: int) -> EigenClass:
        return self.classes[idx]

    @property
    def values(self) -> List[float]:
        return [c.value for c in self.classes]

    @property
    def multiplicities(self) -> List[int]:
        return [c.multiplicity for c in self.classes]

    @property
    def threshold(self) -> float:
        """聚类阈值 tol·max(1, ‖A‖)"""
        return self.tol * self.scale

    @property
    def integral(self) -> bool:
        return all(c.exact is not None for c in self.classes)

    def class_index(self, value: float) -> Optional[int]:
        """按同一聚类容差把给定 λ 匹配到类，匹配不到返回 None"""
        for idx, c in enumerate(self.classes):
            if abs(c.value - value) <= self.threshold:
                return idx
        return None

    def require_index(self, value: float) -> int:
        idx = self.class_index(value)
        if idx is None:
            raise PreconditionError(f"{value} 不是特征值")
        return idx

    def multiplicity_of(self, value: float) -> int:
        idx = self.class_index(value)
        return 0 if idx is None else self.classes[idx].multiplicity

    def as_table(self) -> List[Tuple[float, int]]:
        return [(c.display_value, c.multiplicity) for c in self.classes]


@dataclass(frozen=True, eq=False)
class Idempotent:
    """谱幂等阵 E_λ：到 λ-特征空间的正交投影"""

    matrix: np.ndarray
    eigenvalue: float
    rank: int
    class_index: Optional[int] = None
    basis: Optional[np.ndarray] = None
    # 精确整数复核结果；None 表示未做（非整数谱或阶数太大）
    exact: Optional[bool] = None

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def spectrum(g: Graph, tol: Optional[float] = None) -> Spectrum:
    """对称特征分解并把特征值聚类

    排序后相邻特征值之差 ≤ tol·max(1, ‖A‖) 时归为同一类；
    间隙落在 (阈值, ambiguity_factor·阈值) 时标记 ambiguous。
    """
    tol = resolve_tolerance(tol)
    try:
        vals, vecs = np.linalg.eigh(g.adj.astype(float))
    except np.linalg.LinAlgError as e:
        raise SpectralError(f"特征分解失败: {e}") from e

    scale = max(1.0, float(np.max(np.abs(vals))))
    threshold = tol * scale
    gaps = np.diff(vals)
    ambiguous = bool(np.any((gaps > threshold) & (gaps < get_config().ambiguity_factor * threshold)))
    if ambiguous:
        logger.warning(f"⚠️ 特征值聚类有歧义: 存在落在 ({threshold:.1e}, {get_config().ambiguity_factor:g}×) 内的间隙")

    groups = np.split(np.arange(len(vals)), np.flatnonzero(gaps > threshold) + 1)
    classes = []
    for idx in reversed(groups):
        value = float(vals[idx].mean())
        basis, _ = np.linalg.qr(vecs[:, idx])
        gram = basis.T @ basis
        deviation = float(np.max(np.abs(gram - np.eye(len(idx)))))
        if deviation > tol:
            raise SpectralError(f"λ={value:.6g} 的基不正交，偏差 {deviation:.1e}")
        rounded = round(value)
        exact = int(rounded) if abs(value - rounded) <= threshold else None
        classes.append(EigenClass(value=value, multiplicity=len(idx), basis=basis, exact=exact))

    logger.debug(f"谱: {[(c.display_value, c.multiplicity) for c in classes]}")
    return Spectrum(classes=tuple(classes), n=g.n, tol=tol, scale=scale, ambiguous=ambiguous)


def spectral_idempotent(
    g: Graph,
    class_index: int,
    spec: Optional[Spectrum] = None,
    tol: Optional[float] = None,
    exact_check: bool = True,
) -> Idempotent:
    """E = U Uᵀ，并校验 E² = E、AE = λE、trace E = m

    Raises:
        PreconditionError: class_index 越界
        SpectralError: 不变量不成立或精确复核失败
    """
    spec = spec or spectrum(g, tol)
    tol = spec.tol
    if not 0 <= class_index < len(spec):
        raise PreconditionError(f"特征值类下标 {class_index} 越界 [0,{len(spec)})")

    ec = spec[class_index]
    U = ec.basis
    E = U @ U.T
    A = g.adj.astype(float)

    errors = {
        "E²−E": float(np.max(np.abs(E @ E - E))),
        "AE−λE": float(np.max(np.abs(A @ E - ec.value * E))) / spec.scale,
        "trace−m": abs(float(np.trace(E)) - ec.multiplicity) / max(1, g.n),
    }
    bad = {k: v for k, v in errors.items() if v > tol}
    if bad:
        raise SpectralError(f"λ={ec.value:.6g} 的幂等阵不变量不成立: {bad}")

    exact = exact_idempotent_check(g, spec, class_index, E) if exact_check else None
    if exact is False:
        raise SpectralError(f"λ={ec.display_value} 的幂等阵与精确有理值不符")

    return Idempotent(
        matrix=E,
        eigenvalue=ec.value,
        rank=ec.multiplicity,
        class_index=class_index,
        basis=U,
        exact=exact,
    )


def all_idempotents(g: Graph, spec: Optional[Spectrum] = None, exact_check: bool = False) -> List[Idempotent]:
    spec = spec or spectrum(g)
    return [spectral_idempotent(g, i, spec, exact_check=exact_check) for i in range(len(spec))]


def exact_idempotent_check(
    g: Graph,
    spec: Spectrum,
    class_index: int,
    E: Optional[np.ndarray] = None,
) -> Optional[bool]:
    """整数谱的有理复核

    N = ∏_{μ≠λ}(A − μI)，D = ∏_{μ≠λ}(λ − μ)，则 E_λ = N / D 精确成立。
    用 Python 整数检查 N² = D·N、trace N = m·D，再比对浮点 E。
    谱不是整数或 n 超过 rational_check_max_order 时返回 None。
    """
    if not spec.integral or g.n > get_config().rational_check_max_order:
        return None

    lam = spec[class_index].exact
    others = [c.exact for i, c in enumerate(spec.classes) if i != class_index]
    identity = np.eye(g.n, dtype=np.int64).astype(object)
    A = g.adj.astype(object)

    N = identity.copy()
    D = 1
    for mu in others:
        N = N.dot(A - mu * identity)
        D *= lam - mu

    m = spec[class_index].multiplicity
    if not (N.dot(N) == D * N).all():
        return False
    if sum(N[i, i] for i in range(g.n)) != m * D:
        return False

    if E is None:
        E = spec[class_index].basis @ spec[class_index].basis.T
    rational = np.array([[x / D for x in row] for row in N], dtype=float)
    return bool(np.max(np.abs(E - rational)) <= spec.tol)
