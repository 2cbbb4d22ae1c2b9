"""满不可疑划分：从谱幂等阵提取、由划分重建幂等阵、逐特征值普查

E_λ 恰有两个不同元素 ⇔ 存在对应 λ 的满不可疑划分（m+1 个格子），
此时 E_λ = ((m+1)/v)K − J/v，K 是“同格子”矩阵。
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from indubitable.core.config import resolve_tolerance
from indubitable.core.errors import ConsistencyError, PartitionError, PreconditionError
from indubitable.graph.families import cartesian_product, complement, complete
from indubitable.graph.graph import BasicProfile, Graph, basic_profile
from indubitable.partitions.partition import (
    Partition,
    PartitionLike,
    as_partition,
    indubitable_params,
    predicted_params,
    quotient_if_equitable,
)
from indubitable.spectral.hadamard import hadamard_dim, two_valued_decomposition
from indubitable.spectral.spectrum import Idempotent, Spectrum, spectral_idempotent, spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndubitableReport:
    """一个不可疑划分及其参数 (a, b)，λ = a − b"""

    partition: Partition
    a: int
    b: int
    eigenvalue: float
    multiplicity: int
    is_full: bool
    class_index: Optional[int] = None

    @property
    def cells(self) -> List[List[int]]:
        return self.partition.as_lists()


def require_connected_regular(g: Graph, profile: Optional[BasicProfile] = None) -> int:
    """返回正则度 k；不连通或不正则时拒绝"""
    profile = profile or basic_profile(g)
    if not profile.connected:
        raise PreconditionError("图不连通")
    if not profile.is_regular:
        raise PreconditionError("图不正则")
    return profile.regular_degree


def partition_from_idempotent(
    g: Graph,
    class_index: int,
    spec: Optional[Spectrum] = None,
    tol: Optional[float] = None,
) -> Optional[IndubitableReport]:
    """由 E_λ 的两值结构读出满不可疑划分；dim⟨J,E_λ⟩∘ ≠ 2 时返回 None

    Raises:
        ConsistencyError: 两值分解成功但组合校验失败
    """
    require_connected_regular(g)
    spec = spec or spectrum(g, tol)
    E = spectral_idempotent(g, class_index, spec)
    if hadamard_dim(E, spec.tol) != 2:
        return None

    decomposition = two_valued_decomposition(E, g.n, spec.tol)
    if decomposition is None:
        return None

    pi = Partition.from_labels(decomposition.labels)
    params = indubitable_params(g, pi)
    lam = spec[class_index].value
    if params is None:
        raise ConsistencyError(f"λ={spec[class_index].display_value} 的两值幂等阵给出的划分不是不可疑划分")
    a, b = params
    if len(pi) != E.rank + 1 or abs(a - b - lam) > spec.threshold:
        raise ConsistencyError(
            f"λ={spec[class_index].display_value}: 划分有 {len(pi)} 格、参数 ({a},{b})，"
            f"与 m+1={E.rank + 1}、a−b=λ 不符"
        )

    logger.debug(f"λ={spec[class_index].display_value}: 满不可疑划分 {len(pi)} 格, 参数 ({a},{b})")
    return IndubitableReport(
        partition=pi,
        a=a,
        b=b,
        eigenvalue=lam,
        multiplicity=E.rank,
        is_full=True,
        class_index=class_index,
    )


def clique_matrix_idempotent(pi: Partition) -> np.ndarray:
    """E = ((m+1)/v)K − J/v，m+1 为格子数；要求各格子等大"""
    sizes = set(pi.sizes)
    if len(sizes) != 1:
        raise PartitionError(f"格子大小不一: {sorted(sizes)}")
    v = pi.n
    return (len(pi) / v) * pi.clique_matrix - np.ones((v, v)) / v


def idempotent_from_partition(
    g: Graph,
    pi: PartitionLike,
    lam: float,
    spec: Optional[Spectrum] = None,
    tol: Optional[float] = None,
) -> Idempotent:
    """由满不可疑划分重建 E_λ，并与谱计算的 E_λ 逐元素比对

    Raises:
        PartitionError: 不是不可疑划分、a − b ≠ λ 或格子数 ≠ m+1
        PreconditionError: λ 不是特征值
        ConsistencyError: 重建出的矩阵不满足幂等阵不变量
    """
    pi = as_partition(g, pi)
    spec = spec or spectrum(g, tol)
    params = indubitable_params(g, pi)
    if params is None:
        raise PartitionError("划分不是不可疑划分")
    idx = spec.require_index(lam)
    ec = spec[idx]
    m = ec.multiplicity
    if len(pi) != m + 1:
        raise PartitionError(f"格子数 {len(pi)} ≠ m+1 = {m + 1}（λ={ec.display_value}）")
    a, b = params
    if abs(a - b - ec.value) > spec.threshold:
        raise PartitionError(f"参数 ({a},{b}) 对应 λ={a - b}，不是 {ec.display_value}")

    E = clique_matrix_idempotent(pi)
    A = g.adj.astype(float)
    tol = spec.tol
    if (
        np.max(np.abs(A @ E - ec.value * E)) > tol * spec.scale
        or np.max(np.abs(E @ E - E)) > tol
        or abs(np.trace(E) - m) > tol * g.n
    ):
        raise ConsistencyError(f"重建的 E_{ec.display_value} 不是 λ 的幂等阵")

    spectral = spectral_idempotent(g, idx, spec, exact_check=False)
    deviation = float(np.max(np.abs(E - spectral.matrix)))
    if deviation > tol * max(1, g.n):
        raise ConsistencyError(f"重建的 E_{ec.display_value} 与谱计算相差 {deviation:.1e}")

    return Idempotent(matrix=E, eigenvalue=ec.value, rank=m, class_index=idx)


@dataclass(frozen=True)
class FullPartitionCensus:
    """一张图的满不可疑划分普查：特征值类下标 → 报告"""

    k: int
    spectrum: Spectrum = field(repr=False)
    reports: Dict[int, IndubitableReport]
    hadamard_dims: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reports)

    def at(self, lam: float) -> Optional[IndubitableReport]:
        idx = self.spectrum.class_index(lam)
        return None if idx is None else self.reports.get(idx)

    def eigenvalues(self) -> List[float]:
        return [self.spectrum[idx].value for idx in sorted(self.reports)]


def full_indubitable_census(g: Graph, spec: Optional[Spectrum] = None, tol: Optional[float] = None) -> FullPartitionCensus:
    """对除 k 以外的每个特征值类尝试提取满不可疑划分"""
    k = require_connected_regular(g)
    spec = spec or spectrum(g, tol)
    perron = spec.class_index(k)

    dims = []
    reports = {}
    for idx in range(len(spec)):
        dims.append(hadamard_dim(spectral_idempotent(g, idx, spec, exact_check=False), spec.tol))
        if idx == perron:
            continue
        report = partition_from_idempotent(g, idx, spec)
        if report is not None:
            reports[idx] = report

    return FullPartitionCensus(k=k, spectrum=spec, reports=reports, hadamard_dims=tuple(dims))


def constant_diagonal_check(E, tol: Optional[float] = None) -> bool:
    """对角线 max − min ≤ tol"""
    tol = resolve_tolerance(tol)
    matrix = E.matrix if isinstance(E, Idempotent) else np.asarray(E, dtype=float)
    diag = np.diag(matrix)
    return bool(diag.max() - diag.min() <= tol)


def is_walk_regular(g: Graph, spec: Optional[Spectrum] = None) -> bool:
    """每个谱幂等阵对角线都是常数"""
    spec = spec or spectrum(g)
    return all(
        constant_diagonal_check(spectral_idempotent(g, idx, spec, exact_check=False), spec.tol)
        for idx in range(len(spec))
    )


def bipartite_mirror_check(g: Graph, spec: Optional[Spectrum] = None) -> bool:
    """连通二部图：E_{−λ} = F∘E_λ，F = s sᵀ，s 是两侧的 ±1 符号向量"""
    profile = basic_profile(g)
    if not profile.is_bipartite:
        raise PreconditionError("需要连通二部图")
    spec = spec or spectrum(g)
    s = np.ones(g.n)
    s[list(profile.bipartition[1])] = -1
    F = np.outer(s, s)
    for idx, ec in enumerate(spec):
        mirror = spec.class_index(-ec.value)
        if mirror is None or spec[mirror].multiplicity != ec.multiplicity:
            return False
        E = spectral_idempotent(g, idx, spec, exact_check=False).matrix
        E_mirror = spectral_idempotent(g, mirror, spec, exact_check=False).matrix
        if np.max(np.abs(E_mirror - F * E)) > spec.tol * max(1, g.n):
            return False
    return True


def complement_transfer(g: Graph, report: IndubitableReport) -> Optional[IndubitableReport]:
    """补图中同一划分：参数 (c−1−a, c−b)，特征值 −1−λ，仍然是满的

    补图不连通时返回 None。
    """
    h = complement(g)
    if not basic_profile(h).connected:
        return None
    c = g.n // len(report.partition)
    expected = (c - 1 - report.a, c - report.b)
    params = indubitable_params(h, report.partition)
    if params != expected:
        raise ConsistencyError(f"补图参数 {params} ≠ 预期 {expected}")

    spec = spectrum(h)
    lam = -1 - report.eigenvalue
    idx = spec.class_index(lam)
    m = spec[idx].multiplicity if idx is not None else 0
    if m + 1 != len(report.partition):
        raise ConsistencyError(f"补图中 λ={lam:g} 的重数 {m} 与 {len(report.partition)} 个格子不符")
    return IndubitableReport(
        partition=report.partition,
        a=expected[0],
        b=expected[1],
        eigenvalue=spec[idx].value,
        multiplicity=m,
        is_full=True,
        class_index=idx,
    )


def in_adjacency_algebra(g: Graph, M: np.ndarray, spec: Optional[Spectrum] = None) -> bool:
    """M 是否属于邻接代数 ⟨E_λ⟩：投影到各 E_λ 上再比残差"""
    spec = spec or spectrum(g)
    M = np.asarray(M, dtype=float)
    residual = M.copy()
    for idx, ec in enumerate(spec):
        E = spectral_idempotent(g, idx, spec, exact_check=False).matrix
        residual -= (np.sum(M * E) / ec.multiplicity) * E
    return bool(np.max(np.abs(residual)) <= spec.tol * max(1, g.n))


def full_partition_for(g: Graph, pi: PartitionLike, spec: Optional[Spectrum] = None) -> Optional[IndubitableReport]:
    """组合方向：用户给的划分若是满不可疑划分则给出报告"""
    pi = as_partition(g, pi)
    params = indubitable_params(g, pi)
    if params is None:
        return None
    spec = spec or spectrum(g)
    a, b = params
    idx = spec.class_index(a - b)
    m = spec[idx].multiplicity if idx is not None else 0
    return IndubitableReport(
        partition=pi,
        a=a,
        b=b,
        eigenvalue=float(a - b),
        multiplicity=m,
        is_full=idx is not None and len(pi) == m + 1,
        class_index=idx,
    )


def check_parameter_identities(k: int, report: IndubitableReport, tol: float = 1e-9) -> bool:
    """a = λ + (k−λ)/(r+1)、b = (k−λ)/(r+1)，r+1 为格子数"""
    a, b = predicted_params(k, report.eigenvalue, len(report.partition) - 1)
    return abs(a - report.a) <= tol and abs(b - report.b) <= tol


@dataclass(frozen=True)
class ProductPrediction:
    """C □ K_{m+1}：λ = ℓ−1 重数 m，满划分的格子是 C 的各个拷贝，参数 (ℓ, 1)"""

    graph: Graph
    eigenvalue: int
    multiplicity: int
    params: Tuple[int, int]
    cells: Tuple[Tuple[int, ...], ...]


def product_with_complete_prediction(c: Graph) -> ProductPrediction:
    """对连通 ℓ-正则、m 个顶点且 m+1 > 2ℓ 的 C 构造 C □ K_{m+1} 并核对预测

    Raises:
        PreconditionError: C 不满足条件
        ConsistencyError: 预测与计算不符
    """
    ell = require_connected_regular(c)
    m = c.n
    if ell <= 1 or m + 1 <= 2 * ell:
        raise PreconditionError(f"需要 ℓ > 1 且 m+1 > 2ℓ（ℓ={ell}, m={m}）")

    g = cartesian_product(c, complete(m + 1))
    cells = tuple(tuple(i * (m + 1) + j for i in range(m)) for j in range(m + 1))
    prediction = ProductPrediction(graph=g, eigenvalue=ell - 1, multiplicity=m, params=(ell, 1), cells=cells)

    spec = spectrum(g)
    idx = spec.class_index(ell - 1)
    if idx is None or spec[idx].multiplicity != m:
        raise ConsistencyError(f"C □ K_{m + 1} 中 λ={ell - 1} 的重数不是 {m}")
    report = partition_from_idempotent(g, idx, spec)
    if report is None or report.partition.cells != cells or (report.a, report.b) != (ell, 1):
        raise ConsistencyError(f"C □ K_{m + 1} 的满划分与预测不符")
    return prediction


def quotient_spectrum_check(g: Graph, pi: PartitionLike, spec: Optional[Spectrum] = None) -> Optional[bool]:
    """等价划分商矩阵的特征值都在图的谱中；不等价时返回 None"""
    result = quotient_if_equitable(g, pi)
    if result is None:
        return None
    spec = spec or spectrum(g)
    needed: Dict[int, int] = {}
    for value in result.eigenvalues():
        idx = spec.class_index(value)
        if idx is None:
            return False
        needed[idx] = needed.get(idx, 0) + 1
    return all(count <= spec[idx].multiplicity for idx, count in needed.items())


def uniqueness_check(g: Graph, pi: PartitionLike, lam: float, spec: Optional[Spectrum] = None) -> bool:
    """用户给的 λ 满不可疑划分必须与从 E_λ 提取的划分逐格相同"""
    spec = spec or spectrum(g)
    idx = spec.require_index(lam)
    user = full_partition_for(g, pi, spec)
    if user is None or not user.is_full or user.class_index != idx:
        raise PartitionError(f"给定划分不是 λ={spec[idx].display_value} 的满不可疑划分")
    extracted = partition_from_idempotent(g, idx, spec)
    return extracted is not None and extracted.partition == user.partition


def reports_by_eigenvalue(census: FullPartitionCensus) -> Sequence[Tuple[float, IndubitableReport]]:
    return [(census.spectrum[idx].display_value, census.reports[idx]) for idx in sorted(census.reports)]
