"""两个满不可疑划分的结构，以及由此得到的分类

- 两个满划分：各格子交集大小都是 ℓ = v/((m+1)(m′+1))，KK′ = ℓJ；
  把划分 2 的格子放外层、划分 1 的格子放内层重排后，
  K = J_{m′+1} ⊗ I_{m+1} ⊗ J_ℓ，K′ = I_{m′+1} ⊗ J_{m+1} ⊗ J_ℓ
- 四个特征值：有两个满划分 ⇔ 图或其补图是 K_{m+1} □ K_{m′+1}
- 二部、五个特征值：λ = −k/m，图是完全 (m+1)-部图的二部双图
- 距离正则：满划分只有二部、完全多部、直径 3 的对径覆盖三种

所有分类都用显式重排做逐元素矩阵比对，不做同构搜索。
"""
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from indubitable.core.errors import ConsistencyError, PartitionError, PreconditionError
from indubitable.graph.families import cartesian_product, complement, complete, permute
from indubitable.graph.graph import Graph, basic_profile, distance_matrices
from indubitable.partitions.indubitable import (
    IndubitableReport,
    full_indubitable_census,
    partition_from_idempotent,
    require_connected_regular,
)
from indubitable.partitions.partition import PartitionLike, as_partition, indubitable_params
from indubitable.schemes.bose_mesner import SchemeBasis, bose_mesner_closure
from indubitable.schemes.distance import IntersectionArray, co_edge_regular_profile, intersection_array
from indubitable.spectral.hadamard import algebra_closed
from indubitable.spectral.spectrum import Spectrum, spectral_idempotent, spectrum

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    BIPARTITE = "bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    ANTIPODAL_COVER = "antipodal_cover"
    GRID = "grid"
    GRID_COMPLEMENT = "grid_complement"
    BIPARTITE_DOUBLE_MULTIPARTITE = "bipartite_double_multipartite"
    UNCLASSIFIED = "unclassified"


_VERDICT_ORDER = list(Verdict)


def _all_checks_pass(witness: Any) -> bool:
    if isinstance(witness, dict):
        checks = witness.get("checks", {})
        if not all(checks.values()):
            return False
        return all(_all_checks_pass(v) for k, v in witness.items() if k != "checks")
    if isinstance(witness, list):
        return all(_all_checks_pass(v) for v in witness)
    return True


@dataclass(frozen=True, eq=False)
class Classification:
    """判定结果 + 可机器复核的证据

    ordering/target 存在时，证据是 permute(g, ordering) == target；
    witness 中所有 "checks" 字典的值都必须为真。
    """

    verdict: Verdict
    witness: Dict[str, Any] = field(default_factory=dict)
    ordering: Optional[Tuple[int, ...]] = None
    target: Optional[Graph] = None
    branches: Tuple[Verdict, ...] = ()

    def verify(self, g: Graph) -> bool:
        if self.ordering is not None and self.target is not None:
            if permute(g, self.ordering) != self.target:
                return False
        return _all_checks_pass(self.witness)

    def to_dict(self) -> Dict[str, Any]:
        data = {"verdict": self.verdict.value, "witness": self.witness}
        if self.branches:
            data["branches"] = [b.value for b in self.branches]
        if self.ordering is not None:
            data["ordering"] = list(self.ordering)
        return data


def _classified(g: Graph, classification: Classification) -> Classification:
    """构造后立即复核证据"""
    if not classification.verify(g):
        raise ConsistencyError(f"{classification.verdict.value} 的证据复核失败")
    return classification


def _unclassified(reason: str, **extra) -> Classification:
    return Classification(verdict=Verdict.UNCLASSIFIED, witness={"failed": reason, **extra})


# ----------------------------------------------------------------------
# 两个满划分
# ----------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TwoPartitionReport:
    """ℓ、格子交集大小矩阵、重排及块形式是否成立"""

    ell: int
    cell_intersection_sizes: np.ndarray
    block_form_verified: bool
    ordering: Tuple[int, ...]
    # 仅 ℓ = 1 时检查 v²E∘E′ = vI − J − vE − vE′
    entrywise_identity: Optional[bool] = None


def analyze_partition_pair(
    g: Graph,
    first: IndubitableReport,
    second: IndubitableReport,
    spec: Optional[Spectrum] = None,
) -> TwoPartitionReport:
    """first 为划分 1（内层），second 为划分 2（外层）

    Raises:
        ConsistencyError: 整除或等交集不成立
    """
    v = g.n
    s1, s2 = len(first.partition), len(second.partition)
    if v % (s1 * s2):
        raise ConsistencyError(f"({s1})({s2}) 不整除 v={v}")
    ell = v // (s1 * s2)

    labels1, labels2 = first.partition.labels, second.partition.labels
    sizes = np.zeros((s1, s2), dtype=np.int64)
    np.add.at(sizes, (labels1, labels2), 1)
    if (sizes != ell).any():
        raise ConsistencyError(f"格子交集大小 {sorted(set(sizes.ravel().tolist()))} 不全等于 ℓ={ell}")

    K1, K2 = first.partition.clique_matrix, second.partition.clique_matrix
    if not np.array_equal(K1 @ K2, ell * np.ones((v, v), dtype=np.int64)):
        raise ConsistencyError(f"KK′ ≠ {ell}J")

    ordering = tuple(
        int(x)
        for j in range(s2)
        for i in range(s1)
        for x in np.flatnonzero((labels1 == i) & (labels2 == j))
    )
    o = np.array(ordering)
    J_ell = np.ones((ell, ell), dtype=np.int64)
    expected1 = np.kron(np.kron(np.ones((s2, s2), dtype=np.int64), np.eye(s1, dtype=np.int64)), J_ell)
    expected2 = np.kron(np.kron(np.eye(s2, dtype=np.int64), np.ones((s1, s1), dtype=np.int64)), J_ell)
    block_form = bool(
        np.array_equal(K1[np.ix_(o, o)], expected1) and np.array_equal(K2[np.ix_(o, o)], expected2)
    )

    entrywise = None
    if ell == 1:
        spec = spec or spectrum(g)
        E1 = spectral_idempotent(g, first.class_index, spec, exact_check=False).matrix
        E2 = spectral_idempotent(g, second.class_index, spec, exact_check=False).matrix
        lhs = v * v * E1 * E2
        rhs = v * np.eye(v) - np.ones((v, v)) - v * E1 - v * E2
        entrywise = bool(np.max(np.abs(lhs - rhs)) <= spec.tol * v * v)

    return TwoPartitionReport(
        ell=ell,
        cell_intersection_sizes=sizes,
        block_form_verified=block_form,
        ordering=ordering,
        entrywise_identity=entrywise,
    )


def two_partition_analysis(
    g: Graph,
    class1: int,
    class2: int,
    spec: Optional[Spectrum] = None,
) -> Optional[TwoPartitionReport]:
    """两个特征值类都有满不可疑划分时分析其结构，否则返回 None"""
    if class1 == class2:
        return None
    spec = spec or spectrum(g)
    first = partition_from_idempotent(g, class1, spec)
    second = partition_from_idempotent(g, class2, spec)
    if first is None or second is None:
        return None
    return analyze_partition_pair(g, first, second, spec)


# ----------------------------------------------------------------------
# 网格图
# ----------------------------------------------------------------------


def grid_graph(p: int, q: int) -> Graph:
    return cartesian_product(complete(p), complete(q))


def identify_grid(g: Graph, p: int, q: int) -> Optional[Tuple[int, ...]]:
    """从极大团恢复 K_p □ K_q 的行与列，返回使 permute(g, ordering) == grid(p, q) 的重排"""
    if p < 1 or q < 1 or g.n != p * q:
        return None
    target = grid_graph(p, q)
    if min(p, q) == 1:
        return tuple(range(g.n)) if g == target else None
    if not (g.degrees == p + q - 2).all():
        return None

    lines = [frozenset(c) for c in nx.find_cliques(g.to_networkx())]
    first = next((line for line in lines if 0 in line and len(line) == q), None)
    if first is None:
        return None
    rows = [first] + [line for line in lines if len(line) == q and line.isdisjoint(first)]
    columns = [line for line in lines if line not in set(rows)]
    if len(rows) != p or len(columns) != q or any(len(line) != p for line in columns):
        return None

    rows.sort(key=min)
    columns.sort(key=min)
    ordering = []
    for row in rows:
        for col in columns:
            meet = row & col
            if len(meet) != 1:
                return None
            ordering.append(next(iter(meet)))
    if sorted(ordering) != list(range(g.n)):
        return None
    return tuple(ordering) if permute(g, ordering) == target else None


def _co_edge_condition(x: Graph, m1: int, m2: int) -> bool:
    """v = (m+1)(m′+1)、k = m+m′、μ = 2、邻接对公共邻居数 ∈ {m−1, m′−1}"""
    if x.n != (m1 + 1) * (m2 + 1) or not (x.degrees == m1 + m2).all():
        return False
    profile = co_edge_regular_profile(x)
    return profile.mu == 2 and profile.adjacent_common_counts <= {m1 - 1, m2 - 1}


def _rectangular_basis(K: np.ndarray, K2: np.ndarray) -> SchemeBasis:
    n = K.shape[0]
    identity = np.eye(n, dtype=np.int64)
    return SchemeBasis.from_matrices(
        [identity, K - identity, K2 - identity, np.ones((n, n), dtype=np.int64) + identity - K - K2]
    )


def classify_four_eigenvalue(g: Graph, spec: Optional[Spectrum] = None) -> Classification:
    """四个特征值的连通正则图：四个等价条件要么同时成立（网格或其补图），要么都不成立

    Raises:
        PreconditionError: 不连通、不正则或特征值类不是 4 个
        ConsistencyError: 条件部分成立
    """
    k = require_connected_regular(g)
    spec = spec or spectrum(g)
    if len(spec) != 4:
        raise PreconditionError(f"需要恰好 4 个特征值，实际 {len(spec)} 个")

    census = full_indubitable_census(g, spec)
    perron = spec.class_index(k)
    nontrivial = [i for i in range(len(spec)) if i != perron]
    pairs = sorted(
        {tuple(sorted((spec[i].multiplicity, spec[j].multiplicity))) for i, j in itertools.combinations(nontrivial, 2)}
    )

    h = complement(g)
    candidates = [("graph", g)]
    if basic_profile(h).connected:
        candidates.append(("complement", h))

    co_edge_hit = next(
        ((name, m1, m2) for name, x in candidates for m1, m2 in pairs if _co_edge_condition(x, m1, m2)),
        None,
    )
    grid_hit = next(
        (
            (name, m1, m2, ordering)
            for name, x in candidates
            for m1, m2 in pairs
            for ordering in [identify_grid(x, m1 + 1, m2 + 1)]
            if ordering is not None
        ),
        None,
    )
    conditions = {
        "hadamard_dim_two": sum(census.hadamard_dims[i] == 2 for i in nontrivial) >= 2,
        "two_full_partitions": len(census) >= 2,
        "co_edge_regular": co_edge_hit is not None,
        "grid_identified": grid_hit is not None,
    }
    logger.debug(f"四特征值条件: {conditions}")

    if not any(conditions.values()):
        return _unclassified("no_two_full_partitions", conditions=conditions)
    if not all(conditions.values()):
        raise ConsistencyError(f"四特征值等价条件部分成立: {conditions}")

    inner, outer = sorted(census.reports.values(), key=lambda r: len(r.partition), reverse=True)[:2]
    if inner.multiplicity == outer.multiplicity:
        raise ConsistencyError("两个满划分的重数相同 m = m′")
    pair = analyze_partition_pair(g, inner, outer, spec)
    if pair.ell != 1 or not pair.block_form_verified or not pair.entrywise_identity:
        raise ConsistencyError(f"两个满划分的块形式不成立 (ℓ={pair.ell})")

    constants = bose_mesner_closure(_rectangular_basis(inner.partition.clique_matrix, outer.partition.clique_matrix))
    if constants is None:
        raise ConsistencyError("{I, K−I, K′−I, J+I−K−K′} 不封闭")

    p, q = outer.multiplicity + 1, inner.multiplicity + 1
    grid = grid_graph(p, q)
    permuted = permute(g, pair.ordering)
    if permuted == grid:
        verdict, target = Verdict.GRID, grid
    elif permuted == complement(grid):
        verdict, target = Verdict.GRID_COMPLEMENT, complement(grid)
    else:
        raise ConsistencyError("重排后既不是网格图也不是其补图")

    witness = {
        "grid": [p, q],
        "m": inner.multiplicity,
        "m_prime": outer.multiplicity,
        "eigenvalues": [spec[inner.class_index].display_value, spec[outer.class_index].display_value],
        "scheme_valencies": list(constants.valencies),
        "conditions": conditions,
        "checks": {
            "m_differs": inner.multiplicity != outer.multiplicity,
            "block_form": pair.block_form_verified,
            "entrywise_identity": bool(pair.entrywise_identity),
            "scheme_closed": True,
        },
    }
    return _classified(g, Classification(verdict=verdict, witness=witness, ordering=pair.ordering, target=target))


# ----------------------------------------------------------------------
# 二部图，五个特征值
# ----------------------------------------------------------------------


def bipartite_double_multipartite(parts: int, ell: int) -> Graph:
    """(J₂ − I₂) ⊗ (J_parts − I_parts) ⊗ J_ℓ"""
    L2 = np.ones((2, 2), dtype=np.int64) - np.eye(2, dtype=np.int64)
    Lp = np.ones((parts, parts), dtype=np.int64) - np.eye(parts, dtype=np.int64)
    adj = np.kron(np.kron(L2, Lp), np.ones((ell, ell), dtype=np.int64))
    return Graph(adj.shape[0], adj)


def classify_bipartite_five_eigenvalue(g: Graph, spec: Optional[Spectrum] = None) -> Classification:
    """二部、五个特征值 ±k, ±λ, 0：λ ≠ −k 处有满划分时 λ = −k/m，且图是完全 (m+1)-部图的二部双图

    Raises:
        PreconditionError: 不满足前置条件
        ConsistencyError: λ ≠ −k/m 或矩阵比对失败
    """
    k = require_connected_regular(g)
    profile = basic_profile(g)
    if not profile.is_bipartite:
        raise PreconditionError("需要二部图")
    spec = spec or spectrum(g)
    if len(spec) != 5:
        raise PreconditionError(f"需要恰好 5 个特征值，实际 {len(spec)} 个")

    census = full_indubitable_census(g, spec)
    bottom = spec.class_index(-k)
    if bottom not in census.reports:
        raise ConsistencyError(f"连通二部图在 −k={-k} 处没有满划分")
    others = [r for idx, r in sorted(census.reports.items()) if idx != bottom]
    if not others:
        return _unclassified("no_full_partition_besides_minus_k")

    report = others[0]
    lam, m = report.eigenvalue, report.multiplicity
    if abs(lam) <= spec.threshold:
        raise ConsistencyError("二部图在特征值 0 处出现满划分")
    if abs(lam * m + k) > spec.threshold * m:
        raise ConsistencyError(f"满划分在 λ={lam:.6g}，但 −k/m = {-k / m:.6g}")

    pair = analyze_partition_pair(g, report, census.reports[bottom], spec)
    target = bipartite_double_multipartite(m + 1, pair.ell)
    if permute(g, pair.ordering) != target:
        raise ConsistencyError("重排后不是完全多部图的二部双图")

    s = np.ones(g.n)
    s[list(profile.bipartition[1])] = -1
    E = spectral_idempotent(g, report.class_index, spec, exact_check=False).matrix
    mirror = spec.class_index(-lam)
    E_mirror = spectral_idempotent(g, mirror, spec, exact_check=False).matrix
    closed = algebra_closed([np.eye(g.n), np.ones((g.n, g.n)), np.outer(s, s), E, E_mirror], spec.tol)
    if not all(closed):
        raise ConsistencyError(f"⟨I, J, F, E_λ, E_−λ⟩ 不封闭: {closed}")

    lam_display = spec[report.class_index].display_value
    witness = {
        "eigenvalue": lam_display,
        "m": m,
        "k": k,
        "ell": pair.ell,
        "parts": m + 1,
        "checks": {
            "lambda_is_minus_k_over_m": True,
            "block_form": pair.block_form_verified,
            "four_class_scheme": all(closed),
        },
    }
    return _classified(
        g,
        Classification(
            verdict=Verdict.BIPARTITE_DOUBLE_MULTIPARTITE,
            witness=witness,
            ordering=pair.ordering,
            target=target,
        ),
    )


# ----------------------------------------------------------------------
# 距离正则图
# ----------------------------------------------------------------------


def _drg_branches(
    g: Graph,
    report: IndubitableReport,
    array: IntersectionArray,
    spec: Spectrum,
    dists: Sequence[np.ndarray],
) -> List[Dict[str, Any]]:
    k, v, m = array.valency, g.n, report.multiplicity
    lam = report.eigenvalue
    K = report.partition.clique_matrix
    thr = spec.threshold
    profile = basic_profile(g)
    found = []

    if abs(lam + k) <= thr and profile.is_bipartite:
        sides = {frozenset(side) for side in profile.bipartition}
        cells = {frozenset(cell) for cell in report.partition.cells}
        found.append((Verdict.BIPARTITE, {"sides_are_cells": sides == cells}))
    if abs(lam + v / (m + 1)) <= thr:
        found.append((Verdict.COMPLETE_MULTIPARTITE, {"adjacency_is_J_minus_K": bool(np.array_equal(g.adj, 1 - K))}))
    if abs(lam + 1) <= thr and array.diameter == 3:
        antipodal = dists[3] + np.eye(v, dtype=np.int64)
        found.append(
            (
                Verdict.ANTIPODAL_COVER,
                {
                    "distance_3_is_cliques": bool(np.array_equal(antipodal, K)),
                    "folded_is_complete": (report.a, report.b) == (0, 1),
                },
            )
        )

    return [
        {
            "branch": verdict.value,
            "eigenvalue": spec[report.class_index].display_value,
            "m": m,
            "cells": len(report.partition),
            "checks": checks,
        }
        for verdict, checks in found
        if all(checks.values())
    ]


def classify_drg_full_partition(g: Graph, spec: Optional[Spectrum] = None) -> Classification:
    """距离正则图（价 > 2，直径 ≥ 2）的每个满划分都落在三种情形之一

    Raises:
        PreconditionError: 不是距离正则图，或价 ≤ 2、直径 < 2
        ConsistencyError: 某个满划分不属于任何情形
    """
    array = intersection_array(g)
    if array is None:
        raise PreconditionError("不是距离正则图")
    if array.valency <= 2 or array.diameter < 2:
        raise PreconditionError(f"需要价 > 2 且直径 ≥ 2，交数组 {array}")

    spec = spec or spectrum(g)
    census = full_indubitable_census(g, spec)
    dists = distance_matrices(g)

    records = []
    for idx, report in sorted(census.reports.items()):
        found = _drg_branches(g, report, array, spec, dists)
        if not found:
            raise ConsistencyError(f"λ={spec[idx].display_value} 的满划分不属于任何距离正则情形")
        records.extend(found)

    if not records:
        return _unclassified("no_full_partition", intersection_array=str(array))

    branches = tuple(sorted({Verdict(r["branch"]) for r in records}, key=_VERDICT_ORDER.index))
    witness = {"intersection_array": str(array), "branches": records}
    return _classified(g, Classification(verdict=branches[0], witness=witness, branches=branches))


# ----------------------------------------------------------------------
# 三类结合方案
# ----------------------------------------------------------------------


def three_class_detection(g: Graph, pi: PartitionLike, spec: Optional[Spectrum] = None) -> bool:
    """参数 (0, b) 的不可疑划分：满 ⇔ {I, K−I, A, J−K−A} 是 3 类结合方案

    Raises:
        PreconditionError: 不连通、不正则或特征值类不是 4 个
        PartitionError: 不是不可疑划分，或 a ≠ 0
        ConsistencyError: 满与封闭不一致
    """
    require_connected_regular(g)
    spec = spec or spectrum(g)
    if len(spec) != 4:
        raise PreconditionError(f"需要恰好 4 个特征值，实际 {len(spec)} 个")
    pi = as_partition(g, pi)
    params = indubitable_params(g, pi)
    if params is None:
        raise PartitionError("划分不是不可疑划分")
    a, b = params
    if a != 0:
        raise PartitionError(f"格子内有边 (a={a})")

    m = spec.multiplicity_of(-b)
    is_full = len(pi) == m + 1

    n = g.n
    identity = np.eye(n, dtype=np.int64)
    K = pi.clique_matrix
    basis = SchemeBasis.from_matrices([identity, K - identity, g.adj, np.ones((n, n), dtype=np.int64) - K - g.adj])
    closed = bose_mesner_closure(basis) is not None
    if closed != is_full:
        raise ConsistencyError(f"划分{'是' if is_full else '不是'}满的，但三类方案{'封闭' if closed else '不封闭'}")
    return is_full
