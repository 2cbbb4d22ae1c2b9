"""可执行的结论检查：verify 子命令的每个 claim 对一张图检查一条性质

不适用时抛 PreconditionError；性质不成立时 holds = False。
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np

from indubitable.core.errors import PreconditionError
from indubitable.graph.graph import Graph, basic_profile
from indubitable.partitions.indubitable import (
    bipartite_mirror_check,
    check_parameter_identities,
    complement_transfer,
    constant_diagonal_check,
    full_indubitable_census,
    full_partition_for,
    idempotent_from_partition,
    partition_from_idempotent,
    product_with_complete_prediction,
    require_connected_regular,
    uniqueness_check,
)
from indubitable.partitions.partition import Partition, as_partition
from indubitable.schemes.classify import (
    Verdict,
    analyze_partition_pair,
    classify_bipartite_five_eigenvalue,
    classify_drg_full_partition,
    classify_four_eigenvalue,
    three_class_detection,
)
from indubitable.schemes.distance import intersection_array
from indubitable.spectral.hadamard import entry_classes, simplex_cosines, two_valued_decomposition
from indubitable.spectral.spectrum import Spectrum, spectral_idempotent, spectrum

logger = logging.getLogger(__name__)

# 两值分解取值的绝对误差上限
EXACTNESS = 1e-10


@dataclass
class ClaimResult:
    claim: str
    holds: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"claim": self.claim, "holds": self.holds, "details": self.details}


ClaimFn = Callable[[Graph, Spectrum, Optional[Partition]], ClaimResult]
CLAIMS: Dict[str, ClaimFn] = {}


def claim(name: str):
    def register(fn: ClaimFn) -> ClaimFn:
        CLAIMS[name] = fn
        return fn

    return register


def _require_partition(pi: Optional[Partition], name: str) -> Partition:
    if pi is None:
        raise PreconditionError(f"{name} 需要 --partition")
    return pi


@claim("roundtrip")
def _roundtrip(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """dim = 2 ⇔ 提取出满划分，且由划分重建的 E 与谱 E 一致"""
    census = full_indubitable_census(g, spec)
    perron = spec.class_index(census.k)
    checked = {}
    holds = True
    for idx in range(len(spec)):
        if idx == perron:
            continue
        report = census.reports.get(idx)
        dim_two = census.hadamard_dims[idx] == 2
        ok = dim_two == (report is not None)
        if report is not None:
            E = idempotent_from_partition(g, report.partition, report.eigenvalue, spec)
            spectral = spectral_idempotent(g, idx, spec, exact_check=False).matrix
            ok = ok and float(np.max(np.abs(E.matrix - spectral))) < 1e-8
            ok = ok and check_parameter_identities(census.k, report) and g.n % len(report.partition) == 0
        checked[str(spec[idx].display_value)] = ok
        holds = holds and ok
    return ClaimResult("roundtrip", holds, {"classes": checked, "full_partitions": len(census)})


@claim("two-valued")
def _two_valued(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """θ₀ = m/v、θ₁ = −1/v，类大小 v/(m+1)，代表向量构成余弦 −1/m 的单纯形"""
    k = require_connected_regular(g)
    perron = spec.class_index(k)
    v = g.n
    details = {}
    holds = True
    for idx in range(len(spec)):
        if idx == perron:
            continue
        E = spectral_idempotent(g, idx, spec, exact_check=False)
        decomposition = two_valued_decomposition(E, v, spec.tol)
        if decomposition is None:
            continue
        m = decomposition.m
        sizes = np.bincount(decomposition.labels)
        ok = (
            abs(decomposition.theta0 - m / v) < EXACTNESS
            and abs(decomposition.theta1 + 1 / v) < EXACTNESS
            and bool((sizes == v // (m + 1)).all())
        )
        if m >= 1:
            cos = simplex_cosines(E, decomposition)
            off = cos[~np.eye(m + 1, dtype=bool)]
            ok = ok and bool(np.allclose(off, -1 / m, atol=1e-9))
        details[str(spec[idx].display_value)] = ok
        holds = holds and ok
    return ClaimResult("two-valued", holds, details)


@claim("bipartite")
def _bipartite(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """连通正则二部图：λ = −k 处有参数 (0,k) 的满划分，E_{−k} = F/v"""
    k = require_connected_regular(g)
    profile = basic_profile(g)
    if not profile.is_bipartite:
        raise PreconditionError("需要二部图")
    idx = spec.require_index(-k)
    report = partition_from_idempotent(g, idx, spec)
    s = np.ones(g.n)
    s[list(profile.bipartition[1])] = -1
    E = spectral_idempotent(g, idx, spec, exact_check=False).matrix
    checks = {
        "full_partition": report is not None and len(report.partition) == 2,
        "params": report is not None and (report.a, report.b) == (0, k),
        "idempotent_is_F_over_v": bool(np.max(np.abs(E - np.outer(s, s) / g.n)) < EXACTNESS),
        "mirror": bipartite_mirror_check(g, spec),
    }
    return ClaimResult("bipartite", all(checks.values()), checks)


@claim("no-zero")
def _no_zero(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """二部图在特征值 0 处没有满划分，E₀ 至少三个不同元素"""
    require_connected_regular(g)
    if not basic_profile(g).is_bipartite:
        raise PreconditionError("需要二部图")
    idx = spec.class_index(0.0)
    if idx is None:
        raise PreconditionError("0 不是特征值")
    report = partition_from_idempotent(g, idx, spec)
    classes = len(entry_classes(spectral_idempotent(g, idx, spec, exact_check=False), spec.tol))
    return ClaimResult("no-zero", report is None and classes >= 3, {"entry_classes": classes})


@claim("constant-diagonal")
def _constant_diagonal(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """λ ≠ k 的单重特征值：有满划分 ⇔ E_λ 对角线为常数"""
    k = require_connected_regular(g)
    perron = spec.class_index(k)
    details = {}
    for idx, ec in enumerate(spec):
        if ec.multiplicity != 1 or idx == perron:
            continue
        E = spectral_idempotent(g, idx, spec, exact_check=False)
        constant = constant_diagonal_check(E, spec.tol)
        full = partition_from_idempotent(g, idx, spec) is not None
        details[str(ec.display_value)] = {"constant_diagonal": constant, "full_partition": full}
    holds = all(d["constant_diagonal"] == d["full_partition"] for d in details.values())
    return ClaimResult("constant-diagonal", holds, details)


@claim("product-complete")
def _product_complete(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """输入图 C：C □ K_{m+1} 在 λ = ℓ−1 处有参数 (ℓ,1) 的满划分，格子是 C 的拷贝"""
    prediction = product_with_complete_prediction(g)
    return ClaimResult(
        "product-complete",
        True,
        {
            "order": prediction.graph.n,
            "eigenvalue": prediction.eigenvalue,
            "multiplicity": prediction.multiplicity,
            "params": list(prediction.params),
        },
    )


@claim("two-partitions")
def _two_partitions(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """任意两个满划分：交集大小都是 ℓ，KK′ = ℓJ，重排后块形式成立"""
    census = full_indubitable_census(g, spec)
    if len(census) < 2:
        raise PreconditionError(f"需要至少两个满划分，实际 {len(census)} 个")
    details = {}
    holds = True
    for r1, r2 in itertools.combinations(census.reports.values(), 2):
        first, second = sorted((r1, r2), key=lambda r: len(r.partition), reverse=True)
        pair = analyze_partition_pair(g, first, second, spec)
        key = f"{spec[first.class_index].display_value},{spec[second.class_index].display_value}"
        details[key] = {"ell": pair.ell, "block_form": pair.block_form_verified, "entrywise": pair.entrywise_identity}
        holds = holds and pair.block_form_verified and pair.entrywise_identity is not False
    return ClaimResult("two-partitions", holds, details)


@claim("four-eigenvalue")
def _four_eigenvalue(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    c = classify_four_eigenvalue(g, spec)
    return ClaimResult("four-eigenvalue", c.verdict in (Verdict.GRID, Verdict.GRID_COMPLEMENT), c.to_dict())


@claim("bipartite-four")
def _bipartite_four(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """二部、四个特征值、λ ≠ −k 处有满划分 ⇒ 交数组 (m, m−1, 1; 1, m−1, m)"""
    k = require_connected_regular(g)
    if not basic_profile(g).is_bipartite or len(spec) != 4:
        raise PreconditionError("需要四个特征值的二部图")
    census = full_indubitable_census(g, spec)
    others = [r for r in census.reports.values() if abs(r.eigenvalue + k) > spec.threshold]
    if not others:
        raise PreconditionError("λ ≠ −k 处没有满划分")
    m = others[0].multiplicity
    array = intersection_array(g)
    expected = ((m, m - 1, 1), (1, m - 1, m))
    actual = array.as_tuple() if array else None
    return ClaimResult("bipartite-four", actual == expected, {"m": m, "intersection_array": str(array)})


@claim("bipartite-five")
def _bipartite_five(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    c = classify_bipartite_five_eigenvalue(g, spec)
    return ClaimResult("bipartite-five", c.verdict == Verdict.BIPARTITE_DOUBLE_MULTIPARTITE, c.to_dict())


@claim("drg")
def _drg(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    c = classify_drg_full_partition(g, spec)
    return ClaimResult("drg", True, c.to_dict())


@claim("three-class")
def _three_class(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    is_full = three_class_detection(g, _require_partition(pi, "three-class"), spec)
    return ClaimResult("three-class", True, {"full": is_full, "scheme_closed": is_full})


@claim("complement")
def _complement(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """每个满划分在（连通的）补图中仍是满的，参数 (c−1−a, c−b)"""
    census = full_indubitable_census(g, spec)
    details = {}
    for idx, report in sorted(census.reports.items()):
        transferred = complement_transfer(g, report)
        details[str(spec[idx].display_value)] = (
            None if transferred is None else {"eigenvalue": transferred.eigenvalue, "params": [transferred.a, transferred.b]}
        )
    return ClaimResult("complement", True, details)


@claim("bipartite-mirror")
def _bipartite_mirror(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    return ClaimResult("bipartite-mirror", bipartite_mirror_check(g, spec))


@claim("uniqueness")
def _uniqueness(g: Graph, spec: Spectrum, pi: Optional[Partition]) -> ClaimResult:
    """给定的满划分与从 E_λ 提取的划分相同"""
    pi = _require_partition(pi, "uniqueness")
    report = full_partition_for(g, pi, spec)
    if report is None:
        raise PreconditionError("给定划分不是不可疑划分")
    holds = uniqueness_check(g, pi, report.eigenvalue, spec)
    return ClaimResult("uniqueness", holds, {"eigenvalue": report.eigenvalue, "cells": len(report.partition)})


def verify_claim(name: str, g: Graph, cells=None, tol: Optional[float] = None) -> ClaimResult:
    if name not in CLAIMS:
        raise PreconditionError(f"未知 claim {name!r}，可选: {', '.join(sorted(CLAIMS))}")
    spec = spectrum(g, tol)
    pi = as_partition(g, cells) if cells is not None else None
    result = CLAIMS[name](g, spec, pi)
    logger.info(f"{'✅' if result.holds else '❌'} {name}")
    return result
