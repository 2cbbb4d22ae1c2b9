"""单图分析：谱 → 满不可疑划分普查 → 适用的分类"""
import logging
import sys
import time
from pathlib import Path
from typing import Optional, TextIO, Tuple

from indubitable.analysis.report import AnalysisReport, ClassificationRecord, EigenRecord, GraphMeta
from indubitable.core.config import resolve_tolerance
from indubitable.core.errors import GraphFormatError, PreconditionError
from indubitable.graph.families import FamilySpec, generate
from indubitable.graph.graph import Graph, basic_profile
from indubitable.graph.io import parse_edge_list, parse_graph6, read_graph6_lines, write_graph6
from indubitable.partitions.indubitable import constant_diagonal_check, full_indubitable_census, is_walk_regular
from indubitable.schemes.bose_mesner import srg_parameters
from indubitable.schemes.classify import (
    Classification,
    classify_bipartite_five_eigenvalue,
    classify_drg_full_partition,
    classify_four_eigenvalue,
)
from indubitable.schemes.distance import intersection_array
from indubitable.spectral.hadamard import hadamard_dim
from indubitable.spectral.spectrum import spectral_idempotent, spectrum

logger = logging.getLogger(__name__)


def load_graph(
    graph6: Optional[str] = None,
    edges: Optional[str] = None,
    family: Optional[str] = None,
    path: Optional[str] = None,
    stdin: Optional[TextIO] = None,
) -> Tuple[Graph, str]:
    """按优先级读取图：--graph6 > --edges > --family > 文件 > 标准输入的第一行 graph6"""
    if graph6:
        return parse_graph6(graph6), "graph6"
    if edges:
        with open(edges, "r", encoding="utf-8") as f:
            return parse_edge_list(f), f"edges:{Path(edges).name}"
    if family:
        spec = FamilySpec.parse(family)
        return generate(spec), f"family:{spec}"

    stream = open(path, "r", encoding="ascii", errors="replace") if path else (stdin or sys.stdin)
    try:
        for line_no, text in read_graph6_lines(stream):
            try:
                return parse_graph6(text), f"graph6:{Path(path).name if path else 'stdin'}"
            except GraphFormatError as e:
                raise GraphFormatError(str(e), line=line_no) from e
    finally:
        if path:
            stream.close()
    raise GraphFormatError("输入中没有图")


def _record(name: str, c: Classification) -> ClassificationRecord:
    return ClassificationRecord(name=name, **c.to_dict())


def run_analyze(g: Graph, tol: Optional[float] = None, source: Optional[str] = None) -> AnalysisReport:
    """完整分析一张图

    不连通或不正则时只给出基本画像，status = "degraded"。
    ConsistencyError 直接抛出。
    """
    start = time.perf_counter()
    tol = resolve_tolerance(tol)
    profile = basic_profile(g)
    meta = GraphMeta(
        n=g.n,
        edges=g.edge_count,
        k=profile.regular_degree,
        connected=profile.connected,
        bipartite=profile.is_bipartite,
        graph6=write_graph6(g),
        source=source,
    )

    failure = None
    if not profile.connected:
        failure = "disconnected"
    elif not profile.is_regular:
        failure = "not_regular"
    if failure:
        logger.warning(f"⚠️ {failure}: 只输出基本画像")
        return AnalysisReport(
            graph=meta,
            tolerance=tol,
            status="degraded",
            failure=failure,
            elapsed_ms=(time.perf_counter() - start) * 1000,
        )

    spec = spectrum(g, tol)
    census = full_indubitable_census(g, spec)
    logger.info(f"谱 {spec.as_table()}，满不可疑划分 {len(census)} 个")

    records = []
    for idx, ec in enumerate(spec):
        E = spectral_idempotent(g, idx, spec)
        report = census.reports.get(idx)
        records.append(
            EigenRecord(
                eigenvalue=ec.exact if E.exact else float(ec.value),
                multiplicity=ec.multiplicity,
                exact=bool(E.exact),
                hadamard_dim=hadamard_dim(E, tol),
                full_partition=report is not None,
                cells=report.cells if report else None,
                params=[report.a, report.b] if report else None,
                constant_diagonal=constant_diagonal_check(E, tol) if ec.multiplicity == 1 else None,
            )
        )

    array = intersection_array(g)
    classifications = []
    if len(spec) == 4:
        classifications.append(_record("four_eigenvalue", classify_four_eigenvalue(g, spec)))
    if profile.is_bipartite and len(spec) == 5:
        classifications.append(_record("bipartite_five_eigenvalue", classify_bipartite_five_eigenvalue(g, spec)))
    if array is not None and array.valency > 2 and array.diameter >= 2:
        classifications.append(_record("distance_regular", classify_drg_full_partition(g, spec)))

    srg = srg_parameters(g)
    return AnalysisReport(
        graph=meta,
        tolerance=tol,
        spectrum_ambiguous=spec.ambiguous,
        spectrum=records,
        full_partition_count=len(census),
        walk_regular=is_walk_regular(g, spec),
        intersection_array=[list(array.b), list(array.c)] if array else None,
        srg=list(srg) if srg else None,
        classifications=classifications,
        elapsed_ms=(time.perf_counter() - start) * 1000,
    )


def format_text(report: AnalysisReport) -> str:
    """人读的文本报告"""
    meta = report.graph
    lines = [
        "=" * 50,
        f"图: n={meta.n}, 边={meta.edges}, k={meta.k}, 连通={meta.connected}, 二部={meta.bipartite}",
        "=" * 50,
    ]
    if report.status != "ok":
        lines.append(f"❌ {report.failure}")
        return "\n".join(lines)

    for r in report.spectrum:
        value = r.eigenvalue if r.exact else f"{r.eigenvalue:.10g} (±{report.tolerance:g})"
        mark = f"✅ 满划分 {len(r.cells)} 格 参数 ({r.params[0]},{r.params[1]})" if r.full_partition else ""
        lines.append(f"λ={value} 重数 {r.multiplicity} dim={r.hadamard_dim} {mark}".rstrip())
    lines.append("-" * 50)
    if report.intersection_array:
        b, c = report.intersection_array
        lines.append(f"交数组: ({','.join(map(str, b))}; {','.join(map(str, c))})")
    if report.srg:
        lines.append(f"强正则参数: {tuple(report.srg)}")
    lines.append(f"游走正则: {report.walk_regular}")
    for c in report.classifications:
        lines.append(f"{c.name}: {c.verdict}")
    return "\n".join(lines)


def require_ok(report: AnalysisReport) -> None:
    if report.status != "ok":
        raise PreconditionError(f"分析未完成: {report.failure}")
