"""graph6 流的满不可疑划分普查

逐行解析，线程池并行分析，结果按输入顺序分批输出 JSON-lines；
解析失败、一致性错误都只计数并记日志，处理继续。
"""
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, TextIO, Tuple, Union

import pandas as pd
from pydantic import BaseModel, Field

from indubitable.analysis.report import CensusRecord, FullPartitionRecord
from indubitable.core.config import get_config, resolve_tolerance
from indubitable.core.errors import (
    EXIT_CONSISTENCY,
    EXIT_OK,
    EXIT_PARSE,
    ConsistencyError,
    GraphFormatError,
    PreconditionError,
)
from indubitable.core.logger import log_census_failure
from indubitable.graph.graph import basic_profile
from indubitable.graph.io import parse_graph6, read_graph6_lines, write_graph6
from indubitable.partitions.indubitable import full_indubitable_census
from indubitable.schemes.classify import (
    classify_bipartite_five_eigenvalue,
    classify_drg_full_partition,
    classify_four_eigenvalue,
)
from indubitable.schemes.distance import intersection_array
from indubitable.spectral.hadamard import hadamard_dim, hadamard_span_oracle
from indubitable.spectral.spectrum import spectral_idempotent, spectrum

logger = logging.getLogger(__name__)

BATCH_PER_WORKER = 32


@dataclass(frozen=True)
class CensusOutcome:
    """一行的处理结果：record / 解析错误 / 一致性错误 / 跳过 四选一"""

    line_no: int
    record: Optional[CensusRecord] = None
    emit: bool = False
    parse_error: Optional[str] = None
    consistency_error: Optional[str] = None
    skipped: Optional[str] = None


class CensusSummary(BaseModel):
    total: int = 0
    analyzed: int = 0
    emitted: int = 0
    parse_failures: int = 0
    consistency_errors: int = 0
    skipped: int = 0
    groups: List[Dict[str, int]] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.consistency_errors:
            return EXIT_CONSISTENCY
        if self.parse_failures:
            return EXIT_PARSE
        return EXIT_OK


def analyze_census_line(
    line_no: int,
    text: str,
    tol: float,
    include_all: bool = False,
    check_oracle: bool = False,
) -> CensusOutcome:
    """分析一行 graph6；不抛异常，错误写进结果"""
    try:
        g = parse_graph6(text)
    except GraphFormatError as e:
        return CensusOutcome(line_no=line_no, parse_error=str(e))

    profile = basic_profile(g)
    if not profile.connected or not profile.is_regular:
        return CensusOutcome(line_no=line_no, skipped="disconnected" if not profile.connected else "not_regular")

    try:
        spec = spectrum(g, tol)
        census = full_indubitable_census(g, spec)

        verdicts = {}
        if len(spec) == 4:
            verdicts["four_eigenvalue"] = classify_four_eigenvalue(g, spec).verdict.value
        if profile.is_bipartite and len(spec) == 5:
            verdicts["bipartite_five_eigenvalue"] = classify_bipartite_five_eigenvalue(g, spec).verdict.value
        array = intersection_array(g)
        if array is not None and array.valency > 2 and array.diameter >= 2:
            verdicts["distance_regular"] = classify_drg_full_partition(g, spec).verdict.value

        agrees = None
        if check_oracle:
            agrees = True
            for idx in range(len(spec)):
                E = spectral_idempotent(g, idx, spec, exact_check=False)
                dim = hadamard_dim(E, tol)
                agrees = agrees and dim == hadamard_span_oracle([E], dim, tol)
    except ConsistencyError as e:
        return CensusOutcome(line_no=line_no, consistency_error=str(e))
    except PreconditionError as e:
        return CensusOutcome(line_no=line_no, skipped=str(e))

    full = [
        FullPartitionRecord(
            eigenvalue=spec[idx].display_value,
            multiplicity=report.multiplicity,
            cells=report.cells,
            params=[report.a, report.b],
        )
        for idx, report in sorted(census.reports.items())
    ]
    record = CensusRecord(
        line=line_no,
        graph6=write_graph6(g),
        n=g.n,
        k=profile.regular_degree,
        eigenvalue_classes=len(spec),
        full_partitions=full,
        verdicts=verdicts,
        hadamard_oracle_agrees=agrees,
    )
    return CensusOutcome(line_no=line_no, record=record, emit=include_all or bool(full))


def _batches(items: Iterable[Tuple[int, str]], size: int):
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


class CensusTally:
    """逐批累计汇总；记录写出后即丢弃，只保留计数和 (n, k, 满划分数) 分组"""

    def __init__(self):
        self.summary = CensusSummary()
        self._groups: Optional[pd.Series] = None

    def add_batch(self, outcomes: List[CensusOutcome]) -> None:
        s = self.summary
        s.total += len(outcomes)
        s.emitted += sum(1 for o in outcomes if o.emit)
        s.parse_failures += sum(1 for o in outcomes if o.parse_error)
        s.consistency_errors += sum(1 for o in outcomes if o.consistency_error)
        s.skipped += sum(1 for o in outcomes if o.skipped)

        rows = [
            {"n": o.record.n, "k": o.record.k, "full_partitions": len(o.record.full_partitions)}
            for o in outcomes
            if o.record is not None
        ]
        s.analyzed += len(rows)
        if rows:
            counts = pd.DataFrame(rows).value_counts(["n", "k", "full_partitions"])
            self._groups = counts if self._groups is None else self._groups.add(counts, fill_value=0)

    def finish(self) -> CensusSummary:
        if self._groups is not None:
            self.summary.groups = [
                {"n": int(n), "k": int(k), "full_partitions": int(fp), "graphs": int(count)}
                for (n, k, fp), count in self._groups.sort_index().items()
            ]
        return self.summary


def run_census(
    stream: Iterable[Union[str, bytes]],
    out: TextIO,
    jobs: Optional[int] = None,
    include_all: bool = False,
    tol: Optional[float] = None,
    check_oracle: bool = False,
) -> CensusSummary:
    """普查 graph6 流，记录写到 out（每行一个 JSON），返回汇总

    输出顺序与输入顺序一致，与 jobs 无关。
    """
    tol = resolve_tolerance(tol)
    jobs = jobs or get_config().jobs
    tally = CensusTally()

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        for batch in _batches(read_graph6_lines(stream), jobs * BATCH_PER_WORKER):
            futures = {
                executor.submit(analyze_census_line, line_no, text, tol, include_all, check_oracle): line_no
                for line_no, text in batch
            }
            done = {}
            for future in as_completed(futures):
                done[futures[future]] = future.result()

            for line_no, _ in batch:
                outcome = done[line_no]
                if outcome.parse_error:
                    log_census_failure(line_no, "parse", outcome.parse_error)
                elif outcome.consistency_error:
                    logger.error(f"❌ 第 {line_no} 行一致性错误: {outcome.consistency_error}")
                    log_census_failure(line_no, "consistency", outcome.consistency_error)
                if outcome.emit:
                    out.write(outcome.record.model_dump_json() + "\n")
            out.flush()
            tally.add_batch([done[line_no] for line_no, _ in batch])

    summary = tally.finish()
    logger.info(
        f"普查完成: 共 {summary.total} 行, 分析 {summary.analyzed}, 输出 {summary.emitted}, "
        f"解析失败 {summary.parse_failures}, 一致性错误 {summary.consistency_errors}, 跳过 {summary.skipped}"
    )
    return summary
