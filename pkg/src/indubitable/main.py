"""满不可疑划分 CLI 入口。"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from indubitable.analysis.analyze import format_text, load_graph, run_analyze
from indubitable.analysis.census import run_census
from indubitable.analysis.claims import CLAIMS, verify_claim
from indubitable.analysis.report import AnalysisReport, CensusRecord
from indubitable.core.errors import EXIT_GENERIC, EXIT_OK, EXIT_PRECONDITION, IndubitableError
from indubitable.core.logger import get_logger, set_level
from indubitable.graph.families import FAMILIES, FamilySpec, generate, permute
from indubitable.graph.io import parse_partition, write_edge_list, write_graph6

logger = get_logger("indubitable.cli")

SCHEMAS = {"analysis": AnalysisReport, "census": CensusRecord}


def _load(args):
    return load_graph(
        graph6=args.graph6,
        edges=args.edges,
        family=args.family,
        path=args.input,
    )


def cmd_analyze(args) -> int:
    """单图分析"""
    g, source = _load(args)
    report = run_analyze(g, tol=args.tol, source=source)
    if args.format == "text":
        print(format_text(report))
    else:
        print(report.model_dump_json(indent=2))
    if report.status != "ok":
        return EXIT_PRECONDITION
    logger.info(f"✅ 分析完成: 满划分 {report.full_partition_count} 个")
    return EXIT_OK


def cmd_generate(args) -> int:
    """生成图族成员"""
    g = generate(FamilySpec.parse(args.family))
    if args.permute:
        g = permute(g, [int(x) for x in args.permute.split(",")])
    if args.output_format == "edges":
        sys.stdout.write(write_edge_list(g))
    else:
        print(write_graph6(g))
    return EXIT_OK


def cmd_census(args) -> int:
    """graph6 流普查"""
    if args.input:
        with open(args.input, "rb") as stream:
            summary = run_census(stream, sys.stdout, args.jobs, args.all, args.tol, args.oracle)
    else:
        summary = run_census(sys.stdin.buffer, sys.stdout, args.jobs, args.all, args.tol, args.oracle)

    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as f:
            f.write(summary.model_dump_json(indent=2))
    return summary.exit_code


def cmd_verify(args) -> int:
    """对一张图检查一条结论"""
    g, _ = _load(args)
    cells = None
    if args.partition:
        with open(args.partition, "r", encoding="utf-8") as f:
            cells = parse_partition(f)
    result = verify_claim(args.claim, g, cells, tol=args.tol)

    if args.format == "text":
        print("=" * 50)
        print(f"{'✅' if result.holds else '❌'} {result.claim}: {'成立' if result.holds else '不成立'}")
        print("=" * 50)
        for key, value in result.details.items():
            print(f"  {key}: {value}")
    else:
        print(json.dumps(result.to_dict(), ensure_ascii=False, indent=2, default=str))
    return EXIT_OK if result.holds else EXIT_GENERIC


def cmd_schema(args) -> int:
    """打印 JSON schema"""
    print(json.dumps(SCHEMAS[args.model].model_json_schema(), ensure_ascii=False, indent=2))
    return EXIT_OK


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph6 文件（取第一行），缺省读标准输入")
    p.add_argument("--graph6", "-g", help="graph6 字符串")
    p.add_argument("--edges", "-e", help="边表文件")
    p.add_argument("--family", "-f", help=f"图族，如 grid:3,4；可选 {', '.join(FAMILIES)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indubitable", description="正则图的满不可疑划分分析")
    parser.add_argument("--tol", type=float, help="数值容差（覆盖 config.json）")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="输出格式")
    parser.add_argument("--verbose", "-v", action="store_true", help="详细输出")
    parser.add_argument("--quiet", "-q", action="store_true", help="只输出错误")

    subparsers = parser.add_subparsers(dest="cmd", required=True)

    # analyze 子命令
    analyze_parser = subparsers.add_parser("analyze", help="分析一张图")
    _add_graph_source(analyze_parser)
    analyze_parser.set_defaults(func=cmd_analyze)

    # generate 子命令
    generate_parser = subparsers.add_parser("generate", help="生成图族成员")
    generate_parser.add_argument("--family", "-f", required=True, help="图族，如 crown:4")
    generate_parser.add_argument("--output-format", choices=["graph6", "edges"], default="graph6")
    generate_parser.add_argument("--permute", help="顶点重排，逗号分隔")
    generate_parser.set_defaults(func=cmd_generate)

    # census 子命令
    census_parser = subparsers.add_parser("census", help="普查 graph6 流")
    census_parser.add_argument("input", nargs="?", help="graph6 文件，缺省读标准输入")
    census_parser.add_argument("--all", action="store_true", help="输出所有图，而不只是有满划分的")
    census_parser.add_argument("--jobs", "-j", type=int, help="并行线程数")
    census_parser.add_argument("--oracle", action="store_true", help="用张成空间 oracle 复核 Hadamard 维数")
    census_parser.add_argument("--summary", help="汇总写入该文件")
    census_parser.set_defaults(func=cmd_census)

    # verify 子命令
    verify_parser = subparsers.add_parser("verify", help="检查一条结论")
    verify_parser.add_argument("claim", choices=sorted(CLAIMS), help="结论名")
    _add_graph_source(verify_parser)
    verify_parser.add_argument("--partition", "-p", help="划分文件：每行一个格子")
    verify_parser.set_defaults(func=cmd_verify)

    # schema 子命令
    schema_parser = subparsers.add_parser("schema", help="打印 JSON schema")
    schema_parser.add_argument("model", nargs="?", choices=sorted(SCHEMAS), default="analysis")
    schema_parser.set_defaults(func=cmd_schema)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_level(logging.DEBUG)
    elif args.quiet:
        set_level(logging.ERROR)

    try:
        return args.func(args)
    except IndubitableError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"❌ {e}")
        return EXIT_GENERIC


def cli() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli()
