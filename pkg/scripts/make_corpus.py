#!/usr/bin/env python3
"""
生成普查语料
============
随机 k-正则连通图写成 graph6，每行一张，供 census 子命令读取。

用法:
    python scripts/make_corpus.py --k 4 --n 12,14,16 --count 200 > corpus.g6
    python scripts/make_corpus.py --k 3 --n 20 --count 50 --seed 7 -o cubic20.g6
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import networkx as nx

from indubitable.core.logger import get_logger
from indubitable.graph.graph import Graph, build_graph
from indubitable.graph.io import write_graph6

logger = get_logger("indubitable.scripts")


def random_connected_regular(k: int, n: int, seed: int) -> Graph:
    """固定种子的随机 k-正则连通图；不连通时换种子重试"""
    while True:
        h = nx.random_regular_graph(k, n, seed=seed)
        if nx.is_connected(h):
            return build_graph(n, h.edges())
        seed += 1000


def main():
    parser = argparse.ArgumentParser(description="生成随机正则图 graph6 语料")
    parser.add_argument("--k", type=int, required=True, help="度数")
    parser.add_argument("--n", required=True, help="阶数，逗号分隔")
    parser.add_argument("--count", type=int, default=100, help="每个阶数的图数")
    parser.add_argument("--seed", type=int, default=0, help="起始种子")
    parser.add_argument("--output", "-o", help="输出文件，缺省写标准输出")
    args = parser.parse_args()

    orders = [int(x) for x in args.n.split(",")]
    out = open(args.output, "w", encoding="ascii") if args.output else sys.stdout
    try:
        total = 0
        for n in orders:
            if (n * args.k) % 2 or args.k >= n:
                logger.warning(f"⚠️ 跳过 n={n}: 不存在 {args.k}-正则图")
                continue
            for i in range(args.count):
                g = random_connected_regular(args.k, n, args.seed + i)
                out.write(write_graph6(g) + "\n")
                total += 1
        logger.info(f"✅ 写出 {total} 张图")
    finally:
        if args.output:
            out.close()


if __name__ == "__main__":
    main()
