"""共享的图夹具"""
import networkx as nx
import pytest

from indubitable.graph import build_graph, complement, complete_multipartite, cycle, generate, petersen, write_graph6
from indubitable.graph.families import FamilySpec, bipartite_double, hypercube, line_graph


def family(text: str):
    return generate(FamilySpec.parse(text))


def random_regular(k: int, n: int, seed: int):
    """networkx 随机连通 k-正则图，顶点按 0..n-1 编号；不连通时换下一个种子"""
    while True:
        g = nx.random_regular_graph(k, n, seed=seed)
        if nx.is_connected(g):
            return build_graph(n, g.edges())
        seed += 1000


def random_corpus(count: int, seed: int = 0):
    """graph6 语料：n 在 6..14 间轮换，偶数阶交替 3/4-正则，奇数阶 4-正则"""
    lines = []
    for i in range(count):
        n = 6 + i % 9
        k = 3 if n % 2 == 0 and (i // 9) % 2 == 0 else 4
        lines.append(write_graph6(random_regular(k, n, seed + i)))
    return lines


def parallel_classes(d: int = 3):
    """超立方体 Q_d 的线图里按方向分组的边（平行类）"""
    edges = hypercube(d).edges()
    classes = {}
    for idx, (u, v) in enumerate(edges):
        classes.setdefault((u ^ v).bit_length() - 1, []).append(idx)
    return [classes[b] for b in sorted(classes)]


@pytest.fixture
def grid34():
    return family("grid:3,4")


@pytest.fixture
def crown4():
    return family("crown:4")


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture
def k222():
    return complete_multipartite([2, 2, 2])


@pytest.fixture
def k44():
    return complete_multipartite([4, 4])


@pytest.fixture
def double_k222():
    return bipartite_double(complete_multipartite([2, 2, 2]))


@pytest.fixture
def cuboctahedron():
    return line_graph(hypercube(3))


@pytest.fixture
def grid34_complement(grid34):
    return complement(grid34)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def c8():
    return cycle(8)
