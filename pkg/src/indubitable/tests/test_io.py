"""graph6 / 边表 / 划分格式测试"""
import io
import logging

import networkx as nx
import numpy as np
import pytest

from indubitable.core.errors import GraphFormatError
from indubitable.graph import (
    build_graph,
    complete,
    cycle,
    parse_edge_list,
    parse_graph6,
    parse_partition,
    petersen,
    read_graph6_lines,
    write_edge_list,
    write_graph6,
    write_partition,
)
from indubitable.tests.conftest import family, random_regular

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _networkx_graph6(g) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, nodes=list(range(g.n)), header=False).decode("ascii").strip()


class TestGraph6:
    """graph6 编解码"""

    def test_k2(self):
        g = parse_graph6("A_")
        assert g == complete(2)

    def test_star(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_") == complete(2)
        assert parse_graph6(b"A_\n") == complete(2)

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count == 0
        assert write_graph6(g) == "@"

    def test_known_encoding(self):
        # 上三角按列：01 02 12 03 13 23 → 101101
        assert write_graph6(cycle(4)) == "Cl"
        assert parse_graph6("Cl") == cycle(4)

    @pytest.mark.parametrize("seed", range(5))
    def test_roundtrip_random(self, seed):
        g = random_regular(3, 10 + 2 * seed, seed)
        text = write_graph6(g)
        assert text == _networkx_graph6(g)
        assert parse_graph6(text) == g
        assert parse_graph6(text.encode("ascii") + b"\n") == g

    def test_families_roundtrip(self):
        for g in (petersen(), family("grid:3,4"), family("crown:4"), cycle(7)):
            assert parse_graph6(write_graph6(g)) == g

    def test_long_header(self):
        g = cycle(70)
        text = write_graph6(g)
        assert text.startswith("~")
        assert text == _networkx_graph6(g)
        assert parse_graph6(text) == g

    def test_truncated_payload(self):
        with pytest.raises(GraphFormatError) as e:
            parse_graph6("D?")
        assert e.value.offset is not None
        logger.info(f"截断载荷: {e.value}")

    def test_extra_payload(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("D?{?")

    def test_bad_byte_offset(self):
        with pytest.raises(GraphFormatError) as e:
            parse_graph6("A ")
        assert e.value.offset == 1

    def test_nonzero_padding(self):
        # n=2 只有 1 位，其余 5 位必须为 0
        with pytest.raises(GraphFormatError, match="填充"):
            parse_graph6("A`")

    def test_truncated_long_header(self):
        with pytest.raises(GraphFormatError, match="长度头"):
            parse_graph6("~?")

    def test_empty(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("")

    def test_read_lines_skips_blank(self):
        lines = list(read_graph6_lines(["A_\n", "\n", b"Bw\n"]))
        assert lines == [(1, "A_"), (3, "Bw")]
        assert parse_graph6(lines[1][1]) == complete(3)


class TestEdgeList:
    """边表格式"""

    def test_roundtrip(self):
        g = petersen()
        assert parse_edge_list(io.StringIO(write_edge_list(g))) == g

    def test_comments_ignored(self):
        text = "# triangle\n3 3\n0 1\n1 2\n# middle\n0 2\n"
        assert parse_edge_list(io.StringIO(text)) == complete(3)

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError) as e:
            parse_edge_list(io.StringIO("3 2\n0 1\n"))
        assert e.value.line == 1

    def test_bad_token_reports_line(self):
        with pytest.raises(GraphFormatError) as e:
            parse_edge_list(io.StringIO("3 2\n0 1\n1 x\n"))
        assert e.value.line == 3

    def test_out_of_range(self):
        with pytest.raises(GraphFormatError, match="越界"):
            parse_edge_list(io.StringIO("3 1\n0 3\n"))


class TestPartitionFormat:
    def test_roundtrip(self):
        cells = [[0, 3], [1, 4], [2, 5]]
        assert parse_partition(io.StringIO(write_partition(cells))) == cells

    def test_bad_label(self):
        with pytest.raises(GraphFormatError):
            parse_partition(io.StringIO("0 1\n2 a\n"))

    def test_edges_match_adjacency(self):
        g = build_graph(4, [(0, 3), (1, 2)])
        text = write_edge_list(g)
        assert text.splitlines() == ["4 2", "0 3", "1 2"]
        assert np.array_equal(parse_edge_list(io.StringIO(text)).adj, g.adj)
