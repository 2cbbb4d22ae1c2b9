"""CLI 入口测试：子命令、输出格式、退出码"""
import json
import logging

from indubitable.graph import build_graph, cycle, write_graph6
from indubitable.main import main
from indubitable.tests.conftest import family

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class TestGenerate:
    def test_graph6(self, capsys):
        assert main(["generate", "--family", "crown:4"]) == 0
        assert capsys.readouterr().out.strip() == write_graph6(family("crown:4"))

    def test_edges(self, capsys):
        assert main(["generate", "--family", "cycle:4", "--output-format", "edges"]) == 0
        assert capsys.readouterr().out.splitlines() == ["4 4", "0 1", "0 3", "1 2", "2 3"]

    def test_permute(self, capsys):
        assert main(["generate", "--family", "cycle:4", "--permute", "0,2,1,3"]) == 0
        out = capsys.readouterr().out.strip()
        assert out != write_graph6(cycle(4))

    def test_bad_family(self):
        assert main(["generate", "--family", "grid:3"]) == 4


class TestAnalyze:
    def test_json(self, capsys):
        assert main(["analyze", "--family", "grid:3,4"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["full_partition_count"] == 2
        assert report["classifications"][0]["verdict"] == "grid"

    def test_text(self, capsys):
        assert main(["--format", "text", "analyze", "--graph6", write_graph6(family("crown:4"))]) == 0
        out = capsys.readouterr().out
        assert "grid_complement" in out
        assert "=" * 50 in out

    def test_disconnected(self, capsys):
        g6 = write_graph6(build_graph(4, [(0, 1), (2, 3)]))
        assert main(["analyze", "--graph6", g6]) == 4
        assert json.loads(capsys.readouterr().out)["status"] == "degraded"

    def test_parse_error(self):
        assert main(["analyze", "--graph6", "D?"]) == 3

    def test_file(self, tmp_path, capsys):
        path = tmp_path / "one.g6"
        path.write_text(write_graph6(cycle(6)) + "\n")
        assert main(["--tol", "1e-8", "analyze", str(path)]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["tolerance"] == 1e-8
        assert report["graph"]["source"] == "graph6:one.g6"

    def test_missing_file(self, tmp_path):
        assert main(["analyze", str(tmp_path / "missing.g6")]) == 1


class TestCensus:
    def test_file_and_summary(self, tmp_path, capsys):
        corpus = tmp_path / "cycles.g6"
        corpus.write_text("".join(write_graph6(cycle(n)) + "\n" for n in range(3, 13)))
        summary = tmp_path / "summary.json"
        assert main(["census", str(corpus), "--jobs", "2", "--summary", str(summary)]) == 0
        records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [r["n"] for r in records] == [3, 4, 6, 8, 9, 10, 12]
        data = json.loads(summary.read_text())
        assert data["total"] == 10
        assert data["emitted"] == 7

    def test_parse_failure_exit(self, tmp_path):
        corpus = tmp_path / "bad.g6"
        corpus.write_text("A_\nD?\n")
        assert main(["--quiet", "census", str(corpus)]) == 3


class TestVerify:
    def test_holds(self, capsys):
        assert main(["verify", "four-eigenvalue", "--family", "grid:3,4"]) == 0
        result = json.loads(capsys.readouterr().out)
        assert result["holds"] is True

    def test_partition_file(self, tmp_path, capsys):
        partition = tmp_path / "rows.txt"
        partition.write_text("0 1 2 3\n4 5 6 7\n8 9 10 11\n")
        assert main(["--format", "text", "verify", "uniqueness", "--family", "grid:3,4", "--partition", str(partition)]) == 0
        assert "uniqueness: 成立" in capsys.readouterr().out

    def test_does_not_hold(self):
        assert main(["verify", "bipartite-five", "--family", "cycle:8"]) == 1

    def test_missing_partition(self):
        assert main(["verify", "three-class", "--family", "grid:3,4"]) == 4

    def test_not_applicable(self):
        assert main(["verify", "bipartite", "--family", "petersen"]) == 4


class TestSchema:
    def test_analysis(self, capsys):
        assert main(["schema"]) == 0
        schema = json.loads(capsys.readouterr().out)
        assert "spectrum" in schema["properties"]

    def test_census(self, capsys):
        assert main(["schema", "census"]) == 0
        assert "full_partitions" in json.loads(capsys.readouterr().out)["properties"]
