import json

import pytest
from click.testing import CliRunner

from hubwalk.cli import cli, reproduction_rows


@pytest.fixture
def runner():
    return CliRunner()


class TestRank:
    def test_table(self, runner):
        result = runner.invoke(cli, ["rank", "--generate", "path:4", "--methods", "hits,bek"])
        assert result.exit_code == 0, result.output
        assert "Hub scores (n=4, edges=3)" in result.stdout
        assert "0.57735" in result.stdout
        assert "1.54308" in result.stdout
        assert "Normalization" in result.stdout

    def test_rankings_flag(self, runner):
        result = runner.invoke(cli, ["rank", "--generate", "tailed:4,4", "--methods", "bek", "--rankings"])
        assert result.exit_code == 0
        assert "4 | 5,6,7,8 | 1,2,3" in result.stdout

    def test_json(self, runner):
        result = runner.invoke(cli, ["rank", "--generate", "star:4", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert set(payload) == {"graph", "results", "comparisons"}
        assert payload["graph"] == {"n": 4, "edges": 3}
        assert [r["method"] for r in payload["results"]] == ["cqau", "cqaw", "cqg", "hits", "pagerank", "bek"]

    def test_csv(self, runner):
        result = runner.invoke(cli, ["rank", "--generate", "path:4", "--methods", "pagerank", "--format", "csv"])
        lines = result.stdout.splitlines()
        assert lines[0] == "node,method,hub,authority"
        assert len(lines) == 5

    def test_unknown_method(self, runner):
        result = runner.invoke(cli, ["rank", "--generate", "path:4", "--methods", "salsa"])
        assert result.exit_code == 2

    def test_needs_exactly_one_source(self, runner, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("1 2\n", encoding="utf-8")
        assert runner.invoke(cli, ["rank"]).exit_code == 2
        assert runner.invoke(cli, ["rank", "--input", str(path), "--generate", "path:3"]).exit_code == 2

    def test_alpha_out_of_range(self, runner):
        assert runner.invoke(cli, ["rank", "--generate", "path:4", "--alpha", "1.5"]).exit_code == 2

    def test_malformed_input_exits_one(self, runner, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("1 2 3\n", encoding="utf-8")
        result = runner.invoke(cli, ["rank", "--input", str(path)])
        assert result.exit_code == 1
        assert "error:" in result.stderr

    def test_matrix_market_input(self, runner, tmp_path):
        path = tmp_path / "g.mtx"
        path.write_text("%%MatrixMarket matrix coordinate pattern general\n4 4 3\n1 2\n1 3\n1 4\n", encoding="utf-8")
        from_file = runner.invoke(cli, ["rank", "--input", str(path), "--input-format", "mtx", "--format", "csv"])
        generated = runner.invoke(cli, ["rank", "--generate", "star:4", "--format", "csv"])
        assert from_file.exit_code == 0
        assert from_file.stdout == generated.stdout


class TestCompare:
    def test_star_hits_bek_agree(self, runner):
        result = runner.invoke(cli, ["compare", "--generate", "star:4", "--methods", "hits,bek", "--k", "3"])
        assert result.exit_code == 0, result.output
        assert "Kendall tau-b (hub)" in result.stdout
        assert "Top-3 overlap (authority)" in result.stdout
        assert "1.000" in result.stdout

    def test_requires_methods(self, runner):
        assert runner.invoke(cli, ["compare", "--generate", "star:4"]).exit_code == 2

    def test_requires_two_methods(self, runner):
        assert runner.invoke(cli, ["compare", "--generate", "star:4", "--methods", "hits"]).exit_code == 2

    def test_k_larger_than_graph_is_clamped(self, runner):
        result = runner.invoke(cli, ["compare", "--generate", "path:4", "--methods", "hits,pagerank", "--format", "json"])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["comparisons"]["hub"]["k"] == 4

    def test_csv(self, runner):
        result = runner.invoke(cli, ["compare", "--generate", "diamond:5", "--methods", "cqaw,bek", "--format", "csv"])
        lines = result.stdout.splitlines()
        assert lines[0] == "side,method_a,method_b,tau,topk_overlap,k"
        assert len(lines) == 1 + 2 * 4


class TestGenerate:
    def test_to_file(self, runner, tmp_path):
        path = tmp_path / "ex5.txt"
        result = runner.invoke(cli, ["generate", "example5", "-o", str(path)])
        assert result.exit_code == 0
        assert result.stdout.strip() == "n=4 edges=5"
        lines = [l for l in path.read_text(encoding="utf-8").splitlines() if not l.startswith("#")]
        assert lines[0] == "n=4"
        assert len(lines[1:]) == 5

    def test_to_stdout(self, runner):
        result = runner.invoke(cli, ["generate", "path:3"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-3:] == ["n=3", "1 2", "2 3"]
        assert "n=3 edges=2" in result.stderr

    def test_seeded_scalefree_is_reproducible(self, runner, tmp_path):
        outputs = []
        for name in ("a.txt", "b.txt"):
            path = tmp_path / name
            result = runner.invoke(cli, ["generate", "scalefree:128,0.4,0.55,0.05", "--seed", "7", "-o", str(path)])
            assert result.exit_code == 0
            outputs.append(path.read_text(encoding="utf-8"))
        assert outputs[0] == outputs[1]

    def test_invalid_size_exits_one(self, runner):
        result = runner.invoke(cli, ["generate", "path:1"])
        assert result.exit_code == 1
        assert "error:" in result.stderr

    def test_unknown_generator_is_usage_error(self, runner):
        assert runner.invoke(cli, ["generate", "ring:5"]).exit_code == 2

    def test_round_trip_through_rank(self, runner, tmp_path):
        path = tmp_path / "tailed.txt"
        runner.invoke(cli, ["generate", "tailed:4,4", "-o", str(path)])
        from_file = runner.invoke(cli, ["rank", "--input", str(path), "--format", "csv"])
        in_memory = runner.invoke(cli, ["rank", "--generate", "tailed:4,4", "--format", "csv"])
        assert from_file.exit_code == 0
        assert from_file.stdout == in_memory.stdout


def test_info(runner):
    result = runner.invoke(cli, ["info", "--generate", "example5"])
    assert result.exit_code == 0
    assert "n: 4\n" in result.stdout
    assert "edges: 5\n" in result.stdout
    assert "bipartite_components: 3\n" in result.stdout


class TestReproduce:
    def test_all_examples_pass(self, runner):
        result = runner.invoke(cli, ["reproduce"])
        assert result.exit_code == 0, result.output
        assert "MISMATCH" not in result.stdout
        for example in ("[path]", "[diamond]", "[star]", "[example5]"):
            assert example in result.stdout

    def test_single_example(self, runner):
        result = runner.invoke(cli, ["reproduce", "--example", "star"])
        assert result.exit_code == 0
        assert "[path]" not in result.stdout

    def test_tight_tolerance_fails(self, runner):
        result = runner.invoke(cli, ["reproduce", "--example", "path", "--tolerance", "1e-9"])
        assert result.exit_code == 1
        assert "MISMATCH" in result.stdout

    def test_rows_cover_both_sides(self):
        rows = reproduction_rows(["diamond"], 5e-5)
        assert len(rows) == 12
        assert {r.side for r in rows} == {"hub", "authority"}
