"""Tests for the command line."""

import csv
import json

import pytest
from typer.testing import CliRunner

from zomatch import __version__
from zomatch.cli import app
from zomatch.core.enums import ExitCode
from zomatch.data.formats import parse_graph_text, parse_points_text

runner = CliRunner()


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text(
        "4 4 8\n0 0 0\n1 0 0\n2 2 0\n3 2 0\n1 1 1\n3 3 1\n0 3 1\n2 1 1\n", encoding="utf-8"
    )
    return path


@pytest.fixture
def points_file(tmp_path):
    path = tmp_path / "points.txt"
    path.write_text("A 0 0\nB 3 4\n", encoding="utf-8")
    return path


class TestBasics:
    """Test suite for global options."""

    def test_version(self):
        """Test that --version prints the version."""
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_no_args_shows_help(self):
        """Test that running without a command lists the commands."""
        result = runner.invoke(app, [])
        assert "match-graph" in result.output
        assert "verify" in result.output


class TestGenerate:
    """Test suite for the gen commands."""

    def test_graph_is_seeded(self):
        """Test that the same seed prints the same graph."""
        args = ["gen", "graph", "--n-a", "5", "--n-b", "6", "--m", "10", "--seed", "3"]
        first = runner.invoke(app, args)
        again = runner.invoke(app, args)
        assert first.exit_code == 0
        assert first.output == again.output
        graph = parse_graph_text(first.output)
        assert (graph.n_a, graph.n_b, graph.m) == (5, 6, 10)

    def test_seed_from_environment(self, monkeypatch):
        """Test that ZOM_SEED is the default seed."""
        args = ["gen", "points", "--n", "4"]
        monkeypatch.setenv("ZOM_SEED", "21")
        from_env = runner.invoke(app, args).output
        explicit = runner.invoke(app, [*args, "--seed", "21"]).output
        assert from_env == explicit
        assert parse_points_text(from_env).n_a == 4

    def test_lattice_to_file(self, tmp_path):
        """Test that a lattice with coordinates is written to a file."""
        path = tmp_path / "lattice.txt"
        result = runner.invoke(
            app, ["gen", "lattice", "--width", "3", "--height", "3", "-o", str(path)]
        )
        assert result.exit_code == 0
        graph = parse_graph_text(path.read_text(encoding="utf-8"))
        assert graph.vertex_count == 9
        assert graph.coordinates is not None

    def test_impossible_graph(self):
        """Test that too many edges exit with the input code."""
        result = runner.invoke(app, ["gen", "graph", "--n-a", "2", "--n-b", "2", "--m", "9"])
        assert result.exit_code == ExitCode.IO


class TestMatchGraph:
    """Test suite for match-graph."""

    def test_runs_and_exports(self, graph_file, tmp_path):
        """Test a checked run with the phase trace and a JSON export."""
        out = tmp_path / "stats.json"
        result = runner.invoke(
            app, ["match-graph", str(graph_file), "--trace", "--check", "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        assert "Matching size: 4" in result.output
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["matching_size"] == 4
        assert payload["weight"] == 2
        assert payload["instance"]["source"] == str(graph_file)

    def test_weights_file(self, graph_file, tmp_path):
        """Test that a weights file replaces the graph's weights."""
        weights = tmp_path / "w.txt"
        weights.write_text("0 0 0 0 0 0 0 0\n", encoding="utf-8")
        out = tmp_path / "stats.json"
        result = runner.invoke(
            app, ["match-graph", str(graph_file), "-w", str(weights), "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["weight"] == 0
        assert payload["instance"]["weights"] == "file"

    def test_separator_weights(self, tmp_path):
        """Test that separator weighting reports r and the measured constant."""
        lattice = tmp_path / "lattice.txt"
        runner.invoke(app, ["gen", "lattice", "--width", "16", "--height", "1", "-o", str(lattice)])
        out = tmp_path / "stats.json"
        result = runner.invoke(
            app, ["match-graph", str(lattice), "-w", "separator:4", "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["separator_r"] == 4
        assert payload["weight"] == 3
        assert payload["separator_constant"] == pytest.approx(0.375)

    def test_csv_export(self, graph_file, tmp_path):
        """Test that --format csv writes one row per phase."""
        stats = tmp_path / "stats.json"
        out = tmp_path / "stats.csv"
        runner.invoke(app, ["match-graph", str(graph_file), "-o", str(stats)])
        result = runner.invoke(app, ["match-graph", str(graph_file), "-f", "csv", "-o", str(out)])
        assert result.exit_code == 0
        with open(out, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        total_phases = json.loads(stats.read_text(encoding="utf-8"))["total_phases"]
        assert total_phases > 0
        assert len(rows) == total_phases
        assert [row["phase"] for row in rows] == [str(i + 1) for i in range(total_phases)]

    def test_csv_export_bottleneck(self, points_file, tmp_path):
        """Test that --format csv writes one row per distance guess."""
        out = tmp_path / "rungs.csv"
        result = runner.invoke(
            app, ["match-bottleneck", str(points_file), "-f", "csv", "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        with open(out, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
        assert [row["delta"] for row in rows] == ["5.0"]

    def test_missing_file(self, tmp_path):
        """Test that an unreadable input exits with the input code."""
        result = runner.invoke(app, ["match-graph", str(tmp_path / "absent.txt")])
        assert result.exit_code == ExitCode.IO

    def test_malformed_file(self, tmp_path):
        """Test that a parse error exits with the input code."""
        bad = tmp_path / "bad.txt"
        bad.write_text("1 1 1\n0 0 5\n", encoding="utf-8")
        result = runner.invoke(app, ["match-graph", str(bad)])
        assert result.exit_code == ExitCode.IO
        assert "Error" in result.output

    def test_unknown_format(self, graph_file):
        """Test that an unknown export format is a usage error."""
        result = runner.invoke(app, ["match-graph", str(graph_file), "-f", "xml"])
        assert result.exit_code == ExitCode.USAGE

    def test_bad_separator_size(self, graph_file):
        """Test that a non-numeric separator size is a usage error."""
        result = runner.invoke(app, ["match-graph", str(graph_file), "-w", "separator:x"])
        assert result.exit_code == ExitCode.USAGE


class TestMatchBottleneck:
    """Test suite for match-bottleneck."""

    def test_unit_pair(self, points_file, tmp_path):
        """Test that the single pair reports bottleneck 5."""
        out = tmp_path / "stats.json"
        result = runner.invoke(
            app, ["match-bottleneck", str(points_file), "--rungs", "-o", str(out)]
        )
        assert result.exit_code == 0, result.output
        assert "Bottleneck: 5" in result.output
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["bottleneck"] == 5.0
        assert payload["algorithm"] == "geo-bottleneck"

    @pytest.mark.parametrize("args", [["-e", "0"], ["-e", "1.5"], ["--r", "3"], ["--r", "0"]])
    def test_bad_parameters(self, points_file, args):
        """Test that epsilon and r are validated before running."""
        result = runner.invoke(app, ["match-bottleneck", str(points_file), *args])
        assert result.exit_code == ExitCode.USAGE

    def test_size_mismatch(self, tmp_path):
        """Test that unequal sides exit with the input code."""
        path = tmp_path / "points.txt"
        path.write_text("A 0 0\nA 1 1\nB 0 0\n", encoding="utf-8")
        result = runner.invoke(app, ["match-bottleneck", str(path)])
        assert result.exit_code == ExitCode.IO


class TestVerifyAndBench:
    """Test suite for verify and bench."""

    def test_verify(self, tmp_path):
        """Test that a short verify run passes and writes its report."""
        out = tmp_path / "report.json"
        result = runner.invoke(app, ["verify", "-n", "4", "--seed", "5", "-o", str(out)])
        assert result.exit_code == 0, result.output
        assert "4/4 oracle-equal" in result.output
        assert json.loads(out.read_text(encoding="utf-8"))["total"] == 4

    def test_bench(self, tmp_path):
        """Test that bench writes one row per size."""
        out = tmp_path / "bench.json"
        result = runner.invoke(
            app, ["bench", "--sizes", "8", "--trials", "2", "--seed", "1", "-o", str(out)]
        )
        assert result.exit_code in (ExitCode.OK, ExitCode.INVARIANT)
        rows = json.loads(out.read_text(encoding="utf-8"))["rows"]
        assert [row["n"] for row in rows] == [8]

    def test_bench_bad_sizes(self):
        """Test that a malformed size list is a usage error."""
        result = runner.invoke(app, ["bench", "--sizes", "8,x"])
        assert result.exit_code == ExitCode.USAGE
