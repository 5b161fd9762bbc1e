import io
import subprocess
import sys
from pathlib import Path

import pytest

from rulerwrap import EmptyInput, NonPositiveValue
from rulerwrap.cli import main, parse_lengths, ParseError
from conftest import RUNNING

DATA = Path(__file__).parent / "data"
RUNNING_TEXT = " ".join(str(v) for v in RUNNING)


@pytest.fixture
def running_file(tmp_path):
    path = tmp_path / "running.txt"
    path.write_text(RUNNING_TEXT + "\n")
    return str(path)


class TestParseLengths:
    def test_running_example(self):
        assert parse_lengths(RUNNING_TEXT).lengths == RUNNING

    def test_single_with_newline(self):
        assert parse_lengths("7\n").n == 1

    def test_comments_and_layout(self):
        ruler = parse_lengths("# header\n 5 6\n\n3\n   # trailing comment\n4\n")
        assert ruler.lengths == (5, 6, 3, 4)

    def test_nonpositive_value(self):
        with pytest.raises(NonPositiveValue):
            parse_lengths("5 0 3")
        with pytest.raises(NonPositiveValue):
            parse_lengths("5 -2 3")

    def test_malformed_token_reports_position(self):
        with pytest.raises(ParseError, match=r"line 2, column 3"):
            parse_lengths("5 6\n7 x8\n")
        with pytest.raises(ParseError):
            parse_lengths("5.5")

    def test_empty(self):
        with pytest.raises(EmptyInput):
            parse_lengths("# nothing here\n")


class TestWrapCommand:
    def test_restricted_length(self, capsys, running_file):
        assert main(["wrap", "--variant", "restricted", running_file]) == 0
        assert capsys.readouterr().out == "13\n"

    def test_unrestricted_length(self, capsys, running_file):
        assert main(["wrap", "--variant", "unrestricted", running_file]) == 0
        assert capsys.readouterr().out == "9\n"

    @pytest.mark.parametrize("algo", ["linear", "nlogn", "quadratic", "oracle"])
    def test_algorithms_agree(self, capsys, running_file, algo):
        assert main(["wrap", "--algo", algo, running_file]) == 0
        assert capsys.readouterr().out == "13\n"

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("1 1 3\n"))
        assert main(["wrap", "-"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_plan_output(self, capsys, running_file):
        assert main(["wrap", "--plan", running_file]) == 0
        assert capsys.readouterr().out == "13\nfolds: 5 11 18 26 35\nparts: 5 6 7 8 9 13\n"

    def test_plan_without_folds(self, capsys, tmp_path):
        path = tmp_path / "one.txt"
        path.write_text("7\n")
        assert main(["wrap", "--plan", str(path)]) == 0
        assert capsys.readouterr().out == "7\nfolds: (none)\nparts: 7\n"

    def test_trace_matches_golden_bytes(self, capsys, running_file):
        assert main(["wrap", "--trace", running_file]) == 0
        golden = (DATA / "trace_running_example.txt").read_text()
        assert capsys.readouterr().out == golden

    def test_trace_requires_linear(self, capsys, running_file):
        assert main(["wrap", "--trace", "--algo", "nlogn", running_file]) == 2
        assert "--trace" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["wrap", "/nonexistent/lengths.txt"]) == 1
        assert capsys.readouterr().err != ""

    def test_domain_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("5 0 3\n")
        assert main(["wrap", str(bad)]) == 1
        assert "domain" in capsys.readouterr().err


class TestOtherCommands:
    def test_partition(self, capsys, tmp_path):
        path = tmp_path / "t.txt"
        path.write_text("1 1 3\n")
        assert main(["partition", str(path)]) == 0
        assert capsys.readouterr().out == "3 parts: [1] [1] [3]\n"

    def test_partition_multivalue_parts(self, capsys, running_file):
        assert main(["partition", running_file]) == 0
        out = capsys.readouterr().out
        assert out == "6 parts: [5] [6] [3 4] [8] [6 2 1] [8 5]\n"

    def test_greedy(self, capsys, running_file):
        assert main(["greedy", running_file]) == 0
        out = capsys.readouterr().out
        assert "greedy: 14" in out
        assert "folds: 5" in out
        assert "exact: 13" in out
        assert "ratio: 14/13" in out

    def test_oracle_check(self, capsys, running_file):
        assert main(["oracle-check", running_file]) == 0
        out = capsys.readouterr().out
        assert "restricted: " in out and "unrestricted: " in out
        assert out.rstrip().endswith("OK")

    def test_oracle_check_max_n(self, capsys, running_file):
        assert main(["oracle-check", "--max-n", "5", running_file]) == 1

    def test_experiment_csv(self, capsys):
        args = "experiment --n 20 --runs 5 --lo 1 --hi 6 --seed 9 --checkpoints 0,1,5,20"
        assert main(args.split()) == 0
        assert capsys.readouterr().out == "checkpoint,avg_y\n0,0.0\n1,3.4\n5,9.8\n20,16.0\n"

    def test_occupancy_csv(self, capsys):
        assert main(["occupancy", "--ns", "1,50", "--runs", "3", "--seed", "2"]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == "n,mean_max_occupancy"
        assert lines[1] == "1,2.0"
        assert len(lines) == 3

    def test_adversarial(self, capsys):
        assert main(["adversarial", "--blocks", "2"]) == 0
        assert capsys.readouterr().out == "2 1 3 3 2 1 3 3 3 3\n"

    def test_adversarial_round_trip(self, capsys, monkeypatch):
        assert main(["adversarial", "--blocks", "5"]) == 0
        emitted = capsys.readouterr().out
        monkeypatch.setattr(sys, "stdin", io.StringIO(emitted))
        assert main(["wrap", "--algo", "linear", "-"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_adversarial_round_trip_large(self, capsys, monkeypatch):
        # a thousand blocks is about a million segments of input text
        assert main(["adversarial", "--blocks", "1000"]) == 0
        emitted = capsys.readouterr().out
        monkeypatch.setattr(sys, "stdin", io.StringIO(emitted))
        assert main(["wrap", "--algo", "linear", "-"]) == 0
        assert capsys.readouterr().out == "3\n"

    def test_render(self, capsys, running_file, tmp_path):
        out_path = tmp_path / "arcs.svg"
        assert main(["render", running_file, "-o", str(out_path)]) == 0
        svg = out_path.read_text()
        assert svg.startswith("<?xml") and "</svg>" in svg
        assert 'cx="48" cy="-13"' in svg

    def test_render_write_failure(self, capsys, running_file, tmp_path):
        target = str(tmp_path / "missing" / "arcs.svg")
        assert main(["render", running_file, "-o", target]) == 1


class TestUsageErrors:
    def test_no_arguments(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_bad_checkpoint_list(self, capsys):
        assert main(["experiment", "--checkpoints", "1,x"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rulerwrap", "wrap", "-"],
        input="2 1 3\n",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "3\n"


def test_backend_benchmark_runs():
    script = Path(__file__).parent.parent / "benchmarks" / "compare_backends.py"
    proc = subprocess.run(
        [sys.executable, str(script), "--sizes", "2000", "--reps", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "2000" in proc.stdout
