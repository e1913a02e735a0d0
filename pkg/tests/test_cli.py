"""Command-line interface: subcommands, exit codes, report routing."""
import json

import pytest

from mahlerlab.cli import main

LEHMER_LINE = "lehmer: 1 1 0 -1 -1 -1 -1 -1 0 1 1\n"


@pytest.fixture
def lehmer_file(tmp_path):
    f = tmp_path / "lehmer.txt"
    f.write_text(LEHMER_LINE)
    return str(f)


class TestAnalyze:
    def test_measure_in_output(self, lehmer_file, capsys):
        assert main(["analyze", lehmer_file, "--precision", "256"]) == 0
        payload = json.loads(capsys.readouterr().out)
        m = payload["polynomials"][0]["measure"]
        assert abs(m["rootProduct"] - 1.176280) < 1e-5
        assert abs(m["graeffe"] - 1.176280) < 1e-5

    def test_empty_corpus(self, tmp_path, capsys):
        f = tmp_path / "empty.txt"
        f.write_text("# nothing here\n")
        assert main(["analyze", str(f)]) == 0
        assert json.loads(capsys.readouterr().out) == {"polynomials": []}

    def test_parse_error_exit_1(self, tmp_path, capsys):
        f = tmp_path / "bad.txt"
        f.write_text("1 oops 1\n")
        assert main(["analyze", str(f)]) == 1
        assert "line 1" in capsys.readouterr().err

    def test_missing_file_exit_1(self):
        assert main(["analyze", "/nonexistent/corpus.txt"]) == 1

    def test_bad_precision_exit_1(self, lehmer_file):
        assert main(["analyze", lehmer_file, "--precision", "32"]) == 1

    def test_env_precision(self, lehmer_file, monkeypatch, capsys):
        monkeypatch.setenv("MAHLERLAB_PRECISION", "192")
        assert main(["analyze", lehmer_file]) == 0
        json.loads(capsys.readouterr().out)

    def test_out_file(self, lehmer_file, tmp_path):
        out = tmp_path / "report.json"
        assert main(["analyze", lehmer_file, "--out", str(out)]) == 0
        assert json.loads(out.read_text())["polynomials"]


class TestVerify:
    def test_lehmer_exit_0(self, lehmer_file, capsys):
        assert main(["verify", lehmer_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        verdicts = {b["verdict"] for b in payload["polynomials"][0]["bounds"]}
        assert "Violated" not in verdicts

    def test_cyclotomic_corpus(self, tmp_path, capsys):
        f = tmp_path / "phi5.txt"
        f.write_text("phi5: 1 1 1 1 1\n")
        assert main(["verify", str(f)]) == 0
        payload = json.loads(capsys.readouterr().out)
        verdicts = [b["verdict"] for b in payload["polynomials"][0]["bounds"]]
        assert "NotApplicable" in verdicts
        assert "Violated" not in verdicts

    def test_csv_format(self, lehmer_file, capsys):
        assert main(["verify", lehmer_file, "--format", "csv"]) == 0
        head = capsys.readouterr().out.splitlines()[0]
        assert head == "id,degree,theoremId,applicable,lhs,rhs,margin,verdict"


class TestSearch:
    def test_lehmer_top(self, capsys):
        assert main(["search", "--degree", "10", "--height", "1", "--theta", "1.3"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert "1.176280" in lines[1]

    def test_empty(self, capsys):
        assert main(["search", "--degree", "2", "--height", "1", "--theta", "1.3"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 1

    def test_bad_params(self):
        assert main(["search", "--degree", "3", "--height", "1"]) == 1
        assert main(["search", "--degree", "4", "--height", "1", "--theta", "1.5"]) == 1


class TestPlotAndConstants:
    def test_plot_deterministic(self, lehmer_file, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        assert main(["plot", lehmer_file, "--out", str(a)]) == 0
        assert main(["plot", lehmer_file, "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert a.read_text().startswith("<svg")

    def test_constants(self, capsys):
        assert main(["constants"]) == 0
        out = capsys.readouterr().out
        assert "1.324717" in out  # theta0
        assert "0.655" in out  # A
        assert "0.984" in out  # B
        assert "3.591" in out and "3.594" in out  # solved and printed c
