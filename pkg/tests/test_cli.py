"""Command-line surface: exit codes, output formats and configuration."""

import csv
import io
import json
import sys
from pathlib import Path

import pytest

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from main import EXIT_FAILED, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from models import CoxeterTableModel, MinimalSetModel, VerifyModel, WeightsModel


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_minimal_text(capsys):
    code, out = run_cli(capsys, "minimal", "B", "3", "1")
    assert code == EXIT_OK
    assert "B3 r=1" in out
    assert "s3s2s1" in out
    assert "(0, 0, -1)" in out
    assert "match: yes" in out


def test_minimal_json_round_trip(capsys):
    code, out = run_cli(capsys, "minimal", "D", "4", "2", "--format", "json")
    assert code == EXIT_OK
    model = MinimalSetModel.model_validate_json(out)
    assert model.system.kind == "D"
    assert model.match is True
    assert len(model.entries) == 4
    assert sorted(e.weight for e in model.entries) == sorted(model.expected.weights)
    assert list(json.loads(out)) == sorted(json.loads(out))


def test_minimal_silent_case(capsys):
    code, out = run_cli(capsys, "minimal", "C", "3", "3")
    assert code == EXIT_OK
    assert "theorem-silent" in out
    assert "match: -" in out


def test_minimal_csv(capsys):
    code, out = run_cli(capsys, "minimal", "B", "4", "2", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["kind", "rank", "r", "word", "weight", "match"]
    assert len(rows) == 4
    assert all(row[5] == "yes" for row in rows[1:])


def test_coxeter_json(capsys):
    code, out = run_cli(capsys, "coxeter", "D", "4", "--format", "json")
    assert code == EXIT_OK
    model = CoxeterTableModel.model_validate_json(out)
    assert len(model.entries) == 8
    assert sorted(e.word for e in model.entries if e.admits) == sorted(model.pattern_words)
    assert model.all_agree
    assert all(e.grid_agrees for e in model.entries)


def test_coxeter_text_a3(capsys):
    code, out = run_cli(capsys, "coxeter", "A", "3")
    assert code == EXIT_OK
    assert "4 Coxeter elements, 4 admit" in out
    assert "(1, 2, 1)" in out
    assert "all agree: yes" in out


def test_weights_json(capsys):
    code, out = run_cli(capsys, "weights", "G", "2", "--format", "json")
    assert code == EXIT_OK
    model = WeightsModel.model_validate_json(out)
    assert model.weyl_group_order == 12
    assert model.highest_root == ["3", "2"]
    assert [f.weight for f in model.fundamental_weights] == [["2", "1"], ["3", "2"]]


def test_weights_fractions(capsys):
    code, out = run_cli(capsys, "weights", "B", "3")
    assert code == EXIT_OK
    assert "(1/2, 1, 3/2)" in out


def test_verify_json(capsys):
    code, out = run_cli(capsys, "verify", "pairing-bound", "--max-rank", "3", "--format", "json")
    assert code == EXIT_OK
    model = VerifyModel.model_validate_json(out)
    assert model.passed
    assert model.max_rank == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["minimal", "H", "3", "1"],
        ["minimal", "B", "1", "1"],
        ["minimal", "B", "3", "4"],
        ["weights", "E", "5"],
        ["minimal", "B", "3", "1", "--limit", "0"],
        ["minimal", "B", "3", "1", "--format", "xml"],
        ["verify", "thm99"],
        ["bogus"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out = run_cli(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""


def test_help_exits_zero(capsys):
    assert main(["--help"]) == EXIT_OK


def test_limit_flag(capsys):
    code, out = run_cli(capsys, "minimal", "B", "4", "1", "--limit", "100")
    assert code == EXIT_LIMIT
    assert out == ""


def test_limit_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SEMISTAB_ENUM_LIMIT", "10")
    code, _ = run_cli(capsys, "minimal", "A", "3", "1")
    assert code == EXIT_LIMIT


def test_root_rank_guard_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SEMISTAB_ROOT_MAX_RANK", "3")
    code, out = run_cli(capsys, "weights", "B", "4")
    assert code == EXIT_USAGE
    assert out == ""


def test_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SEMISTAB_FORMAT", "json")
    code, out = run_cli(capsys, "weights", "A", "2")
    assert code == EXIT_OK
    assert WeightsModel.model_validate_json(out).system.rank == 2


def test_failed_check_exit_code(capsys, monkeypatch):
    import importlib

    ssgit = importlib.import_module("services.ssgit")
    real = ssgit.expected_weights_thm32

    def wrong(rs, r):
        exp = real(rs, r)
        exp.weights = exp.weights[1:]
        return exp

    monkeypatch.setattr(ssgit, "expected_weights_thm32", wrong)
    code, out = run_cli(capsys, "minimal", "B", "4", "2")
    assert code == EXIT_FAILED
    assert "match: no" in out


def test_log_dir(tmp_path, capsys):
    log_dir = tmp_path / "logs"
    code, _ = run_cli(capsys, "minimal", "B", "3", "1", "--log-dir", str(log_dir))
    assert code == EXIT_OK
    progress = (log_dir / "progress.log").read_text()
    assert "<oracle>B3 r=1" in progress
    assert (log_dir / "failures.log").exists()


def test_json_reemits_byte_identical(capsys):
    from services.render import to_json

    for argv in (["minimal", "D", "5", "3"], ["coxeter", "B", "2"], ["weights", "C", "3"]):
        code, out = run_cli(capsys, *argv, "--format", "json")
        assert code == EXIT_OK
        model_type = {"minimal": MinimalSetModel, "coxeter": CoxeterTableModel, "weights": WeightsModel}[argv[0]]
        assert to_json(model_type.model_validate_json(out)) == out.rstrip("\n")
