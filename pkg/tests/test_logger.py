"""Diagnostic stream: XML tags, the progress tee and the failures file."""

import sys
from pathlib import Path

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from logger import close_logging, log_failure, log_progress, setup_logging


def test_tags_go_to_stderr(capsys):
    log_progress("B3 r=1: 6 cosets", "oracle")
    captured = capsys.readouterr()
    assert captured.err == "<oracle>B3 r=1: 6 cosets</oracle>\n"
    assert captured.out == ""


def test_tee_and_failures(tmp_path, capsys):
    stderr = sys.stderr
    setup_logging(str(tmp_path))
    setup_logging(str(tmp_path / "ignored"))
    try:
        log_progress("working", "oracle")
        log_failure("D4 r=2 mismatch", "thm32")
    finally:
        close_logging()
    assert sys.stderr is stderr
    assert not (tmp_path / "ignored").exists()
    progress = (tmp_path / "progress.log").read_text()
    assert "<oracle>working</oracle>" in progress
    assert "D4 r=2 mismatch" in progress
    assert (tmp_path / "failures.log").read_text() == "<thm32>\nD4 r=2 mismatch\n</thm32>\n"
    assert "<oracle>working</oracle>" in capsys.readouterr().err


def test_close_without_setup_is_harmless():
    stderr = sys.stderr
    close_logging()
    assert sys.stderr is stderr
