# logger.py
"""Centralized diagnostics for semistab.

Provides:
- XML-tagged output to stderr; stdout is reserved for the rendered report
- progress.log: captures ALL diagnostic output (via stderr tee)
- failures.log: captures only verification failures

Usage:
    from logger import setup_logging, close_logging, log_progress, log_failure

    setup_logging("/path/to/log_dir")        # optional, call once
    log_progress("B3 r=1: 6 cosets", "oracle")
    log_failure("D4 r=2 mismatch ...", "thm32")  # also writes to failures.log
    close_logging()                           # restore stderr, close files
"""

import os
import sys
from typing import Optional, TextIO


class _StderrTee:
    """stderr replacement that copies every write into progress.log."""

    def __init__(self, stream: TextIO, copy: TextIO):
        self._stream = stream
        self._copy = copy

    def write(self, text: str) -> None:
        self._stream.write(text)
        if not self._copy.closed:
            self._copy.write(text)
            self._copy.flush()

    def flush(self) -> None:
        self._stream.flush()

    def __getattr__(self, name):
        # isatty, encoding, fileno ... come from the real stream
        return getattr(self._stream, name)


class SemistabLogger:
    """Process-wide diagnostics: the stderr tee and the failures file."""

    _instance: Optional["SemistabLogger"] = None

    def __init__(self):
        self._progress_file: Optional[TextIO] = None
        self._failure_file: Optional[TextIO] = None
        self._saved_stderr: Optional[TextIO] = None

    @classmethod
    def get_instance(cls) -> "SemistabLogger":
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def setup(self, log_dir: str) -> None:
        """Open both log files under log_dir and start teeing stderr; a second call is a no-op."""
        if self._progress_file is not None:
            return
        os.makedirs(log_dir, exist_ok=True)
        self._progress_file = open(os.path.join(log_dir, "progress.log"), "w")
        self._failure_file = open(os.path.join(log_dir, "failures.log"), "w")
        self._saved_stderr = sys.stderr
        sys.stderr = _StderrTee(self._saved_stderr, self._progress_file)

    def close(self) -> None:
        if self._saved_stderr is not None:
            sys.stderr = self._saved_stderr
            self._saved_stderr = None
        for f in (self._progress_file, self._failure_file):
            if f is not None and not f.closed:
                f.close()
        self._progress_file = None
        self._failure_file = None

    def log_progress(self, message: str, tag: str) -> None:
        print(f"<{tag}>{message}</{tag}>", file=sys.stderr)

    def log_failure(self, message: str, tag: str) -> None:
        """Log a failure to stderr (-> progress.log via tee) AND failures.log."""
        output = f"<{tag}>\n{message}\n</{tag}>"
        print(output, file=sys.stderr)
        if self._failure_file and not self._failure_file.closed:
            self._failure_file.write(output + "\n")
            self._failure_file.flush()


# ---------------------------------------------------------------------------
# Module-level convenience functions
# ---------------------------------------------------------------------------

def setup_logging(output_dir: str) -> None:
    """Initialize logging to output_dir."""
    SemistabLogger.get_instance().setup(output_dir)


def close_logging() -> None:
    """Close log files and restore stderr."""
    SemistabLogger.get_instance().close()


def log_progress(message: str, tag: str) -> None:
    """Log to stderr (+ progress.log), wrapped in <tag>...</tag>."""
    SemistabLogger.get_instance().log_progress(message, tag)


def log_failure(message: str, tag: str) -> None:
    """Log to stderr + progress.log + failures.log, wrapped in <tag>...</tag>."""
    SemistabLogger.get_instance().log_failure(message, tag)
