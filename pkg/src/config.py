# config.py
import os
from dataclasses import dataclass

from logger import log_progress


@dataclass
class Config:
    enum_limit: int = 1_000_000  # max |W| enumerated; B/C/D rank 7 is 645120
    workers: int = 1             # thread pool size for per-element fan-out
    max_rank: int = 5            # default rank ceiling of `verify`
    coxeter_max_rank: int = 8    # n! orderings are generated below this
    root_max_rank: int = 24      # largest rank whose roots are enumerated
    # Integer grid oracle for Coxeter feasibility: a in {0..grid_bound}^n, only for rank <= grid_max_rank.
    grid_bound: int = 6
    grid_max_rank: int = 4
    # Output format of the data stream:
    # - "text": aligned human-readable table
    # - "json": canonical JSON (sorted keys, "p/q" fractions)
    # - "csv": one row per entry
    output_format: str = "text"  # [text, json, csv]
    log_dir: str = ""            # if set, diagnostics are teed into <log_dir>/progress.log
    recursion_limit: int = 100   # LangGraph recursion limit of the verify graph

    def __post_init__(self) -> None:
        """Load config overrides from environment variables.

        Priority: env var (if set & non-empty and valid) > default value.
        Every value's origin is reported on the diagnostic stream.
        """

        def _env_nonempty(key: str) -> str | None:
            v = os.getenv(key)
            if v is None:
                return None
            v = v.strip()
            return v if v else None

        def _positive_int(field: str, key: str) -> None:
            raw = _env_nonempty(key)
            current = getattr(self, field)
            if raw is None:
                log_progress(f"{field}={current} (default)", "config")
                return
            try:
                value = int(raw)
            except ValueError:
                value = 0
            if value > 0:
                setattr(self, field, value)
                log_progress(f"{field}={value} (env:{key})", "config")
            else:
                log_progress(f"{field}={current} (default; invalid env:{key}={raw!r})", "config")

        _positive_int("enum_limit", "SEMISTAB_ENUM_LIMIT")
        _positive_int("workers", "SEMISTAB_WORKERS")
        _positive_int("max_rank", "SEMISTAB_MAX_RANK")
        _positive_int("root_max_rank", "SEMISTAB_ROOT_MAX_RANK")
        _positive_int("grid_bound", "SEMISTAB_GRID_BOUND")

        format_key = "SEMISTAB_FORMAT"
        format_env = _env_nonempty(format_key)
        if format_env is not None:
            allowed = {"text", "json", "csv"}
            if format_env in allowed:
                self.output_format = format_env
                log_progress(f"output_format={self.output_format} (env:{format_key})", "config")
            else:
                log_progress(
                    f"output_format={self.output_format} (default; invalid env:{format_key}={format_env!r})",
                    "config",
                )
        else:
            log_progress(f"output_format={self.output_format} (default)", "config")

        log_dir_env = _env_nonempty("SEMISTAB_LOG_DIR")
        if log_dir_env is not None:
            self.log_dir = log_dir_env
            log_progress(f"log_dir={self.log_dir} (env:SEMISTAB_LOG_DIR)", "config")
