import argparse
import sys
from pathlib import Path
from typing import List, Optional, Tuple

sys.path.insert(0, str(Path(__file__).parent))

from langgraph.graph import START, StateGraph  # noqa: E402
from pydantic import BaseModel, ValidationError  # noqa: E402

from config import Config  # noqa: E402
from errors import EnumerationLimitError, InvalidRootSystemError, RankMismatchError  # noqa: E402
from logger import close_logging, log_progress, setup_logging  # noqa: E402
from models import RunConfig, VerifyModel  # noqa: E402
from nodes.invariants_node import invariants_node  # noqa: E402
from nodes.pairing_bound_node import pairing_bound_node  # noqa: E402
from nodes.prop31_node import prop31_node  # noqa: E402
from nodes.thm32_node import thm32_node  # noqa: E402
from nodes.thm42_node import thm42_node  # noqa: E402
from nodes.witnesses_node import witnesses_node  # noqa: E402
from router_func import route_next_suite, suites_for  # noqa: E402
from services.coxfeas import classify_all  # noqa: E402
from services.render import coxeter_model, minimal_model, render, weights_model  # noqa: E402
from services.rootsys import build  # noqa: E402
from services.ssgit import minimal_set_report  # noqa: E402
from utils import VerifyState  # noqa: E402

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def create_verify_graph() -> StateGraph:
    """Create the verification workflow graph: a router in front of every suite node."""
    workflow = StateGraph(VerifyState)

    workflow.add_node("pairing_bound", pairing_bound_node)
    workflow.add_node("prop31", prop31_node)
    workflow.add_node("thm32", thm32_node)
    workflow.add_node("thm42", thm42_node)
    workflow.add_node("invariants", invariants_node)
    workflow.add_node("witnesses", witnesses_node)

    workflow.add_conditional_edges(START, route_next_suite)
    for node in ("pairing_bound", "prop31", "thm32", "thm42", "invariants", "witnesses"):
        workflow.add_conditional_edges(node, route_next_suite)

    return workflow


def initialize_state(config: Config, selector: str, max_rank: int) -> VerifyState:
    return VerifyState(config=config, max_rank=max_rank, pending=suites_for(selector), results=[])


def run_verify(config: Config, selector: str = "all", max_rank: Optional[int] = None) -> VerifyModel:
    max_rank = max_rank or config.max_rank
    app = create_verify_graph().compile()
    state = initialize_state(config, selector, max_rank)

    log_progress(f"Starting verify {selector} up to rank {max_rank}", "workflow_start")
    result = app.invoke(state, config={"recursion_limit": config.recursion_limit})
    suites = result["results"]
    passed = all(s.passed for s in suites)
    log_progress(f"verify {selector}: {'passed' if passed else 'FAILED'}", "workflow_end")
    return VerifyModel(suite=selector, max_rank=max_rank, passed=passed, suites=suites)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_minimal(run: RunConfig, config: Config) -> Tuple[BaseModel, int]:
    rs = build(run.kind, run.rank, config.root_max_rank)
    report = minimal_set_report(rs, run.r, limit=run.limit, workers=run.workers)
    return minimal_model(report), EXIT_OK if report.passed else EXIT_FAILED


def cmd_coxeter(run: RunConfig, config: Config) -> Tuple[BaseModel, int]:
    rs = build(run.kind, run.rank, config.root_max_rank)
    grid = config.grid_bound if rs.rank <= config.grid_max_rank else None
    reports = classify_all(rs, workers=run.workers, max_rank=config.coxeter_max_rank, grid_bound=grid)
    model = coxeter_model(rs, reports)
    ok = model.all_agree and all(row.grid_agrees is not False for row in model.entries)
    return model, EXIT_OK if ok else EXIT_FAILED


def cmd_verify(run: RunConfig, config: Config) -> Tuple[BaseModel, int]:
    model = run_verify(config, run.suite, run.max_rank)
    return model, EXIT_OK if model.passed else EXIT_FAILED


def cmd_weights(run: RunConfig, config: Config) -> Tuple[BaseModel, int]:
    return weights_model(build(run.kind, run.rank, config.root_max_rank)), EXIT_OK


COMMANDS = {
    "minimal": cmd_minimal,
    "coxeter": cmd_coxeter,
    "verify": cmd_verify,
    "weights": cmd_weights,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None, help="Output format (default: text).")
    common.add_argument("--max-rank", type=int, default=None, help="Rank ceiling of `verify`.")
    common.add_argument("--limit", type=int, default=None, help="Largest Weyl group order to enumerate (env: SEMISTAB_ENUM_LIMIT).")
    common.add_argument("--workers", type=int, default=None, help="Thread pool size.")
    common.add_argument("--log-dir", type=str, default=None, help="Tee diagnostics into <dir>/progress.log and failures.log.")

    parser = argparse.ArgumentParser(
        prog="semistab",
        description="Torus-semistable points on Schubert varieties: exact classifications and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minimal", parents=[common], help="Bruhat-minimal admitting elements of W^{I_r}.")
    p.add_argument("kind")
    p.add_argument("rank", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("coxeter", parents=[common], help="Admitting Coxeter elements.")
    p.add_argument("kind")
    p.add_argument("rank", type=int)

    p = sub.add_parser("verify", parents=[common], help="Run verification suites.")
    p.add_argument("suite", choices=["pairing-bound", "prop31", "thm32", "thm42", "invariants", "witnesses", "all"])

    p = sub.add_parser("weights", parents=[common], help="Fundamental weights and highest root.")
    p.add_argument("kind")
    p.add_argument("rank", type=int)
    return parser


def _run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    return RunConfig(
        command=args.command,
        kind=getattr(args, "kind", None),
        rank=getattr(args, "rank", None),
        r=getattr(args, "r", None),
        format=args.format or config.output_format,
        limit=args.limit if args.limit is not None else config.enum_limit,
        workers=args.workers if args.workers is not None else config.workers,
        suite=getattr(args, "suite", None),
        max_rank=args.max_rank if args.max_rank is not None else config.max_rank,
        log_dir=args.log_dir or config.log_dir or None,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand, print its report; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config = Config()
    try:
        run = _run_config(args, config)
    except ValidationError as e:
        log_progress(str(e), "usage_error")
        return EXIT_USAGE
    config.enum_limit = run.limit
    config.workers = run.workers
    config.max_rank = run.max_rank
    if run.log_dir:
        setup_logging(run.log_dir)

    try:
        model, code = COMMANDS[run.command](run, config)
        print(render(model, run.format))
        return code
    except (InvalidRootSystemError, RankMismatchError) as e:
        log_progress(str(e), "usage_error")
        return EXIT_USAGE
    except EnumerationLimitError as e:
        log_progress(str(e), "limit_error")
        return EXIT_LIMIT
    except Exception as e:
        log_progress(str(e), "workflow_error")
        raise
    finally:
        close_logging()


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
