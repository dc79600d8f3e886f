from langgraph.graph import END

from logger import log_progress
from models import SUITES
from utils import VerifyState


def node_name(suite: str) -> str:
    return suite.replace("-", "_")


def suites_for(selector: str):
    """Suites to run for a `verify` selector, in execution order."""
    if selector == "all":
        return list(SUITES)
    if selector not in SUITES:
        raise ValueError(f"unknown suite {selector!r}; expected one of {', '.join(SUITES)}, all")
    return [selector]


def route_next_suite(state: VerifyState):
    """Dispatch the first pending suite, or end once none is left."""
    pending = state["pending"]
    if not pending:
        log_progress("No suites pending. Ending verification.", "router")
        return END
    log_progress(f"Routing to {pending[0]} ({len(pending)} pending).", "router")
    return node_name(pending[0])
