# pairing_bound_node.py
from models import SuiteResultModel
from services.rootsys import pairing_bound_violations
from utils import finish_suite, instance, iter_systems

SUITE = "pairing-bound"


def run_pairing_bound(max_rank: int) -> SuiteResultModel:
    """|<varpi_r, coroot>| <= 2 for every r and root of A-D up to max_rank."""
    instances = []
    for rs in iter_systems("ABCD", max_rank, min_rank=2):
        violations = pairing_bound_violations(rs)
        for r in range(1, rs.rank + 1):
            bad = [(root, value) for rr, root, value in violations if rr == r]
            detail = "; ".join(f"root {root}: {value}" for root, value in bad)
            instances.append(instance(rs, not bad, detail, r=r))
    return finish_suite(SUITE, instances)


def pairing_bound_node(state):
    result = run_pairing_bound(state["max_rank"])
    return {
        "results": state["results"] + [result],
        "pending": [s for s in state["pending"] if s != SUITE],
    }
