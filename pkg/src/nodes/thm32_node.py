# thm32_node.py
from config import Config
from errors import MinimalityCrossCheckError
from models import SuiteResultModel
from services.ssgit import minimal_set_report
from utils import finish_suite, instance, iter_systems

SUITE = "thm32"


def run_thm32(max_rank: int, config: Config) -> SuiteResultModel:
    """Oracle minimal sets against the closed forms for B, C (rank >= 3) and D (rank >= 4)."""
    instances = []
    systems = list(iter_systems("BC", max_rank, min_rank=3)) + list(iter_systems("D", max_rank, min_rank=4))
    for rs in systems:
        for r in range(1, rs.rank + 1):
            try:
                report = minimal_set_report(rs, r, limit=config.enum_limit, workers=config.workers)
            except MinimalityCrossCheckError as e:
                instances.append(instance(rs, False, str(e), r=r))
                continue
            case = report.expected.case if report.expected else ""
            if report.passed:
                verdict = "theorem-silent" if report.match is None else "match"
                detail = f"{case}: {verdict}, {len(report.entries)} minimal"
            else:
                detail = f"{case}: " + "; ".join(report.mismatches)
            instances.append(instance(rs, report.passed, detail, r=r))
    return finish_suite(SUITE, instances)


def thm32_node(state):
    result = run_thm32(state["max_rank"], state["config"])
    return {
        "results": state["results"] + [result],
        "pending": [s for s in state["pending"] if s != SUITE],
    }
