# prop31_node.py
from config import Config
from models import SuiteResultModel
from services.ssgit import check_prop31
from utils import finish_suite, frac_str, instance, iter_systems

SUITE = "prop31"


def run_prop31(max_rank: int, config: Config) -> SuiteResultModel:
    instances = []
    for rs in iter_systems("BCD", max_rank, min_rank=4):
        for r in range(2, rs.rank - 1):
            report = check_prop31(rs, r, limit=config.enum_limit)
            values = sorted({m.a for m in report.maxima})
            detail = f"a in {{{', '.join(frac_str(a) for a in values)}}}"
            if report.failures:
                detail = "; ".join(report.failures)
            instances.append(instance(rs, bool(report.passed), detail, r=r))
    return finish_suite(SUITE, instances)


def prop31_node(state):
    result = run_prop31(state["max_rank"], state["config"])
    return {
        "results": state["results"] + [result],
        "pending": [s for s in state["pending"] if s != SUITE],
    }
