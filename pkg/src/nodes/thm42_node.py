# thm42_node.py
from config import Config
from models import SuiteResultModel
from services.coxfeas import classify_all
from services.rootsys import build
from utils import finish_suite, instance, iter_systems

SUITE = "thm42"

EXCEPTIONAL = (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))


def run_thm42(max_rank: int, config: Config) -> SuiteResultModel:
    """Coxeter classification sweep.

    Every element must agree with the closed form, admitting elements must pass
    the descent filter, and at rank <= grid_max_rank the elimination decision
    must agree with the integer grid search.
    """
    systems = list(iter_systems("ABCD", min(max_rank, config.coxeter_max_rank)))
    systems += [build(kind, rank) for kind, rank in EXCEPTIONAL]
    instances = []
    for rs in systems:
        grid = config.grid_bound if rs.rank <= config.grid_max_rank else None
        reports = classify_all(rs, workers=config.workers, max_rank=config.coxeter_max_rank, grid_bound=grid)
        for rep in reports:
            problems = []
            if not rep.agreement:
                problems.append(f"admits={rep.admits} but expected {rep.expected.admits} ({rep.expected.rule})")
            if rep.admits and not rep.passes_lemma41:
                problems.append("admits but fails the descent filter")
            if rep.grid_agrees is False:
                problems.append("grid search disagrees with elimination")
            detail = "; ".join(problems) or ("admits" if rep.admits else "does not admit")
            instances.append(instance(rs, not problems, detail, element=rep.element.word))
    return finish_suite(SUITE, instances)


def thm42_node(state):
    result = run_thm42(state["max_rank"], state["config"])
    return {
        "results": state["results"] + [result],
        "pending": [s for s in state["pending"] if s != SUITE],
    }
