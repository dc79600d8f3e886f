# witnesses_node.py
from config import Config
from errors import PreconditionError
from models import SuiteResultModel
from services.coxfeas import explicit_witnesses
from services.ssgit import admits_semistable, expected_weights_thm32
from services.weyl import get_group
from utils import finish_suite, instance, iter_systems, weight_str

SUITE = "witnesses"

# explicit words never enumerate the group, so they are checked a bit further out
WORD_RANK = 7


def run_witnesses(max_rank: int, config: Config) -> SuiteResultModel:
    instances = []
    for rs in iter_systems("BCD", max(max_rank, WORD_RANK), min_rank=2):
        n = rs.rank
        for r in sorted({1, n - 1, n}):
            expectation = expected_weights_thm32(rs, r)
            if expectation.word is None:
                continue
            ok = not expectation.word_problems
            detail = "; ".join(expectation.word_problems) or f"{expectation.case}: {weight_str(expectation.weights[0])}"
            instances.append(instance(rs, ok, detail, r=r, element=expectation.word))

    for rs in iter_systems("ABCD", max_rank, min_rank=2):
        group = get_group(rs)
        coxeter = set(group.coxeter_elements(config.coxeter_max_rank))
        for witness in explicit_witnesses(rs):
            w = group.from_word(witness.word)
            problems = []
            if w not in coxeter:
                problems.append("not a Coxeter element")
            try:
                if not admits_semistable(rs, w, witness.chi):
                    problems.append(f"image of {weight_str(witness.chi)} is not <= 0")
            except PreconditionError as e:
                problems.append(str(e))
            detail = "; ".join(problems) or f"chi = {weight_str(witness.chi)}"
            instances.append(instance(rs, not problems, detail, element=witness.word))
    return finish_suite(SUITE, instances)


def witnesses_node(state):
    result = run_witnesses(state["max_rank"], state["config"])
    return {
        "results": state["results"] + [result],
        "pending": [s for s in state["pending"] if s != SUITE],
    }
