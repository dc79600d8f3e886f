# invariants_node.py
import itertools
from fractions import Fraction

from config import Config
from errors import MinimalityCrossCheckError
from models import SuiteResultModel
from services.coxfeas import is_ray, normalized_ranges
from services.rootsys import build, clearing_factor, fundamental_weight, fundamental_weights, scale
from services.ssgit import is_nonpositive, minimal_admitting_oracle
from services.weyl import CosetSpec, get_group
from utils import finish_suite, instance, iter_systems

SUITE = "invariants"

STRUCTURE_RANK = 4
A3_RAY = (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))


def _monotonicity(rs, r, limit):
    """u <= w in W^{I_r} implies w(varpi_r) <= u(varpi_r), so the admitting set is up-closed."""
    group = get_group(rs)
    varpi = fundamental_weight(rs, r)
    chi = scale(varpi, clearing_factor(varpi))
    reps = group.min_coset_reps(CosetSpec.maximal(r), limit)
    images = {w.matrix: group.apply(w, chi) for w in reps}
    for u, w in itertools.product(reps, reps):
        if u.length >= w.length or not group.bruhat_leq(u, w):
            continue
        lower, upper = images[u.matrix], images[w.matrix]
        if any(a > b for a, b in zip(upper, lower)):
            return f"{w.word_str()} above {u.word_str()} but not lower"
        if is_nonpositive(lower) and not is_nonpositive(upper):
            return f"admitting set not up-closed at {u.word_str()} <= {w.word_str()}"
    return ""


def _bruhat_vs_subwords(rs, limit):
    group = get_group(rs)
    elements = group.enumerate_group(limit)
    for w in elements:
        below = group.subword_closure(w)
        for u in elements:
            if group.bruhat_leq(u, w) != (u.matrix in below):
                return f"bruhat_leq({u.word_str()}, {w.word_str()}) disagrees with subwords"
    return ""


def _group_axioms(rs, limit):
    group = get_group(rs)
    elements = group.enumerate_group(limit)
    for w in elements:
        if group.length(group.inverse(w)) != w.length:
            return f"l(w^-1) != l(w) for {w.word_str()}"
        if not group.permutes_roots(w):
            return f"{w.word_str()} does not permute the roots"
    for u, v in itertools.product(elements, elements):
        if group.multiply(u, v).length > u.length + v.length:
            return f"l(uv) > l(u) + l(v) for {u.word_str()}, {v.word_str()}"
    return ""


def _coset_intersections(rs, limit):
    group = get_group(rs)
    elements = group.enumerate_group(limit)
    indices = range(1, rs.rank + 1)
    subsets = [frozenset(c) for k in range(1, rs.rank + 1) for c in itertools.combinations(indices, k)]
    for e1, e2 in itertools.product(subsets, subsets):
        a, b = CosetSpec(excluded=e1), CosetSpec(excluded=e2)
        union = CosetSpec(excluded=e1 & e2)
        for w in elements:
            both = group.in_coset_reps(w, a) and group.in_coset_reps(w, b)
            if both != group.in_coset_reps(w, union):
                return f"coset intersection fails for excluded sets {sorted(e1)}, {sorted(e2)}"
    return ""


def run_invariants(max_rank: int, config: Config) -> SuiteResultModel:
    instances = []
    limit = config.enum_limit
    structure_rank = min(max_rank, STRUCTURE_RANK)

    for rs in iter_systems("ABCD", structure_rank, min_rank=2):
        for r in range(1, rs.rank + 1):
            problem = _monotonicity(rs, r, limit)
            instances.append(instance(rs, not problem, problem or "monotonicity", r=r))
            try:
                minimal_admitting_oracle(rs, r, limit=limit, workers=config.workers)
                instances.append(instance(rs, True, "minimality filters agree", r=r))
            except MinimalityCrossCheckError as e:
                instances.append(instance(rs, False, str(e), r=r))

    for label in (("A", 3), ("B", 3)):
        rs = build(*label)
        for check, name in (
            (_bruhat_vs_subwords, "bruhat order matches subwords"),
            (_group_axioms, "length and root permutation axioms"),
            (_coset_intersections, "coset representative intersections"),
        ):
            problem = check(rs, limit)
            instances.append(instance(rs, not problem, problem or name))

    for rs in list(iter_systems("ABCD", max_rank)) + [build(k, n) for k, n in (("E", 6), ("F", 4), ("G", 2))]:
        bad = [r for r, varpi in enumerate(fundamental_weights(rs), start=1) if any(x < 0 for x in varpi)]
        detail = f"negative coordinates in varpi_{bad}" if bad else "fundamental weights nonnegative"
        instances.append(instance(rs, not bad, detail))

    a3 = build("A", 3)
    w = get_group(a3).from_word((1, 3, 2))
    ranges = normalized_ranges(a3, w)
    point = tuple(lo for lo, _ in ranges) if ranges else None
    ok = is_ray(ranges) and point == A3_RAY
    instances.append(instance(a3, ok, "feasible cone is the ray through (1, 2, 1)" if ok else f"ranges {ranges}", element=w.word))
    return finish_suite(SUITE, instances)


def invariants_node(state):
    result = run_invariants(state["max_rank"], state["config"])
    return {
        "results": state["results"] + [result],
        "pending": [s for s in state["pending"] if s != SUITE],
    }
