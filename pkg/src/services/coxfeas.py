"""Which Coxeter elements admit a semistable point for some line bundle.

For a Coxeter element w the question is whether some nonzero dominant
root-lattice weight chi has w(chi) <= 0. Writing chi = sum a_i alpha_i this is
a homogeneous cone over the a_i; dominance forces a >= 0 for an irreducible
type, so the cone is nonzero iff its slice sum(a) = 1 is nonempty. That slice
is decided exactly by Fourier-Motzkin elimination.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from errors import WitnessVerificationError
from logger import log_progress
from services.fourier_motzkin import Bounds, FourierMotzkin, equality, inequalities
from services.rootsys import RootSystem, Weight, neighbors
from services.ssgit import is_dominant, is_nonpositive
from services.weyl import DEFAULT_COXETER_MAX_RANK, WeylElement, get_group
from utils import fan_out, lcm_of_denominators, weight_str

DEFAULT_GRID_BOUND = 6


# ----------------------------------------------------------------------
# feasibility problem
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibilityProblem:
    """Rows r with r . a >= 0: n dominance rows, then n nonpositivity rows."""

    system: RootSystem
    element: WeylElement
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def nvars(self) -> int:
        return self.system.rank

    def inequalities(self, normalized: bool = True):
        rows = inequalities(self.rows)
        if normalized:
            rows += equality([1] * self.nvars, 1, index=len(self.rows))
        return rows


def build_problem(rs: RootSystem, w: WeylElement) -> FeasibilityProblem:
    n = rs.rank
    c = rs.cartan
    # <chi, coroot_j> = sum_i a_i c(i, j)
    dominance = [tuple(c[i][j] for i in range(n)) for j in range(n)]
    # (w chi)_k = sum_j a_j (w alpha_j)_k
    nonpositive = [tuple(-w.matrix[j][k] for j in range(n)) for k in range(n)]
    return FeasibilityProblem(system=rs, element=w, rows=tuple(dominance + nonpositive))


def witness_problems(rs: RootSystem, w: WeylElement, chi: Sequence) -> List[str]:
    """Reasons chi fails to witness w; empty when it is a valid witness."""
    problems = []
    if not any(chi):
        problems.append("witness is zero")
    if any(Fraction(x).denominator != 1 for x in chi):
        problems.append(f"witness {weight_str(chi)} is not integral")
    if not is_dominant(rs, chi):
        problems.append(f"witness {weight_str(chi)} is not dominant")
    image = get_group(rs).apply(w, chi)
    if not is_nonpositive(image):
        problems.append(f"{w.word_str()} sends {weight_str(chi)} to {weight_str(image)}")
    return problems


def _primitive(point: Sequence[Fraction]) -> Weight:
    k = lcm_of_denominators(point)
    ints = [int(x * k) for x in point]
    g = math.gcd(*ints) or 1
    return tuple(Fraction(x // g) for x in ints)


# ----------------------------------------------------------------------
# decisions
# ----------------------------------------------------------------------

def lemma41_filter(rs: RootSystem, w: WeylElement) -> bool:
    """Necessary condition on the right descents of an admitting Coxeter element.

    Every descent node has at most two Dynkin neighbors, and two only in A_3.
    """
    group = get_group(rs)
    for i in group.right_descents(w):
        degree = len(neighbors(rs, i))
        if degree > 2:
            return False
        if degree == 2 and rs.label != "A3":
            return False
    return True


def decide_admits(
    rs: RootSystem,
    w: WeylElement,
    engine: Optional[FourierMotzkin] = None,
) -> Tuple[bool, Optional[Weight]]:
    """(admits, primitive integer witness) for a Coxeter element w."""
    engine = engine or FourierMotzkin()
    problem = build_problem(rs, w)
    point = engine.solve(problem.inequalities(), problem.nvars)
    if point is None:
        return False, None
    witness = _primitive(point)
    problems = witness_problems(rs, w, witness)
    if problems:
        raise WitnessVerificationError(f"{rs.label} {w.word_str()}: " + "; ".join(problems))
    return True, witness


def normalized_ranges(rs: RootSystem, w: WeylElement) -> Optional[List[Bounds]]:
    """Exact [lo, hi] of every a_i over the slice sum(a) = 1 of the cone."""
    problem = build_problem(rs, w)
    rows = problem.inequalities()
    engine = FourierMotzkin()
    out = []
    for var in range(problem.nvars):
        bounds = engine.interval(rows, problem.nvars, var)
        if bounds is None:
            return None
        out.append(bounds)
    return out


def is_ray(ranges: Optional[Sequence[Bounds]]) -> bool:
    """True iff the slice is a single point, i.e. the cone is one ray."""
    return ranges is not None and all(lo is not None and lo == hi for lo, hi in ranges)


def grid_oracle(rs: RootSystem, w: WeylElement, bound: int = DEFAULT_GRID_BOUND) -> Optional[Weight]:
    """First a in {0..bound}^n minus 0 (lexicographically) that witnesses w."""
    n = rs.rank
    problem = build_problem(rs, w)
    for a in itertools.product(range(bound + 1), repeat=n):
        if not any(a):
            continue
        if all(sum(r * x for r, x in zip(row, a)) >= 0 for row in problem.rows):
            return tuple(Fraction(x) for x in a)
    return None


def grid_agrees(rs: RootSystem, w: WeylElement, bound: int = DEFAULT_GRID_BOUND) -> bool:
    """Compare the bounded grid search with the elimination decision.

    The grid may miss witnesses outside its box, so an FM-only positive is
    accepted when its witness re-verifies.
    """
    admits, witness = decide_admits(rs, w)
    found = grid_oracle(rs, w, bound)
    if found is not None:
        return admits
    if not admits:
        return True
    return not witness_problems(rs, w, witness)


# ----------------------------------------------------------------------
# closed-form expectations
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Expectation42:
    """Predicted admits flag; None when no prediction is made for this type."""

    admits: Optional[bool]
    biconditional: bool
    rule: str

    def agrees(self, admits: bool) -> bool:
        if self.admits is None:
            return True
        if self.biconditional:
            return admits == self.admits
        return not admits or self.admits


def type_a_patterns(n: int) -> List[Tuple[int, ...]]:
    """s_n ... s_1 and s_i ... s_1 s_{i+1} ... s_n for 1 <= i <= n-1."""
    words = [tuple(range(n, 0, -1))]
    for i in range(1, n):
        words.append(tuple(range(i, 0, -1)) + tuple(range(i + 1, n + 1)))
    return words


D4_ADMITTING = ((4, 3, 2, 1), (4, 1, 2, 3), (3, 1, 2, 4))


def pattern_words(rs: RootSystem) -> List[Tuple[int, ...]]:
    kind, n = rs.kind, rs.rank
    if kind == "A":
        return type_a_patterns(n)
    if kind == "D" and n == 4:
        return list(D4_ADMITTING)
    if kind in ("B", "C", "D"):
        return [tuple(range(n, 0, -1))]
    return []


def pattern_elements(rs: RootSystem) -> List[WeylElement]:
    group = get_group(rs)
    return [group.from_word(word) for word in pattern_words(rs)]


def d4_length_condition(rs: RootSystem, w: WeylElement) -> bool:
    """l(w s_2) = l(w) + 1, i.e. 2 is not a right descent."""
    return 2 not in get_group(rs).right_descents(w)


def expected_thm42(rs: RootSystem, w: WeylElement) -> Expectation42:
    kind, n = rs.kind, rs.rank
    if kind in ("E", "F", "G"):
        return Expectation42(admits=False, biconditional=True, rule=f"no Coxeter element of {kind} admits")
    if (kind, n) in (("A", 1), ("A", 2), ("D", 3)):
        return Expectation42(admits=None, biconditional=False, rule="no prediction")
    if (kind, n) in (("A", 3), ("B", 2), ("C", 2)):
        return Expectation42(admits=True, biconditional=True, rule="every Coxeter element admits")
    member = w in pattern_elements(rs)
    if kind == "D" and n == 4:
        return Expectation42(admits=member, biconditional=True, rule="one of s4s3s2s1, s4s1s2s3, s3s1s2s4")
    if kind == "A":
        rule = "s_n...s_1 or s_i...s_1 s_{i+1}...s_n"
    else:
        rule = "s_n...s_1"
    return Expectation42(admits=member, biconditional=False, rule=rule)


# ----------------------------------------------------------------------
# classification
# ----------------------------------------------------------------------

@dataclass
class CoxeterReport:
    element: WeylElement
    passes_lemma41: bool
    admits: bool
    witness: Optional[Weight]
    expected: Expectation42
    d4_length_condition: Optional[bool] = None
    grid_agrees: Optional[bool] = None
    agreement: bool = field(init=False)

    def __post_init__(self):
        if self.admits:
            rs = self.element.system
            problems = witness_problems(rs, self.element, self.witness or ())
            if problems:
                raise WitnessVerificationError(f"{rs.label} {self.element.word_str()}: " + "; ".join(problems))
        self.agreement = self.expected.agrees(self.admits)

    @property
    def expected_admits(self) -> Optional[bool]:
        return self.expected.admits


def classify_element(rs: RootSystem, w: WeylElement, grid_bound: Optional[int] = None) -> CoxeterReport:
    admits, witness = decide_admits(rs, w)
    return CoxeterReport(
        element=w,
        passes_lemma41=lemma41_filter(rs, w),
        admits=admits,
        witness=witness,
        expected=expected_thm42(rs, w),
        d4_length_condition=d4_length_condition(rs, w) if rs.label == "D4" else None,
        grid_agrees=grid_agrees(rs, w, grid_bound) if grid_bound is not None else None,
    )


def classify_all(
    rs: RootSystem,
    workers: int = 1,
    max_rank: int = DEFAULT_COXETER_MAX_RANK,
    grid_bound: Optional[int] = None,
) -> List[CoxeterReport]:
    """One report per distinct Coxeter element, in word order.

    An element equal to one of the listed patterns carries the pattern's word.
    """
    patterns = {p: p for p in pattern_elements(rs)}
    elements = sorted(
        (patterns.get(w, w) for w in get_group(rs).coxeter_elements(max_rank)),
        key=lambda w: w.word,
    )
    log_progress(f"{rs.label}: {len(elements)} Coxeter elements", "coxeter")
    reports = fan_out(
        lambda w: classify_element(rs, w, grid_bound),
        elements,
        workers,
        label=f"{rs.label} coxeter",
    )
    admitting = sum(1 for rep in reports if rep.admits)
    log_progress(f"{rs.label}: {admitting} of {len(reports)} admit", "coxeter")
    return reports


# ----------------------------------------------------------------------
# explicit witnesses
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    word: Tuple[int, ...]
    chi: Weight


def _w(word, *coords) -> Witness:
    return Witness(word=tuple(word), chi=tuple(Fraction(x) for x in coords))


def explicit_witnesses(rs: RootSystem) -> List[Witness]:
    """Hand-derived (Coxeter word, chi) pairs with w(chi) <= 0."""
    kind, n = rs.kind, rs.rank
    descending = tuple(range(n, 0, -1))
    if rs.label == "A3":
        return [
            _w((1, 3, 2), 1, 2, 1),
            _w((1, 2, 3), 1, 1, 1),
            _w((2, 1, 3), 1, 1, 1),
            _w((3, 2, 1), 1, 1, 1),
        ]
    if rs.label == "B2":
        return [_w((1, 2), 1, 2), _w((2, 1), 1, 1)]
    if rs.label == "D4":
        return [
            _w((4, 3, 2, 1), 2, 2, 1, 1),
            _w((4, 1, 2, 3), 1, 2, 2, 1),
            _w((3, 1, 2, 4), 1, 2, 1, 2),
        ]
    if kind == "B":
        return [_w(descending, *([1] * n))]
    if kind == "C":
        return [_w(descending, *([2] * (n - 1) + [1]))]
    if kind == "D" and n >= 5:
        return [_w(descending, *([2] * (n - 2) + [1, 1]))]
    return []
