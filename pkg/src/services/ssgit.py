"""Torus semistability on Schubert varieties.

X(w) has a semistable point for the line bundle of a dominant root-lattice
weight chi iff every simple-root coordinate of w(chi) is <= 0. This module
decides that criterion, computes the Bruhat-minimal admitting elements of
the maximal parabolic quotients W^{I_r} by brute force, and produces the
closed-form predictions for types B, C and D to compare them against.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from errors import (
    MinimalityCrossCheckError,
    NotDominantError,
    NotInRootLatticeError,
    NotMinimalCosetRepError,
    RankMismatchError,
)
from logger import log_progress
from services.rootsys import (
    RootSystem,
    Weight,
    clearing_factor,
    fundamental_weight,
    pairing,
    root_data,
    scale,
)
from services.weyl import DEFAULT_ENUM_LIMIT, CosetSpec, WeylElement, WeylGroup, get_group
from utils import fan_out, weight_str

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


# ----------------------------------------------------------------------
# index tuples
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class IndexTuple:
    """(i_1, ..., i_p) in {1..q}, strictly increasing with gaps >= 2."""

    entries: Tuple[int, ...]
    p: int
    q: int

    def __post_init__(self):
        if len(self.entries) != self.p:
            raise ValueError(f"expected {self.p} entries, got {self.entries}")
        if self.entries and (self.entries[0] < 1 or self.entries[-1] > self.q):
            raise ValueError(f"{self.entries} not inside 1..{self.q}")
        for a, b in zip(self.entries, self.entries[1:]):
            if b - a < 2:
                raise ValueError(f"{self.entries}: consecutive entries {a}, {b} differ by less than 2")

    @property
    def last(self) -> Optional[int]:
        return self.entries[-1] if self.entries else None


def j_tuples(p: int, q: int) -> List[IndexTuple]:
    """All index tuples of length p over 1..q with gaps >= 2, lexicographically."""
    if p < 0:
        return []
    out = []
    for combo in itertools.combinations(range(1, q + 1), p):
        if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
            out.append(IndexTuple(entries=combo, p=p, q=q))
    return out


# ----------------------------------------------------------------------
# the criterion
# ----------------------------------------------------------------------

def is_nonpositive(chi: Sequence) -> bool:
    return all(x <= 0 for x in chi)


def is_nonnegative(chi: Sequence) -> bool:
    return all(x >= 0 for x in chi)


def is_dominant(rs: RootSystem, chi: Sequence) -> bool:
    return all(pairing(rs, chi, j) >= 0 for j in range(1, rs.rank + 1))


def in_root_lattice(chi: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in chi)


def support(rs: RootSystem, chi: Sequence) -> FrozenSet[int]:
    """Indices j with <chi, coroot_j> != 0."""
    return frozenset(j for j in range(1, rs.rank + 1) if pairing(rs, chi, j) != 0)


def admits_semistable(rs: RootSystem, w: WeylElement, chi: Sequence) -> bool:
    """Whether X(w) has a torus-semistable point for the line bundle of chi.

    Raises:
        RankMismatchError: w or chi belong to another rank.
        NotDominantError: some <chi, coroot_j> < 0.
        NotInRootLatticeError: chi has a non-integral coordinate.
        NotMinimalCosetRepError: w is not minimal in its coset modulo the
            simple reflections fixing chi.
    """
    if w.system != rs:
        raise RankMismatchError(f"element of {w.system.label} used with {rs.label}")
    if not is_dominant(rs, chi):
        bad = [j for j in range(1, rs.rank + 1) if pairing(rs, chi, j) < 0]
        raise NotDominantError(f"{rs.label}: {weight_str(chi)} pairs negatively with coroots {bad}")
    if not in_root_lattice(chi):
        raise NotInRootLatticeError(f"{rs.label}: {weight_str(chi)} is not in the root lattice")
    group = get_group(rs)
    if not group.in_coset_reps(w, CosetSpec(excluded=support(rs, chi))):
        raise NotMinimalCosetRepError(
            f"{rs.label}: {w.word_str()} is not a minimal coset representative for {weight_str(chi)}"
        )
    return is_nonpositive(group.apply(w, chi))


# ----------------------------------------------------------------------
# oracle
# ----------------------------------------------------------------------

@dataclass
class Expectation:
    """Closed-form prediction for the minimal admitting set of (kind, rank, r)."""

    case: str
    silent: bool
    weights: List[Weight] = field(default_factory=list)
    word: Optional[Tuple[int, ...]] = None
    scale: int = 1
    word_problems: List[str] = field(default_factory=list)


@dataclass
class MinimalSetReport:
    system: RootSystem
    r: int
    scale: int
    coset_count: int
    admitting_count: int
    entries: List[Tuple[WeylElement, Weight]]
    expected: Optional[Expectation] = None
    match: Optional[bool] = None
    mismatches: List[str] = field(default_factory=list)

    @property
    def weights(self) -> List[Weight]:
        return [chi for _, chi in self.entries]

    @property
    def passed(self) -> bool:
        return self.match is not False and not self.mismatches


def _global_minimal(group: WeylGroup, admitting: List[WeylElement], workers: int) -> List[bool]:
    def keep(w: WeylElement) -> bool:
        return not any(u.length < w.length and group.bruhat_leq(u, w) for u in admitting)

    return fan_out(keep, admitting, workers, label=f"{group.rs.label} global filter")


def _local_minimal(group: WeylGroup, admitting: List[WeylElement], workers: int) -> List[bool]:
    # M is up-closed inside W^I, so w is minimal iff no lower cover s_beta w lies in M.
    matrices = {w.matrix for w in admitting}
    reflections = [group.reflection(pr.root, pr.coroot) for pr in root_data(group.rs)]

    def keep(w: WeylElement) -> bool:
        for s in reflections:
            m = group.compose(s, w.matrix)
            if m in matrices and group.matrix_length(m) == w.length - 1:
                return False
        return True

    return fan_out(keep, admitting, workers, label=f"{group.rs.label} local filter")


def minimal_admitting_oracle(
    rs: RootSystem,
    r: int,
    limit: int = DEFAULT_ENUM_LIMIT,
    workers: int = 1,
) -> MinimalSetReport:
    """Bruhat-minimal w in W^{I_r} with w(varpi_r) <= 0, by enumeration.

    Minimality is computed by a global and a local filter which must agree.
    Entries are sorted by weight, then by word; weights are unscaled.
    """
    group = get_group(rs)
    varpi = fundamental_weight(rs, r)
    k = clearing_factor(varpi)
    chi = tuple(int(x) for x in scale(varpi, k))

    reps = group.min_coset_reps(CosetSpec.maximal(r), limit)
    admitting = [w for w in reps if is_nonpositive(group.apply(w, chi))]
    log_progress(
        f"{rs.label} r={r}: {len(reps)} coset representatives, {len(admitting)} admitting", "oracle"
    )

    global_flags = _global_minimal(group, admitting, workers)
    local_flags = _local_minimal(group, admitting, workers)
    if global_flags != local_flags:
        diff = [w.word_str() for w, a, b in zip(admitting, global_flags, local_flags) if a != b]
        raise MinimalityCrossCheckError(f"{rs.label} r={r}: minimality filters disagree on {diff}")

    entries = [
        (w, group.apply(w, varpi))
        for w, keep in zip(admitting, global_flags)
        if keep
    ]
    entries.sort(key=lambda e: (e[1], e[0].word))
    return MinimalSetReport(
        system=rs,
        r=r,
        scale=k,
        coset_count=len(reps),
        admitting_count=len(admitting),
        entries=entries,
    )


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def _neg_combo(n: int, terms: Dict[int, Fraction]) -> Weight:
    out = [Fraction(0)] * n
    for i, c in terms.items():
        out[i - 1] -= Fraction(c)
    return tuple(out)


def _tuple_terms(t: IndexTuple, **extra) -> Dict[int, Fraction]:
    terms: Dict[int, Fraction] = {i: Fraction(1) for i in t.entries}
    for idx, c in extra.get("tail", {}).items():
        terms[idx] = terms.get(idx, Fraction(0)) + c
    return terms


def _family(n: int, tuples: Sequence[IndexTuple], tail: Dict[int, Fraction]) -> List[Weight]:
    return [_neg_combo(n, _tuple_terms(t, tail=tail)) for t in tuples]


def _descending_word(n: int) -> Tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _b_spin_word(n: int) -> Tuple[int, ...]:
    # w_m ... w_1 with w_i = s_{2i-1} ... s_n; w_1 acts first
    m = (n + 1) // 2
    word: List[int] = []
    for i in range(m, 0, -1):
        word.extend(range(2 * i - 1, n + 1))
    return tuple(word)


def _d_spin_word(n: int, r: int) -> Tuple[int, ...]:
    m = (n + 1) // 2
    odd_letter, even_letter = (n, n - 1) if r == n else (n - 1, n)
    word: List[int] = []
    for i in range(m, 0, -1):
        word.extend(range(2 * i - 1, n - 1))
        word.append(odd_letter if i % 2 else even_letter)
    return tuple(word)


def _d_spin_weight(n: int, r: int) -> Weight:
    """w(varpi_r) for r in {n-1, n}, from the 4-fold multiple."""
    four = [0] * n
    for j in range(1, n - 2, 2):
        four[j - 1] = -2
    last, other = (n - 1, n - 2) if r == n else (n - 2, n - 1)
    residue = n % 4
    if residue == 0:
        four[other] -= 2
    elif residue == 2:
        four[last] -= 2
    else:
        four[n - 3] -= 2
        big, small = (last, other) if residue == 1 else (other, last)
        four[big] -= 3
        four[small] -= 1
    return tuple(Fraction(x, 4) for x in four)


def _check_word(rs: RootSystem, r: int, word: Tuple[int, ...], expected: Weight) -> List[str]:
    group = get_group(rs)
    problems = []
    w = group.from_word(word)
    tag = "".join(f"s{i}" for i in word)
    if w.word != word or group.length(w) != len(word):
        problems.append(f"word {tag} is not reduced")
    if not group.in_coset_reps(w, CosetSpec.maximal(r)):
        problems.append(f"word {tag} is not a minimal coset representative for I_{r}")
    varpi = fundamental_weight(rs, r)
    k = clearing_factor(varpi)
    got = group.apply(w, scale(varpi, k))
    if got != scale(expected, k):
        problems.append(f"word {tag} sends {k}*varpi_{r} to {weight_str(got)}, expected {weight_str(scale(expected, k))}")
    return problems


def expected_weights_thm32(rs: RootSystem, r: int) -> Expectation:
    """Closed-form weights w(varpi_r) of the minimal admitting elements.

    Types A, E, F, G and the pair (C, r = n) carry no closed form and come back
    with ``silent=True``. Explicit words are checked on the spot and any
    discrepancy is listed in ``word_problems``.
    """
    kind, n = rs.kind, rs.rank
    if not 1 <= r <= n:
        raise RankMismatchError(f"{rs.label}: r={r} outside 1..{n}")
    k = clearing_factor(fundamental_weight(rs, r))
    word: Optional[Tuple[int, ...]] = None
    weights: List[Weight]

    if kind == "B":
        if r == 1:
            case, word = "B r=1", _descending_word(n)
            weights = [_neg_combo(n, {n: Fraction(1)})]
        elif r == n:
            case, word = "B r=n", _b_spin_word(n)
            weights = [_neg_combo(n, {2 * i - 1: HALF for i in range(1, (n + 1) // 2 + 1)})]
        elif r % 2 == 0:
            case = "B even r"
            weights = _family(n, j_tuples(r // 2, n - 1), {})
        else:
            case = "B odd r"
            weights = _family(n, j_tuples((r - 1) // 2, n - 2), {n: Fraction(1)})
    elif kind == "C":
        if r == 1:
            case, word = "C r=1", _descending_word(n)
            weights = [_neg_combo(n, {n: HALF})]
        elif r == n:
            return Expectation(case="C r=n", silent=True, scale=k)
        elif r % 2 == 0:
            case = "C even r"
            weights = _family(n, j_tuples(r // 2, n - 1), {})
        else:
            case = "C odd r"
            weights = _family(n, j_tuples((r - 1) // 2, n - 2), {n: HALF})
    elif kind == "D":
        if r == 1:
            case, word = "D r=1", _descending_word(n)
            weights = [_neg_combo(n, {n - 1: HALF, n: HALF})]
        elif r in (n - 1, n):
            case, word = f"D r={'n' if r == n else 'n-1'}", _d_spin_word(n, r)
            weights = [_d_spin_weight(n, r)]
        elif r % 2 == 0:
            case = "D even r"
            weights = [
                _neg_combo(n, _tuple_terms(t))
                for t in j_tuples(r // 2, n)
                if t.entries[-2:] != (n - 2, n)
            ]
        else:
            case = "D odd r"
            p = (r - 1) // 2
            ending = [t for t in j_tuples(p, n - 2) if t.last == n - 2]
            weights = (
                _family(n, j_tuples(p, n - 3), {n - 1: HALF, n: HALF})
                + _family(n, ending, {n - 1: HALF, n: THREE_HALVES})
                + _family(n, ending, {n - 1: THREE_HALVES, n: HALF})
            )
    else:
        return Expectation(case=f"{kind} (no closed form)", silent=True, scale=k)

    problems = _check_word(rs, r, word, weights[0]) if word is not None else []
    return Expectation(
        case=case,
        silent=False,
        weights=sorted(weights),
        word=word,
        scale=k,
        word_problems=problems,
    )


def compare(report: MinimalSetReport, expectation: Expectation) -> MinimalSetReport:
    """Fill ``expected``, ``match`` and ``mismatches`` of an oracle report."""
    mismatches = list(expectation.word_problems)
    weights = report.weights
    if len(set(weights)) != len(weights):
        mismatches.append("two minimal elements share a weight")
    for w, chi in report.entries:
        if not is_nonpositive(chi) or not any(chi):
            mismatches.append(f"{w.word_str()} has weight {weight_str(chi)}, not <= 0 and nonzero")

    if not expectation.silent:
        oracle = Counter(weights)
        predicted = Counter(expectation.weights)
        for chi in sorted((predicted - oracle).elements()):
            mismatches.append(f"predicted weight {weight_str(chi)} missing from the oracle set")
        for chi in sorted((oracle - predicted).elements()):
            mismatches.append(f"oracle weight {weight_str(chi)} not predicted")
        if expectation.word is not None:
            explicit = get_group(report.system).from_word(expectation.word)
            if [w for w, _ in report.entries] != [explicit]:
                mismatches.append("the explicit word is not the unique minimal element")

    report.expected = expectation
    report.match = None if expectation.silent else not mismatches
    report.mismatches = mismatches
    return report


def minimal_set_report(
    rs: RootSystem,
    r: int,
    limit: int = DEFAULT_ENUM_LIMIT,
    workers: int = 1,
) -> MinimalSetReport:
    return compare(minimal_admitting_oracle(rs, r, limit, workers), expected_weights_thm32(rs, r))


# ----------------------------------------------------------------------
# maximal nonnegative elements
# ----------------------------------------------------------------------

@dataclass
class Prop31Maximum:
    element: WeylElement
    weight: Weight
    a: Fraction
    positions: Tuple[int, ...]


@dataclass
class Prop31Report:
    system: RootSystem
    r: int
    in_domain: bool
    maxima: List[Prop31Maximum] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> Optional[bool]:
        return not self.failures if self.in_domain else None


def check_prop31(rs: RootSystem, r: int, limit: int = DEFAULT_ENUM_LIMIT) -> Prop31Report:
    """Largest coordinate of w(varpi_r) over the Bruhat-maximal w in W^{I_r}
    with w(varpi_r) >= 0.

    Holds when it is 1 or 3/2, and 3/2 only for type D, r odd, at index n-1 or
    n. Applies to B, C, D with 2 <= r <= n-2; other inputs are reported out
    of domain.
    """
    n = rs.rank
    if not 1 <= r <= n:
        raise RankMismatchError(f"{rs.label}: r={r} outside 1..{n}")
    group = get_group(rs)
    varpi = fundamental_weight(rs, r)
    reps = group.min_coset_reps(CosetSpec.maximal(r), limit)
    nonneg = [w for w in reps if is_nonnegative(group.apply(w, varpi))]
    matrices = {w.matrix for w in nonneg}
    reflections = [group.reflection(pr.root, pr.coroot) for pr in root_data(rs)]

    def is_maximal(w: WeylElement) -> bool:
        # N is down-closed inside W^I, so upper covers decide maximality
        for s in reflections:
            m = group.compose(s, w.matrix)
            if m in matrices and group.matrix_length(m) == w.length + 1:
                return False
        return True

    report = Prop31Report(system=rs, r=r, in_domain=rs.kind in ("B", "C", "D") and 2 <= r <= n - 2)
    for w in nonneg:
        if not is_maximal(w):
            continue
        mu = group.apply(w, varpi)
        a = max(mu)
        positions = tuple(i + 1 for i, x in enumerate(mu) if x == a)
        report.maxima.append(Prop31Maximum(element=w, weight=mu, a=a, positions=positions))
        if not report.in_domain:
            continue
        if a not in (1, THREE_HALVES):
            report.failures.append(f"{w.word_str()}: largest coordinate {a} not in {{1, 3/2}}")
        elif a == THREE_HALVES:
            if rs.kind != "D" or r % 2 == 0:
                report.failures.append(f"{w.word_str()}: 3/2 occurs for {rs.label} r={r}")
            elif not set(positions) <= {n - 1, n}:
                report.failures.append(f"{w.word_str()}: 3/2 at index {positions}, expected n-1 or n")
    report.maxima.sort(key=lambda m: (m.weight, m.element.word))
    log_progress(
        f"{rs.label} r={r}: {len(nonneg)} nonnegative, {len(report.maxima)} maximal", "prop31"
    )
    return report
