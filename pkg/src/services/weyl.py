"""Weyl group engine.

An element is identified by its integer action matrix on root coordinates
(stored column-wise: column j is the image of alpha_j). Every element also
carries one reduced word, kept only as a certificate: equality and hashing
never look at it. Words list 1-based simple-reflection indices and are read
as products, so ``(i1, i2, i3)`` is ``s_i1 s_i2 s_i3`` and ``s_i3`` acts first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from errors import EnumerationLimitError, InvalidRootSystemError, RankMismatchError
from logger import log_progress
from services.rootsys import RootSystem, Weight, root_data, weyl_group_order

Matrix = Tuple[Tuple[int, ...], ...]

DEFAULT_ENUM_LIMIT = 1_000_000
DEFAULT_COXETER_MAX_RANK = 8


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: Tuple[int, ...] = field(compare=False)
    system: RootSystem = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        # words are always stored reduced
        return len(self.word)

    def word_str(self) -> str:
        return "".join(f"s{i}" for i in self.word) or "e"


@dataclass(frozen=True)
class CosetSpec:
    """Minimal coset representatives W^I with I = S minus ``excluded``."""

    excluded: FrozenSet[int]

    @classmethod
    def maximal(cls, r: int) -> "CosetSpec":
        return cls(excluded=frozenset({r}))

    def kept(self, rank: int) -> List[int]:
        return [i for i in range(1, rank + 1) if i not in self.excluded]


def _is_negative(v: Sequence) -> bool:
    return any(x < 0 for x in v)


def _is_positive_root_image(v: Sequence) -> bool:
    return all(x >= 0 for x in v) and any(x != 0 for x in v)


def _matvec(m: Matrix, chi: Sequence) -> tuple:
    n = len(m)
    out = [0] * n
    for j in range(n):
        x = chi[j]
        if x:
            col = m[j]
            for k in range(n):
                out[k] += x * col[k]
    return tuple(out)


class WeylGroup:
    """Operations of the Weyl group of one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        self._c = rs.cartan
        self._roots = root_data(rs)
        self._elements: Optional[List[WeylElement]] = None
        n = self.rank
        self._identity_matrix: Matrix = tuple(
            tuple(1 if k == j else 0 for k in range(n)) for j in range(n)
        )

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    def _element(self, matrix: Matrix, word: Iterable[int]) -> WeylElement:
        return WeylElement(matrix=matrix, word=tuple(word), system=self.rs)

    @property
    def identity(self) -> WeylElement:
        return self._element(self._identity_matrix, ())

    def _check_letter(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise RankMismatchError(f"{self.rs.label}: reflection index {i} outside 1..{self.rank}")

    def right_mult(self, m: Matrix, i: int) -> Matrix:
        """m * s_i: column j becomes m_j - c(j, i) m_i."""
        ci = i - 1
        mi = m[ci]
        return tuple(
            col if self._c[j][ci] == 0 else tuple(a - self._c[j][ci] * b for a, b in zip(col, mi))
            for j, col in enumerate(m)
        )

    def simple(self, i: int) -> WeylElement:
        self._check_letter(i)
        return self._element(self.right_mult(self._identity_matrix, i), (i,))

    def word_matrix(self, word: Iterable[int]) -> Matrix:
        m = self._identity_matrix
        for i in word:
            self._check_letter(i)
            m = self.right_mult(m, i)
        return m

    def from_matrix(self, m: Matrix) -> WeylElement:
        return self._element(m, self.reduced_word(m))

    def from_word(self, word: Iterable[int]) -> WeylElement:
        """Element of a (not necessarily reduced) word; the stored word is reduced."""
        word = tuple(word)
        m = self.word_matrix(word)
        if self.matrix_length(m) == len(word):
            return self._element(m, word)
        return self.from_matrix(m)

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self.from_word(u.word + v.word)

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._element(self.word_matrix(reversed(w.word)), tuple(reversed(w.word)))

    def reflection(self, root: Sequence[int], coroot: Sequence[int]) -> Matrix:
        """Matrix of s_beta: alpha_j -> alpha_j - <alpha_j, coroot_beta> beta."""
        n = self.rank
        cols = []
        for j in range(n):
            p = sum(coroot[k] * self._c[j][k] for k in range(n))
            cols.append(tuple((1 if k == j else 0) - p * root[k] for k in range(n)))
        return tuple(cols)

    @staticmethod
    def compose(a: Matrix, b: Matrix) -> Matrix:
        """Matrix product a * b (b acts first)."""
        return tuple(_matvec(a, col) for col in b)

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def apply(self, w: WeylElement, chi: Sequence) -> Weight:
        if len(chi) != self.rank or len(w.matrix) != self.rank:
            raise RankMismatchError(
                f"{self.rs.label}: cannot apply a rank-{len(w.matrix)} element to a weight of length {len(chi)}"
            )
        return tuple(Fraction(x) for x in _matvec(w.matrix, chi))

    def matrix_length(self, m: Matrix) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for pr in self._roots if _is_negative(_matvec(m, pr.root)))

    def length(self, w: WeylElement) -> int:
        return self.matrix_length(w.matrix)

    def right_descents(self, w: WeylElement) -> List[int]:
        return [i for i in range(1, self.rank + 1) if _is_negative(w.matrix[i - 1])]

    def reduced_word(self, m: Matrix) -> Tuple[int, ...]:
        """Reduced word by peeling right descents: word(w) = word(w s_i) + (i,)."""
        letters = []
        while m != self._identity_matrix:
            i = next(j for j in range(1, self.rank + 1) if _is_negative(m[j - 1]))
            letters.append(i)
            m = self.right_mult(m, i)
        return tuple(reversed(letters))

    def in_coset_reps(self, w: WeylElement, spec: CosetSpec) -> bool:
        return all(_is_positive_root_image(w.matrix[i - 1]) for i in spec.kept(self.rank))

    def permutes_roots(self, w: WeylElement) -> bool:
        """apply(w, .) maps the root set R onto itself."""
        roots = {pr.root for pr in self._roots}
        roots |= {tuple(-x for x in r) for r in roots}
        images = {_matvec(w.matrix, r) for r in roots}
        return images == roots

    # ------------------------------------------------------------------
    # enumeration
    # ------------------------------------------------------------------

    def order(self) -> int:
        return weyl_group_order(self.rs.kind, self.rank)

    def iter_group(self, limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[WeylElement]:
        """Breadth-first by length, each element exactly once."""
        order = self.order()
        if order > limit:
            raise EnumerationLimitError(self.rs.label, order, limit)
        if self._elements is not None:
            yield from self._elements
            return
        log_progress(f"enumerating W({self.rs.label}), |W| = {order}", "weyl")
        seen: Set[Matrix] = {self._identity_matrix}
        frontier = [self.identity]
        elements: List[WeylElement] = []
        while frontier:
            elements.extend(frontier)
            yield from frontier
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    if _is_negative(w.matrix[i - 1]):
                        continue
                    m = self.right_mult(w.matrix, i)
                    if m not in seen:
                        seen.add(m)
                        nxt.append(self._element(m, w.word + (i,)))
            frontier = nxt
        self._elements = elements

    def enumerate_group(self, limit: int = DEFAULT_ENUM_LIMIT) -> List[WeylElement]:
        return list(self.iter_group(limit))

    def min_coset_reps(self, spec: CosetSpec, limit: int = DEFAULT_ENUM_LIMIT) -> List[WeylElement]:
        return [w for w in self.iter_group(limit) if self.in_coset_reps(w, spec)]

    # ------------------------------------------------------------------
    # Bruhat order
    # ------------------------------------------------------------------

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        """Descent recursion on the right.

        If w s_i < w then u <= w iff min(u, u s_i) <= w s_i.
        """
        um, ul = u.matrix, u.length
        wm, wl = w.matrix, w.length
        while True:
            if ul == 0:
                return True
            if ul > wl:
                return False
            if ul == wl:
                return um == wm
            i = next(j for j in range(1, self.rank + 1) if _is_negative(wm[j - 1]))
            wm = self.right_mult(wm, i)
            wl -= 1
            if _is_negative(um[i - 1]):
                um = self.right_mult(um, i)
                ul -= 1

    def subword_closure(self, w: WeylElement) -> Set[Matrix]:
        """Matrices of all subwords of w's reduced word (Bruhat interval [e, w])."""
        found = {self._identity_matrix}
        for i in w.word:
            found |= {self.right_mult(m, i) for m in found}
        return found

    # ------------------------------------------------------------------
    # Coxeter elements
    # ------------------------------------------------------------------

    def coxeter_elements(self, max_rank: int = DEFAULT_COXETER_MAX_RANK) -> List[WeylElement]:
        """Distinct products of all simple reflections, each used once.

        Orderings are explored depth first; prefixes with the same letter set
        and matrix are merged, so the n! orderings are never materialized.
        """
        n = self.rank
        if n > max_rank:
            raise EnumerationLimitError(self.rs.label, math.factorial(n), math.factorial(max_rank), what="orderings")
        layer: Dict[Tuple[FrozenSet[int], Matrix], Tuple[int, ...]] = {(frozenset(), self._identity_matrix): ()}
        for _ in range(n):
            nxt: Dict[Tuple[FrozenSet[int], Matrix], Tuple[int, ...]] = {}
            for (used, m), word in layer.items():
                for i in range(1, n + 1):
                    if i in used:
                        continue
                    key = (used | {i}, self.right_mult(m, i))
                    if key not in nxt:
                        nxt[key] = word + (i,)
            layer = nxt
        distinct: Dict[Matrix, Tuple[int, ...]] = {}
        for (_, m), word in layer.items():
            if m not in distinct or word < distinct[m]:
                distinct[m] = word
        return sorted((self._element(m, word) for m, word in distinct.items()), key=lambda w: w.word)


@lru_cache(maxsize=None)
def get_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


# ----------------------------------------------------------------------
# Module-level API
# ----------------------------------------------------------------------

def apply(w: WeylElement, chi: Sequence) -> Weight:
    return get_group(w.system).apply(w, chi)


def length(w: WeylElement) -> int:
    return get_group(w.system).length(w)


def enumerate_group(rs: RootSystem, limit: int = DEFAULT_ENUM_LIMIT) -> List[WeylElement]:
    return get_group(rs).enumerate_group(limit)


def min_coset_reps(rs: RootSystem, spec: CosetSpec, limit: int = DEFAULT_ENUM_LIMIT) -> List[WeylElement]:
    return get_group(rs).min_coset_reps(spec, limit)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    if u.system != w.system:
        raise InvalidRootSystemError(f"Bruhat comparison across groups {u.system.label} and {w.system.label}")
    return get_group(w.system).bruhat_leq(u, w)


def coxeter_elements(rs: RootSystem, max_rank: int = DEFAULT_COXETER_MAX_RANK) -> List[WeylElement]:
    return get_group(rs).coxeter_elements(max_rank)
