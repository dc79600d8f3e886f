"""Exact Fourier-Motzkin elimination over the rationals.

A system is a list of ``Inequality`` rows ``coeffs . x >= rhs``. Each row
remembers the set of original rows it was combined from and the variables
those originals mention. That drives Imbert's form of Chernikov's rule: a row
built from more than 1 + |E| originals is implied by the others and dropped,
where E holds the explicitly eliminated variables plus the variables of its
originals that cancelled out of the row on their own.

The engine reports its progress through three hooks, ``cb_start``,
``cb_step`` and ``cb_stop``. They do nothing by default; ``VerboseFourierMotzkin``
sends them to the diagnostic stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from logger import log_progress

Point = Tuple[Fraction, ...]
Bounds = Tuple[Optional[Fraction], Optional[Fraction]]


@dataclass(frozen=True)
class Inequality:
    coeffs: Tuple[Fraction, ...]
    rhs: Fraction
    history: FrozenSet[int]
    # columns with a nonzero coefficient in some original row of the history
    support: FrozenSet[int] = frozenset()

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def value(self, x: Sequence) -> Fraction:
        return sum((c * xi for c, xi in zip(self.coeffs, x)), Fraction(0))

    def satisfied_by(self, x: Sequence) -> bool:
        return self.value(x) >= self.rhs

    def normalized(self) -> "Inequality":
        """Positive rescaling so that the first nonzero coefficient is +-1."""
        lead = next((c for c in self.coeffs if c), None)
        if lead is None or abs(lead) == 1:
            return self
        f = abs(lead)
        return Inequality(tuple(c / f for c in self.coeffs), self.rhs / f, self.history, self.support)


def _nonzero(coeffs: Sequence[Fraction]) -> FrozenSet[int]:
    return frozenset(k for k, c in enumerate(coeffs) if c)


def inequalities(rows: Sequence[Sequence], rhs: Optional[Sequence] = None, start: int = 0) -> List[Inequality]:
    """Wrap plain coefficient rows (``rows[i] . x >= rhs[i]``, rhs default 0)."""
    out = []
    for i, row in enumerate(rows):
        b = Fraction(rhs[i]) if rhs is not None else Fraction(0)
        coeffs = tuple(Fraction(c) for c in row)
        out.append(Inequality(coeffs, b, frozenset({start + i}), _nonzero(coeffs)))
    return out


def equality(row: Sequence, rhs, index: int) -> List[Inequality]:
    """``row . x == rhs`` as two opposite inequalities."""
    coeffs = tuple(Fraction(c) for c in row)
    b = Fraction(rhs)
    return [
        Inequality(coeffs, b, frozenset({index}), _nonzero(coeffs)),
        Inequality(tuple(-c for c in coeffs), -b, frozenset({index + 1}), _nonzero(coeffs)),
    ]


class Infeasible(Exception):
    """Raised internally when a row reduces to 0 >= positive."""


class FourierMotzkin:
    """Projection, feasibility and bounds by exact elimination."""

    def __init__(self, prune: bool = True):
        self.prune = prune

    def cb_start(self, rows: List[Inequality], order: Sequence[int]) -> None:
        pass

    def cb_step(self, rows: List[Inequality], col: int, zero: int, pos: int, neg: int) -> None:
        pass

    def cb_stop(self, rows: List[Inequality]) -> None:
        pass

    @staticmethod
    def _clean(rows: Sequence[Inequality]) -> List[Inequality]:
        """Drop trivial rows and duplicates (the copy with the shorter history stays)."""
        best: Dict[Tuple[Tuple[Fraction, ...], Fraction], Inequality] = {}
        for row in rows:
            row = row.normalized()
            if row.is_constant:
                if row.rhs > 0:
                    raise Infeasible(row)
                continue
            key = (row.coeffs, row.rhs)
            kept = best.get(key)
            if kept is None or len(row.history) < len(kept.history):
                best[key] = row
        return list(best.values())

    def redundant(self, row: Inequality, eliminated: FrozenSet[int]) -> bool:
        """Imbert's test: more than 1 + |explicit + implicit eliminations| originals."""
        if not self.prune:
            return False
        implicit = row.support - eliminated - _nonzero(row.coeffs)
        return len(row.history) > 1 + len(eliminated) + len(implicit)

    def eliminate(self, rows: Sequence[Inequality], col: int, eliminated: FrozenSet[int]) -> List[Inequality]:
        """Remove variable ``col``; ``eliminated`` holds every eliminated column including it."""
        zero, pos, neg = [], [], []
        for row in rows:
            c = row.coeffs[col]
            (pos if c > 0 else neg if c < 0 else zero).append(row)
        self.cb_step(list(rows), col, len(zero), len(pos), len(neg))

        out = list(zero)
        for p in pos:
            for q in neg:
                a, b = p.coeffs[col], -q.coeffs[col]
                coeffs = tuple(
                    Fraction(0) if k == col else b * pc + a * qc
                    for k, (pc, qc) in enumerate(zip(p.coeffs, q.coeffs))
                )
                support = p.support | q.support | _nonzero(p.coeffs) | _nonzero(q.coeffs)
                row = Inequality(coeffs, b * p.rhs + a * q.rhs, p.history | q.history, support)
                if not self.redundant(row, eliminated):
                    out.append(row)
        return self._clean(out)

    def project(self, rows: Sequence[Inequality], order: Sequence[int]) -> Optional[List[List[Inequality]]]:
        """Eliminate the columns in ``order`` one by one.

        Returns the list of intermediate systems (the cleaned input first, the
        fully projected system last), or None if the system is infeasible.
        """
        self.cb_start(list(rows), order)
        try:
            stages = [self._clean(rows)]
            for done in range(1, len(order) + 1):
                stages.append(self.eliminate(stages[-1], order[done - 1], frozenset(order[:done])))
        except Infeasible:
            self.cb_stop([])
            return None
        self.cb_stop(stages[-1])
        return stages

    @staticmethod
    def _bounds(rows: Sequence[Inequality], col: int, x: Sequence) -> Bounds:
        """Bounds on x[col] from rows whose other variables are already fixed in x."""
        lo: Optional[Fraction] = None
        hi: Optional[Fraction] = None
        for row in rows:
            c = row.coeffs[col]
            if not c:
                continue
            rest = sum(
                (rc * xv for k, (rc, xv) in enumerate(zip(row.coeffs, x)) if k != col and rc),
                Fraction(0),
            )
            bound = (row.rhs - rest) / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        return lo, hi

    def solve(self, rows: Sequence[Inequality], nvars: int) -> Optional[Point]:
        """A rational point of the system, or None if it is empty.

        Variables are eliminated from the last to the first and then fixed in
        the opposite order, each at its largest lower bound (else its smallest
        upper bound, else 0).
        """
        order = list(range(nvars - 1, -1, -1))
        stages = self.project(rows, order)
        if stages is None:
            return None
        x = [Fraction(0)] * nvars
        for col in range(nvars):
            # stage nvars-1-col involves only variables 0..col
            lo, hi = self._bounds(stages[nvars - 1 - col], col, x)
            x[col] = lo if lo is not None else hi if hi is not None else Fraction(0)
        point = tuple(x)
        if not all(row.satisfied_by(point) for row in rows):
            raise ArithmeticError("back-substituted point violates the system")
        return point

    def interval(self, rows: Sequence[Inequality], nvars: int, var: int) -> Optional[Bounds]:
        """Exact range of x[var] over the system; None when infeasible."""
        stages = self.project(rows, [k for k in range(nvars) if k != var])
        if stages is None:
            return None
        lo, hi = self._bounds(stages[-1], var, [Fraction(0)] * nvars)
        if lo is not None and hi is not None and lo > hi:
            return None
        return lo, hi


class VerboseFourierMotzkin(FourierMotzkin):
    """Elimination with step statistics on the diagnostic stream."""

    def cb_start(self, rows, order):
        num_cols = len(rows[0].coeffs) if rows else 0
        log_progress(f"eliminate {len(order)} of {num_cols} columns from {len(rows)} rows", "fme")

    def cb_step(self, rows, col, zero, pos, neg):
        log_progress(f"col={col} z={zero} p+n={pos + neg} p*n={pos * neg}", "fme")

    def cb_stop(self, rows):
        log_progress(f"{len(rows)} rows remain", "fme")
