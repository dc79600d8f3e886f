"""Root-system data for the simple types A-G under Bourbaki labeling.

Conventions used everywhere in semistab:

* simple roots and fundamental weights are indexed from 1;
* a weight is a tuple of exact ``Fraction`` coordinates in the simple-root basis;
* the Cartan integers are ``c(i, j) = <alpha_i, coroot_j>``, so the simple
  reflection ``s_j`` only changes coordinate ``j`` of a weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import Matrix

from errors import InvalidRootSystemError, RankMismatchError

Weight = Tuple[Fraction, ...]

KINDS = ("A", "B", "C", "D", "E", "F", "G")

# Config.root_max_rank overrides this at the CLI and MCP surfaces.
DEFAULT_ROOT_MAX_RANK = 24


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    def c(self, i: int, j: int) -> int:
        """Cartan integer <alpha_i, coroot_j> with 1-based indices."""
        return self.cartan[i - 1][j - 1]


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root with its coroot, both as integer coordinate tuples."""

    root: Tuple[int, ...]
    coroot: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.root)


def weight(*coords) -> Weight:
    """Build a weight from ints, Fractions or "p/q" strings."""
    return tuple(Fraction(x) for x in coords)


def zero_weight(rank: int) -> Weight:
    return tuple(Fraction(0) for _ in range(rank))


def simple_root(rs: RootSystem, i: int) -> Weight:
    _check_index(rs, i)
    return tuple(Fraction(1 if k == i - 1 else 0) for k in range(rs.rank))


def _check_rank(kind: str, rank: int, max_rank: int) -> None:
    if kind not in KINDS:
        raise InvalidRootSystemError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not isinstance(rank, int) or rank < 1:
        raise InvalidRootSystemError(f"rank must be a positive integer, got {rank!r}")
    constraints = {
        "A": (rank >= 1, "A needs rank >= 1"),
        "B": (rank >= 2, "B needs rank >= 2"),
        "C": (rank >= 2, "C needs rank >= 2"),
        "D": (rank >= 3, "D needs rank >= 3"),
        "E": (rank in (6, 7, 8), "E needs rank in {6, 7, 8}"),
        "F": (rank == 4, "F needs rank 4"),
        "G": (rank == 2, "G needs rank 2"),
    }
    ok, message = constraints[kind]
    if not ok:
        raise InvalidRootSystemError(f"{kind}{rank}: {message}")
    if rank > max_rank:
        raise InvalidRootSystemError(f"{kind}{rank}: rank exceeds the configured maximum {max_rank}")


def _edges(kind: str, n: int) -> List[Tuple[int, int, int, int]]:
    """Dynkin edges as (i, j, c(i,j), c(j,i)), 1-based."""
    if kind == "A":
        return [(i, i + 1, -1, -1) for i in range(1, n)]
    if kind == "B":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 1, n, -2, -1)]
    if kind == "C":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 1, n, -1, -2)]
    if kind == "D":
        return [(i, i + 1, -1, -1) for i in range(1, n - 1)] + [(n - 2, n, -1, -1)]
    if kind == "E":
        chain = [(1, 3)] + [(i, i + 1) for i in range(3, n)]
        return [(i, j, -1, -1) for i, j in chain] + [(2, 4, -1, -1)]
    if kind == "F":
        return [(1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    # G2: alpha_1 short, alpha_2 long
    return [(1, 2, -1, -3)]


def build(kind: str, rank: int, max_rank: int = DEFAULT_ROOT_MAX_RANK) -> RootSystem:
    """Construct the root system of the given simple type.

    Raises:
        InvalidRootSystemError: if the kind is unknown or the rank violates
            the kind's constraint (the message names the constraint), or exceeds
            ``max_rank``, the guard on root and group enumeration.
    """
    kind = kind.upper()
    _check_rank(kind, rank, max_rank)
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in _edges(kind, rank):
        rows[i - 1][j - 1] = cij
        rows[j - 1][i - 1] = cji
    return RootSystem(kind=kind, rank=rank, cartan=tuple(tuple(r) for r in rows))


def _check_index(rs: RootSystem, j: int) -> None:
    if not 1 <= j <= rs.rank:
        raise RankMismatchError(f"{rs.label}: simple-root index {j} outside 1..{rs.rank}")


def _check_weight(rs: RootSystem, chi: Sequence) -> None:
    if len(chi) != rs.rank:
        raise RankMismatchError(f"{rs.label}: weight of length {len(chi)} for rank {rs.rank}")


def pairing(rs: RootSystem, chi: Sequence, j: int) -> Fraction:
    """<chi, coroot_j> = sum_i chi_i c(i, j)."""
    _check_index(rs, j)
    _check_weight(rs, chi)
    return Fraction(sum(chi[i] * rs.cartan[i][j - 1] for i in range(rs.rank)))


def coroot_pairing(rs: RootSystem, chi: Sequence, coroot: Sequence[int]) -> Fraction:
    """<chi, coroot> for a coroot given in the simple-coroot basis."""
    _check_weight(rs, chi)
    total = Fraction(0)
    for j, d in enumerate(coroot):
        if d:
            total += d * sum(chi[i] * rs.cartan[i][j] for i in range(rs.rank))
    return total


def neighbors(rs: RootSystem, i: int) -> List[int]:
    _check_index(rs, i)
    return [j + 1 for j in range(rs.rank) if j != i - 1 and rs.cartan[i - 1][j] != 0]


@lru_cache(maxsize=None)
def _cartan_inverse(rs: RootSystem) -> Tuple[Tuple[Fraction, ...], ...]:
    inverse = Matrix([list(row) for row in rs.cartan]).inv()
    return tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(rs.rank))
        for i in range(rs.rank)
    )


def fundamental_weight(rs: RootSystem, r: int) -> Weight:
    """The weight dual to coroot_r, i.e. row r of the inverse Cartan matrix."""
    _check_index(rs, r)
    return _cartan_inverse(rs)[r - 1]


def fundamental_weights(rs: RootSystem) -> List[Weight]:
    return [fundamental_weight(rs, r) for r in range(1, rs.rank + 1)]


@lru_cache(maxsize=None)
def root_data(rs: RootSystem) -> Tuple[PositiveRoot, ...]:
    """Positive roots with coroots, generated by reflecting from the simple roots.

    Sorted by height, then lexicographically.
    """
    n = rs.rank
    c = rs.cartan
    unit = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found: Dict[Tuple[int, ...], Tuple[int, ...]] = {u: u for u in unit}
    frontier = list(unit)
    while frontier:
        nxt = []
        for beta in frontier:
            dual = found[beta]
            for i in range(n):
                if beta == unit[i]:
                    continue
                p = sum(beta[k] * c[k][i] for k in range(n))
                if p >= 0:
                    continue
                image = tuple(beta[k] - p if k == i else beta[k] for k in range(n))
                if image in found:
                    continue
                q = sum(dual[k] * c[i][k] for k in range(n))
                found[image] = tuple(dual[k] - q if k == i else dual[k] for k in range(n))
                nxt.append(image)
        frontier = nxt
    ordered = sorted(found, key=lambda b: (sum(b), b))
    return tuple(PositiveRoot(root=b, coroot=found[b]) for b in ordered)


def positive_roots(rs: RootSystem) -> List[Weight]:
    return [tuple(Fraction(x) for x in pr.root) for pr in root_data(rs)]


def highest_root(rs: RootSystem) -> Weight:
    return positive_roots(rs)[-1]


def weyl_group_order(kind: str, rank: int) -> int:
    n = rank
    if kind == "A":
        return math.factorial(n + 1)
    if kind in ("B", "C"):
        return 2 ** n * math.factorial(n)
    if kind == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(kind, n)]


def clearing_factor(chi: Iterable[Fraction]) -> int:
    """Least k > 0 such that k * chi has integer coordinates."""
    k = 1
    for x in chi:
        k = math.lcm(k, Fraction(x).denominator)
    return k


def scale(chi: Sequence, k) -> Weight:
    return tuple(Fraction(x) * k for x in chi)


def pairing_bound_violations(rs: RootSystem, bound: int = 2) -> List[Tuple[int, Tuple[int, ...], Fraction]]:
    """All (r, root, value) with |<varpi_r, coroot>| > bound.

    Negative roots have the negated coroot, so checking positive roots covers both signs.
    """
    out = []
    for r in range(1, rs.rank + 1):
        varpi = fundamental_weight(rs, r)
        for pr in root_data(rs):
            value = coroot_pairing(rs, varpi, pr.coroot)
            if abs(value) > bound:
                out.append((r, pr.root, value))
    return out
