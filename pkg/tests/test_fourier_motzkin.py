"""Exact Fourier-Motzkin elimination."""

import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from services.fourier_motzkin import (
    FourierMotzkin,
    Inequality,
    VerboseFourierMotzkin,
    equality,
    inequalities,
)

HALF = Fraction(1, 2)


def simplex_rows():
    # x >= y, y >= 0, x + y == 1
    return inequalities([[1, -1], [0, 1]]) + equality([1, 1], 1, 2)


def test_solve_simplex_edge():
    assert FourierMotzkin().solve(simplex_rows(), 2) == (HALF, HALF)


def test_interval_simplex_edge():
    fm = FourierMotzkin()
    assert fm.interval(simplex_rows(), 2, 0) == (HALF, Fraction(1))
    assert fm.interval(simplex_rows(), 2, 1) == (Fraction(0), HALF)


def test_unbounded_variable():
    rows = inequalities([[1, 0], [0, 1]], rhs=[1, 0])
    fm = FourierMotzkin()
    assert fm.interval(rows, 2, 1) == (Fraction(0), None)
    assert fm.solve(rows, 2) == (Fraction(1), Fraction(0))


def test_infeasible_system():
    rows = inequalities([[1], [-1]], rhs=[1, 0])
    fm = FourierMotzkin()
    assert fm.solve(rows, 1) is None
    assert fm.interval(rows, 1, 0) is None


def test_constant_row_infeasible():
    rows = inequalities([[0, 0]], rhs=[1])
    assert FourierMotzkin().solve(rows, 2) is None


def test_normalized_keeps_direction():
    row = Inequality((Fraction(-4), Fraction(2)), Fraction(6), frozenset({0}))
    assert row.normalized() == Inequality((Fraction(-1), HALF), Fraction(3, 2), frozenset({0}))


def test_duplicate_rows_are_merged():
    rows = inequalities([[2, 2], [1, 1]], rhs=[2, 1])
    stages = FourierMotzkin().project(rows, [])
    assert len(stages[0]) == 1


def test_histories_grow_by_union():
    fm = FourierMotzkin()
    stages = fm.project(simplex_rows(), [1])
    assert all(len(row.history) <= 2 for row in stages[-1])


def test_verbose_engine_logs_steps(capsys):
    VerboseFourierMotzkin().solve(simplex_rows(), 2)
    err = capsys.readouterr().err
    assert "<fme>eliminate 2 of 2 columns" in err
    assert "rows remain</fme>" in err


small = st.integers(min_value=-3, max_value=3)


@st.composite
def feasible_systems(draw):
    nvars = draw(st.integers(min_value=1, max_value=3))
    point = [draw(small) for _ in range(nvars)]
    nrows = draw(st.integers(min_value=1, max_value=6))
    rows, rhs = [], []
    for _ in range(nrows):
        row = [draw(small) for _ in range(nvars)]
        slack = draw(st.integers(min_value=0, max_value=2))
        rows.append(row)
        rhs.append(sum(c * x for c, x in zip(row, point)) - slack)
    return nvars, inequalities(rows, rhs)


@settings(max_examples=200)
@given(feasible_systems())
def test_feasible_systems_are_solved(system):
    nvars, rows = system
    point = FourierMotzkin().solve(rows, nvars)
    assert point is not None
    assert all(row.satisfied_by(point) for row in rows)


@given(feasible_systems(), st.integers(min_value=0, max_value=2))
def test_interval_contains_solution(system, var):
    nvars, rows = system
    var = var % nvars
    point = FourierMotzkin().solve(rows, nvars)
    lo, hi = FourierMotzkin().interval(rows, nvars, var)
    assert lo is None or lo <= point[var]
    assert hi is None or point[var] <= hi


def test_rows_remember_their_variables():
    rows = inequalities([[1, 0, -2], [0, 0, 0]]) + equality([0, 3, 0], 1, 2)
    assert [row.support for row in rows] == [frozenset({0, 2}), frozenset(), frozenset({1}), frozenset({1})]


def test_cancelled_variables_widen_the_history_bound():
    coeffs = (Fraction(0), Fraction(0), Fraction(1))
    fm = FourierMotzkin()
    # eliminating x also cancelled y: one explicit and one implicit elimination
    assert not fm.redundant(Inequality(coeffs, Fraction(0), frozenset({0, 1, 2}), frozenset({0, 1, 2})), frozenset({0}))
    assert fm.redundant(Inequality(coeffs, Fraction(0), frozenset({0, 1, 2}), frozenset({0, 2})), frozenset({0}))
    assert not FourierMotzkin(prune=False).redundant(
        Inequality(coeffs, Fraction(0), frozenset({0, 1, 2}), frozenset({0, 2})), frozenset({0})
    )


@st.composite
def any_systems(draw):
    nvars = draw(st.integers(min_value=1, max_value=3))
    nrows = draw(st.integers(min_value=1, max_value=6))
    rows = [[draw(small) for _ in range(nvars)] for _ in range(nrows)]
    rhs = [draw(small) for _ in range(nrows)]
    return nvars, inequalities(rows, rhs)


@settings(max_examples=200)
@given(any_systems())
def test_pruning_preserves_feasibility(system):
    nvars, rows = system
    pruned = FourierMotzkin().solve(rows, nvars)
    full = FourierMotzkin(prune=False).solve(rows, nvars)
    assert (pruned is None) == (full is None)
    if pruned is not None:
        assert all(row.satisfied_by(pruned) for row in rows)
