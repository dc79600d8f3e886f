"""Root data: Cartan matrices, pairings, fundamental weights, positive roots."""

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from errors import InvalidRootSystemError, RankMismatchError
from services.rootsys import (
    build,
    clearing_factor,
    coroot_pairing,
    fundamental_weight,
    fundamental_weights,
    highest_root,
    neighbors,
    pairing,
    pairing_bound_violations,
    positive_roots,
    root_data,
    simple_root,
    weight,
    weyl_group_order,
)

SMALL_SYSTEMS = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 3), ("D", 4), ("D", 5),
    ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
]

systems = st.sampled_from(SMALL_SYSTEMS).map(lambda kr: build(*kr))


@pytest.mark.parametrize(
    "kind,rank,message",
    [
        ("B", 1, "B needs rank >= 2"),
        ("C", 1, "C needs rank >= 2"),
        ("D", 2, "D needs rank >= 3"),
        ("E", 5, "E needs rank in {6, 7, 8}"),
        ("F", 3, "F needs rank 4"),
        ("G", 3, "G needs rank 2"),
    ],
)
def test_build_rejects_rank_naming_constraint(kind, rank, message):
    with pytest.raises(InvalidRootSystemError, match=message.replace("{", r"\{").replace("}", r"\}")):
        build(kind, rank)


def test_build_rejects_unknown_kind():
    with pytest.raises(InvalidRootSystemError, match="unknown kind"):
        build("H", 3)


def test_build_rank_guard():
    assert build("A", 24).rank == 24
    with pytest.raises(InvalidRootSystemError, match="configured maximum 24"):
        build("A", 25)
    with pytest.raises(InvalidRootSystemError, match="configured maximum 3"):
        build("B", 4, max_rank=3)
    assert build("B", 4, max_rank=4).rank == 4


def test_kind_is_case_insensitive():
    assert build("b", 3) == build("B", 3)


def test_cartan_conventions():
    b3 = build("B", 3)
    assert b3.c(2, 3) == -2 and b3.c(3, 2) == -1
    c3 = build("C", 3)
    assert c3.c(2, 3) == -1 and c3.c(3, 2) == -2
    g2 = build("G", 2)
    assert g2.c(1, 2) == -1 and g2.c(2, 1) == -3
    f4 = build("F", 4)
    assert f4.c(2, 3) == -2 and f4.c(3, 2) == -1


def test_dynkin_neighbors():
    assert neighbors(build("D", 4), 2) == [1, 3, 4]
    assert neighbors(build("D", 5), 3) == [2, 4, 5]
    assert neighbors(build("E", 8), 4) == [2, 3, 5]
    assert neighbors(build("A", 1), 1) == []


def test_pairing_of_simple_roots_is_cartan():
    rs = build("F", 4)
    for i in range(1, 5):
        for j in range(1, 5):
            assert pairing(rs, simple_root(rs, i), j) == rs.c(i, j)


def test_pairing_rank_mismatch():
    rs = build("B", 3)
    with pytest.raises(RankMismatchError):
        pairing(rs, weight(1, 0), 1)
    with pytest.raises(RankMismatchError):
        pairing(rs, weight(1, 0, 0), 4)


@given(systems)
def test_fundamental_weights_are_dual_to_coroots(rs):
    for r, varpi in enumerate(fundamental_weights(rs), start=1):
        for j in range(1, rs.rank + 1):
            assert pairing(rs, varpi, j) == (1 if j == r else 0)


@given(systems)
def test_fundamental_weights_are_nonnegative(rs):
    for varpi in fundamental_weights(rs):
        assert all(x > 0 for x in varpi)


@pytest.mark.parametrize(
    "kind,rank,r,expected",
    [
        ("A", 2, 1, ("2/3", "1/3")),
        ("B", 3, 1, (1, 1, 1)),
        ("B", 3, 3, ("1/2", 1, "3/2")),
        ("C", 3, 1, (1, 1, "1/2")),
        ("D", 4, 1, (1, 1, "1/2", "1/2")),
        ("G", 2, 2, (3, 2)),
    ],
)
def test_fundamental_weight_values(kind, rank, r, expected):
    assert fundamental_weight(build(kind, rank), r) == weight(*expected)


@pytest.mark.parametrize(
    "kind,rank,r,k",
    [("B", 3, 1, 1), ("B", 3, 3, 2), ("C", 3, 1, 2), ("D", 4, 4, 2), ("D", 5, 5, 4), ("A", 3, 2, 2), ("A", 2, 1, 3)],
)
def test_clearing_factor(kind, rank, r, k):
    assert clearing_factor(fundamental_weight(build(kind, rank), r)) == k


@pytest.mark.parametrize(
    "kind,rank,count",
    [
        ("A", 4, 10), ("B", 4, 16), ("C", 5, 25), ("D", 5, 20),
        ("E", 6, 36), ("E", 7, 63), ("E", 8, 120), ("F", 4, 24), ("G", 2, 6),
    ],
)
def test_positive_root_counts(kind, rank, count):
    assert len(positive_roots(build(kind, rank))) == count


@pytest.mark.parametrize(
    "kind,rank,expected",
    [
        ("A", 4, (1, 1, 1, 1)),
        ("B", 4, (1, 2, 2, 2)),
        ("C", 4, (2, 2, 2, 1)),
        ("D", 5, (1, 2, 2, 1, 1)),
        ("G", 2, (3, 2)),
        ("F", 4, (2, 3, 4, 2)),
        ("E", 8, (2, 3, 4, 6, 5, 4, 3, 2)),
    ],
)
def test_highest_root(kind, rank, expected):
    assert highest_root(build(kind, rank)) == weight(*expected)


@given(systems)
def test_root_pairs_with_its_own_coroot_to_two(rs):
    for pr in root_data(rs):
        assert coroot_pairing(rs, pr.root, pr.coroot) == 2


def test_roots_sorted_by_height_and_simple_first():
    rs = build("D", 4)
    data = root_data(rs)
    heights = [pr.height for pr in data]
    assert heights == sorted(heights)
    assert [pr.root for pr in data[:4]] == [pr.coroot for pr in data[:4]]


@pytest.mark.parametrize("kind", ["A", "B", "C", "D"])
@pytest.mark.parametrize("rank", range(2, 8))
def test_pairing_bound_for_classical_types(kind, rank):
    if kind == "D" and rank < 3:
        pytest.skip("D starts at rank 3")
    assert pairing_bound_violations(build(kind, rank)) == []


def test_pairing_bound_fails_for_e8():
    violations = pairing_bound_violations(build("E", 8))
    assert violations
    assert all(abs(value) > 2 for _, _, value in violations)


@pytest.mark.parametrize(
    "kind,rank,order",
    [("A", 3, 24), ("B", 3, 48), ("D", 4, 192), ("F", 4, 1152), ("G", 2, 12), ("E", 6, 51840)],
)
def test_weyl_group_order(kind, rank, order):
    assert weyl_group_order(kind, rank) == order


def test_weight_parses_strings():
    assert weight("1/2", 2, Fraction(3, 4)) == (Fraction(1, 2), Fraction(2), Fraction(3, 4))
