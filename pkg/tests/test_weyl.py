"""Weyl group engine: words, lengths, enumeration, cosets, Bruhat order, Coxeter elements."""

import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

# Add src to Python path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from errors import EnumerationLimitError, InvalidRootSystemError, RankMismatchError
from services.rootsys import build, simple_root, weight, weyl_group_order
from services.weyl import (
    CosetSpec,
    WeylGroup,
    bruhat_leq,
    coxeter_elements,
    enumerate_group,
    get_group,
    length,
    min_coset_reps,
)

B3 = build("B", 3)
A2 = build("A", 2)
A3 = build("A", 3)

b3_words = st.lists(st.integers(min_value=1, max_value=3), max_size=12)


def words_of(elements):
    return sorted(w.word for w in elements)


@pytest.mark.parametrize(
    "kind,rank",
    [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)],
)
def test_enumeration_matches_group_order(kind, rank):
    rs = build(kind, rank)
    elements = enumerate_group(rs)
    assert len(elements) == weyl_group_order(kind, rank)
    assert len({w.matrix for w in elements}) == len(elements)
    lengths = [w.length for w in elements]
    assert lengths == sorted(lengths)


def test_enumeration_limit_refuses_large_group():
    with pytest.raises(EnumerationLimitError) as info:
        enumerate_group(build("B", 4), limit=100)
    assert info.value.group_order == 384
    assert info.value.limit == 100


def test_simple_reflection_negates_its_root():
    group = get_group(B3)
    for i in range(1, 4):
        alpha = simple_root(B3, i)
        assert group.apply(group.simple(i), alpha) == tuple(-x for x in alpha)


def test_apply_rank_mismatch():
    group = get_group(B3)
    with pytest.raises(RankMismatchError):
        group.apply(group.simple(1), weight(1, 0))


def test_braid_relation_identifies_elements():
    group = get_group(A2)
    u = group.from_word((1, 2, 1))
    v = group.from_word((2, 1, 2))
    assert u == v
    assert hash(u) == hash(v)
    assert u.length == 3


def test_non_reduced_word_is_reduced_on_construction():
    group = get_group(B3)
    w = group.from_word((1, 1))
    assert w == group.identity
    assert w.word == ()
    v = group.from_word((2, 3, 3, 1))
    assert v == group.from_word((2, 1))
    assert v.length == 2


@given(b3_words)
def test_stored_word_is_reduced(word):
    group = get_group(B3)
    w = group.from_word(word)
    assert len(w.word) == group.length(w)
    assert group.word_matrix(w.word) == w.matrix


@given(b3_words)
def test_inverse_has_same_length(word):
    group = get_group(B3)
    w = group.from_word(word)
    inv = group.inverse(w)
    assert length(inv) == length(w)
    assert group.multiply(w, inv) == group.identity


@given(b3_words, b3_words)
def test_length_is_subadditive(u_word, v_word):
    group = get_group(B3)
    u, v = group.from_word(u_word), group.from_word(v_word)
    assert group.multiply(u, v).length <= u.length + v.length


@given(b3_words)
def test_elements_permute_the_roots(word):
    group = get_group(B3)
    assert group.permutes_roots(group.from_word(word))


def test_right_descents():
    group = get_group(A3)
    assert group.right_descents(group.from_word((1, 3, 2))) == [2]
    assert group.right_descents(group.from_word((2, 1, 3))) == [1, 3]
    assert group.right_descents(group.identity) == []


def test_reflection_of_simple_root_is_simple_reflection():
    group = get_group(B3)
    for i in range(1, 4):
        unit = tuple(1 if k == i - 1 else 0 for k in range(3))
        assert group.reflection(unit, unit) == group.simple(i).matrix


def test_min_coset_reps_a2():
    reps = min_coset_reps(A2, CosetSpec.maximal(1))
    assert words_of(reps) == [(), (1,), (2, 1)]


def test_min_coset_reps_b3_index():
    assert len(min_coset_reps(B3, CosetSpec.maximal(1))) == 6


def test_min_coset_reps_extremes():
    assert words_of(min_coset_reps(B3, CosetSpec(excluded=frozenset()))) == [()]
    assert len(min_coset_reps(B3, CosetSpec(excluded=frozenset({1, 2, 3})))) == 48


def test_coset_rep_intersection():
    group = get_group(B3)
    elements = group.enumerate_group()
    for e1, e2 in itertools.product([frozenset({1}), frozenset({2}), frozenset({1, 3})], repeat=2):
        both = {w for w in elements if group.in_coset_reps(w, CosetSpec(e1)) and group.in_coset_reps(w, CosetSpec(e2))}
        union = {w for w in elements if group.in_coset_reps(w, CosetSpec(e1 & e2))}
        assert both == union


def test_bruhat_small_cases():
    group = get_group(A2)
    e = group.identity
    s1, s2 = group.simple(1), group.simple(2)
    s1s2 = group.from_word((1, 2))
    s2s1 = group.from_word((2, 1))
    w0 = group.from_word((2, 1, 2))
    for w in group.enumerate_group():
        assert bruhat_leq(e, w)
    assert bruhat_leq(s1, s1s2) and bruhat_leq(s2, s1s2)
    assert bruhat_leq(s1, w0)
    assert not bruhat_leq(s1s2, s2s1)
    assert not bruhat_leq(w0, s1s2)


@pytest.mark.parametrize("kind,rank", [("A", 3), ("B", 3)])
def test_bruhat_matches_subword_oracle(kind, rank):
    group = get_group(build(kind, rank))
    elements = group.enumerate_group()
    for w in elements:
        below = group.subword_closure(w)
        for u in elements:
            assert group.bruhat_leq(u, w) == (u.matrix in below)


def test_bruhat_across_groups_rejected():
    with pytest.raises(InvalidRootSystemError):
        bruhat_leq(get_group(A2).simple(1), get_group(B3).simple(1))


def test_coxeter_elements_a2_a3():
    assert words_of(coxeter_elements(A2)) == [(1, 2), (2, 1)]
    assert words_of(coxeter_elements(A3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]


@pytest.mark.parametrize(
    "kind,rank,count",
    [("D", 4, 8), ("B", 4, 8), ("G", 2, 2), ("F", 4, 8), ("E", 6, 32), ("A", 6, 32)],
)
def test_coxeter_element_count(kind, rank, count):
    rs = build(kind, rank)
    elements = coxeter_elements(rs)
    assert len(elements) == count
    assert all(w.length == rank for w in elements)
    assert all(sorted(w.word) == list(range(1, rank + 1)) for w in elements)


def test_coxeter_rank_guard():
    with pytest.raises(EnumerationLimitError):
        coxeter_elements(build("A", 9))
    assert len(coxeter_elements(build("A", 9), max_rank=9)) == 2 ** 8


def test_group_is_cached_per_system():
    assert get_group(build("B", 3)) is get_group(B3)
    assert isinstance(get_group(B3), WeylGroup)
