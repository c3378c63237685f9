from collections import Counter
from math import comb

import pytest
from hypothesis import given, strategies as st

from freemod import Elem
from words import InvalidWordError, compositions, content, cuts, good_cuts, height, is_surjective_word, make_word, \
    overlapping_shuffle, restrict, shift, shuffle, standardize, stats, surjective_standardize, weight

words = st.lists(st.integers(min_value=1, max_value=5), max_size=4).map(tuple)


def test_make_word_rejects_bad_letters():
    with pytest.raises(InvalidWordError):
        make_word([1, 0])
    with pytest.raises(InvalidWordError):
        make_word([1, "2"])
    assert make_word([3, 1]) == (3, 1)


def test_stats():
    s = stats((6, 5, 7, 2, 5, 6, 1, 1, 5))
    assert s.length == 9
    assert s.weight == 38
    assert s.height == 7
    assert s.support == frozenset({1, 2, 5, 6, 7})
    assert s.multisupport == Counter({1: 2, 2: 1, 5: 3, 6: 2, 7: 1})
    assert content((6, 5, 7, 2, 5, 6, 1, 1, 5)) == 5
    assert height(()) == 0


def test_shuffle_examples():
    assert shuffle((3,), (1, 2, 4)) == Elem({(3, 1, 2, 4): 1, (1, 3, 2, 4): 1, (1, 2, 3, 4): 1, (1, 2, 4, 3): 1})
    assert shuffle((1,), (1, 2)) == Elem({(1, 1, 2): 2, (1, 2, 1): 1})


@given(words, words)
def test_shuffle_term_count(a, b):
    assert sum(shuffle(a, b).values()) == comb(len(a) + len(b), len(a))


@given(words, words)
def test_shuffle_commutes(a, b):
    assert shuffle(a, b) == shuffle(b, a)


def test_overlapping_shuffle_examples():
    assert overlapping_shuffle((2,), (1, 5, 3)) == Elem({
        (2, 1, 5, 3): 1, (1, 2, 5, 3): 1, (1, 5, 2, 3): 1, (1, 5, 3, 2): 1,
        (3, 5, 3): 1, (1, 7, 3): 1, (1, 5, 5): 1})
    assert overlapping_shuffle((1, 1), (1, 1)) == Elem({
        (1, 1, 1, 1): 6, (1, 1, 2): 2, (1, 2, 1): 2, (2, 1, 1): 2, (2, 2): 1})
    assert overlapping_shuffle((2,), (2, 2, 3)) == Elem({
        (2, 2, 2, 3): 3, (2, 2, 3, 2): 1, (4, 2, 3): 1, (2, 4, 3): 1, (2, 2, 5): 1})


@given(words, words)
def test_overlapping_shuffle_preserves_weight(a, b):
    assert all(weight(w) == weight(a) + weight(b) for w in overlapping_shuffle(a, b))


def test_cuts():
    assert cuts((1, 2)) == [((), (1, 2)), ((1,), (2,)), ((1, 2), ())]


def test_good_cuts_example():
    assert good_cuts((2, 3, 2, 4, 1)) == [
        ((), (2, 3, 2, 4, 1)), ((2, 3, 2), (4, 1)), ((2, 3, 2, 4), (1,)), ((2, 3, 2, 4, 1), ())]


def test_restrictions_of_a_permutation():
    tau = (4, 1, 5, 3, 2)
    assert restrict(tau, {1, 2}) == (1, 2)
    assert restrict(tau, {1, 2, 3}) == (1, 3, 2)
    assert standardize(restrict(tau, {3, 4, 5})) == (2, 3, 1)


def test_standardize_examples():
    assert standardize((5, 2, 1, 8)) == (3, 2, 1, 4)
    assert standardize((4, 3, 3, 7, 4, 8, 4)) == (3, 1, 2, 6, 4, 7, 5)
    assert standardize((1, 1)) == (1, 2)


@given(words)
def test_surjective_standardize_has_no_gaps(w):
    assert is_surjective_word(surjective_standardize(w))


def test_shift():
    assert shift((1, 3), 2) == (3, 5)


def test_compositions():
    assert compositions(3) == ((3,), (1, 2), (2, 1), (1, 1, 1))
    assert [len(compositions(n)) for n in range(6)] == [1, 1, 2, 4, 8, 16]
