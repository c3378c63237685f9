import random

import pytest
from hypothesis import given, strategies as st

from dwha import Subst
from freemod import Elem, TensorElem
from hopf import check_antipode, check_bialgebra, check_hopf_morphism
from mpr import mpr_def
from wha import NotStaircaseError, check_wha_oracle, check_wha_stability, decode, encode, random_composition, \
    st_map, std_surj_map, wha_action, wha_comul, wha_comul_direct, wha_def, wha_mul, wha_mul_via_dwha
from words import InvalidWordError

ALPHA = (3, 2, 7, 2, 4)
words = st.lists(st.integers(min_value=1, max_value=6), max_size=4).map(tuple)


def test_encode_worked_example():
    assert encode(ALPHA) == Subst((1, 1, 2, 3, 4, 4, 4), (2, 1, 4, 1, 3))
    assert decode(Subst((1, 1, 2, 3, 4, 4, 4), (2, 1, 4, 1, 3))) == ALPHA


@given(words)
def test_decode_inverts_encode(w):
    assert decode(encode(w)) == w


def test_decode_rejects_non_staircase():
    with pytest.raises(NotStaircaseError):
        decode(Subst((1, 2, 1), (1, 2)))


def test_coproduct_examples():
    assert wha_comul(ALPHA) == TensorElem({
        ((), ALPHA): 1, ((1,), (2, 6, 2, 3)): 1, ((3, 2, 6, 2), (1,)): 1, (ALPHA, ()): 1})
    beta = (7, 3, 2, 2, 4)
    assert wha_comul(beta) == TensorElem({
        ((), beta): 1, ((3,), (3, 2, 2, 4)): 1, ((4, 1), (2, 2, 3)): 1, ((6, 3, 2, 2), (1,)): 1, (beta, ()): 1})


def test_product_agrees_with_permutations():
    assert wha_mul((1,), (1,)) == Elem({(1, 2): 1, (2, 1): 1})


@given(words, words)
def test_word_level_operations_match_substitutions(a, b):
    assert wha_mul(a, b) == wha_mul_via_dwha(a, b)
    assert wha_comul_direct(a) == wha_comul(a)


def test_action_picks_letters():
    assert wha_action(ALPHA, (5, 5, 6, 8, 9, 9, 9)) == Elem.basis((6, 5, 9, 5, 8))
    assert wha_action(ALPHA, (1, 1, 2, 3, 4, 4)) == Elem.zero()
    assert wha_action(ALPHA, (1, 2, 3, 4, 5, 6, 7)) == Elem.zero()


@pytest.mark.parametrize("kwargs, bound", [({}, 5), ({"family": "injective"}, 5), ({"family": "surjective"}, 5),
                                           ({"grading": "length", "max_letter": 2}, 3)])
def test_variants_are_hopf(kwargs, bound):
    H = wha_def(**kwargs)
    assert check_bialgebra(H, bound).passed
    assert check_antipode(H, bound).passed


def test_length_grading_needs_a_letter_cap():
    with pytest.raises(ValueError):
        wha_def(grading="length")


def test_standardization_is_multiplicative_but_not_comultiplicative():
    assert check_hopf_morphism(st_map, wha_def(), mpr_def(), 5, halves="algebra").passed
    report = check_hopf_morphism(st_map, wha_def(), mpr_def(), 5, halves="coalgebra")
    assert not report.passed
    assert report.witness == [(1, 1)]


def test_surjective_standardization_is_a_retraction():
    assert check_hopf_morphism(std_surj_map, wha_def(), wha_def(family="surjective"), 5).passed


def test_random_compositions():
    rng = random.Random(7)
    assert random_composition(rng, 0) == ()
    for n in range(1, 9):
        alpha = random_composition(rng, n)
        assert sum(alpha) == n
        assert all(part >= 1 for part in alpha)


def test_encode_rejects_letters_below_one():
    with pytest.raises(InvalidWordError):
        encode((0,))
    with pytest.raises(InvalidWordError):
        encode((2, -1))


def test_oracle_and_stability():
    assert check_wha_oracle(samples=100, max_weight=6, seed=1).passed
    assert check_wha_oracle(samples=50, max_weight=3, seed=2004).passed
    assert check_wha_stability(3, (3, 3)).passed
