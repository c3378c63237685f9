from math import comb

import pytest
from hypothesis import given, strategies as st

from dwha import Subst, dwha_def
from freemod import Elem, TensorElem
from hopf import check_antipode, check_bialgebra, check_dual_pair, check_hopf_morphism
from mpr import NotAPermutationError, check_cocompose_duality, check_cocompose_restriction, cocompose, compose, \
    embed_dwha, embed_map, inverse, inverse_map, kronecker_inverse, make_perm, mpr2_def, mpr_comul, mpr_comul2, \
    mpr_def, mpr_mul, mpr_mul2, orthonormal, permutations_of

perms = st.integers(min_value=0, max_value=4).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_make_perm():
    assert make_perm([2, 1]) == (2, 1)
    with pytest.raises(NotAPermutationError):
        make_perm([1, 3])


def test_product_example():
    assert mpr_mul((1,), (1,)) == Elem({(1, 2): 1, (2, 1): 1})
    assert mpr_mul((), (2, 1)) == Elem.basis((2, 1))


@given(perms, perms)
def test_product_has_no_multiplicities(s, t):
    product = mpr_mul(s, t)
    assert len(product) == comb(len(s) + len(t), len(s))
    assert set(product.values()) <= {1}


@given(perms)
def test_coproduct_term_count(s):
    assert sum(mpr_comul(s).values()) == len(s) + 1


def test_second_structure_examples():
    assert mpr_mul2((1,), (1,)) == Elem({(1, 2): 1, (2, 1): 1})
    assert mpr_comul2((2, 1)) == TensorElem({((), (2, 1)): 1, ((1,), (1,)): 1, ((2, 1), ()): 1})


@given(perms)
def test_inverse(s):
    assert inverse(inverse(s)) == s
    assert compose(s, inverse(s)) == Elem.basis(tuple(range(1, len(s) + 1)))


def test_compose_needs_equal_lengths():
    assert compose((1, 2), (1,)) == Elem.zero()
    assert compose((2, 3, 1), (3, 1, 2)) == Elem.basis((1, 2, 3))


def test_cocompose_sums_over_the_group():
    assert len(cocompose((2, 1, 3))) == 6


def test_embedding():
    assert embed_dwha((2, 1)) == Subst((1, 2), (2, 1))


@pytest.mark.parametrize("make", [mpr_def, mpr2_def])
def test_both_structures_are_hopf(make):
    assert check_bialgebra(make(), 4).passed
    assert check_antipode(make(), 4).passed


def test_dualities():
    assert check_dual_pair(mpr_def(), mpr_def(), kronecker_inverse, 4).passed
    assert check_dual_pair(mpr2_def(), mpr2_def(), kronecker_inverse, 4).passed
    assert check_dual_pair(mpr2_def(), mpr_def(), orthonormal, 4).passed


def test_morphisms():
    assert check_hopf_morphism(embed_map, mpr_def(), dwha_def(), 3).passed
    assert check_hopf_morphism(inverse_map, mpr_def(), mpr2_def(), 4).passed


def test_cocomposition():
    assert check_cocompose_duality(3).passed
    assert check_cocompose_restriction(3).passed


def test_permutations_are_lexicographic():
    assert permutations_of(3)[:2] == ((1, 2, 3), (1, 3, 2))
