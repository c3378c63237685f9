import pytest

from dwha import EMPTY, Subst, SupportMismatchError, apply_letter_map, canonicalize, check_cocompose, \
    check_compose_stability, check_exact_multiplicity, check_pattern_homogeneity, check_second_structure, \
    dwha2_def, dwha_cocompose, dwha_comul, dwha_compose, dwha_def, dwha_mul, enumerate_substitutions, \
    inner_product, is_injective, is_msupp_equal, project_mpr, subst_action, swap
from freemod import Elem, TensorElem
from hopf import check_antipode, check_bialgebra, check_dual_pair

CAP = (3, 3)


def test_relabelling_gives_one_canonical_form():
    expected = Subst((1, 2, 1, 3, 3, 1, 4), (2, 3, 2, 4, 1))
    assert canonicalize((7, 6, 7, 2, 2, 7, 5), (6, 2, 6, 5, 7)) == expected
    assert canonicalize(("y3", "z4", "y3", "x2", "x2", "y3", "x1"), ("z4", "x2", "z4", "x1", "y3")) == expected
    assert expected.degree == 4
    assert EMPTY.degree == 0


def test_support_mismatch():
    with pytest.raises(SupportMismatchError):
        canonicalize((1, 2), (1, 3))


def test_coproduct_over_good_cuts():
    p = canonicalize((1, 2, 1, 3, 3, 1, 4, 1, 4), (2, 3, 2, 4, 1))
    assert dwha_comul(p) == TensorElem({
        (EMPTY, p): 1,
        (canonicalize((2, 3, 3), (2, 3, 2)), canonicalize((1, 1, 1, 4, 1, 4), (4, 1))): 1,
        (canonicalize((2, 3, 3, 4, 4), (2, 3, 2, 4)), canonicalize((1, 1, 1, 1), (1,))): 1,
        (p, EMPTY): 1,
    })


def test_product_shuffles_bottoms():
    p = Subst((1,), (1,))
    assert dwha_mul(p, p) == Elem({Subst((1, 2), (1, 2)): 1, Subst((1, 2), (2, 1)): 1})


def test_swap_is_an_involution():
    for p in enumerate_substitutions(2, 3, 3):
        assert swap(swap(p)) == p


def test_inner_product_of_embedded_permutations():
    sigma = Subst((1, 2, 3), (2, 3, 1))
    assert inner_product(sigma, Subst((1, 2, 3), (3, 1, 2))) == 1
    assert inner_product(sigma, sigma) == 0


def test_action_and_composition():
    p = Subst((1, 1, 2), (2, 1))
    assert subst_action(p, (5, 5, 7)) == Elem.basis((7, 5))
    assert subst_action(p, (5, 6, 7)) == Elem.zero()
    assert subst_action(p, (5, 5)) == Elem.zero()
    sigma = Subst((1, 2), (2, 1))
    assert dwha_compose(sigma, sigma) == Elem.basis(Subst((1, 2), (1, 2)))


def test_cocomposition_refuses_non_injective():
    with pytest.raises(ValueError):
        dwha_cocompose(Subst((1,), (1, 1)))
    assert len(dwha_cocompose(Subst((1, 2), (2, 1)))) == 2


def test_projection_onto_permutations():
    assert project_mpr(Subst((1, 2), (2, 1))) == Elem.basis((2, 1))
    assert project_mpr(Subst((1, 1), (1,))) == Elem.zero()


def test_both_structures_are_hopf():
    assert check_bialgebra(dwha_def(), 3, CAP, 2).passed
    assert check_bialgebra(dwha2_def(), 3, CAP, 2).passed
    assert check_antipode(dwha_def(), 3, CAP).passed


def test_self_duality():
    assert check_dual_pair(dwha_def(), dwha_def(), inner_product, 2, CAP, CAP).passed


def test_second_structure_oracle():
    assert check_second_structure(3, CAP).passed


def test_families():
    assert check_compose_stability("injective", is_injective, 3, CAP).passed
    assert check_compose_stability("msupp", is_msupp_equal, 3, CAP).passed
    assert check_cocompose(3, CAP).passed
    assert check_exact_multiplicity(2, 2, (4, 4)).passed


def test_non_injective_pairs_can_compose_to_an_injective_substitution():
    p = canonicalize((1, 1), (1,))
    q = canonicalize((1,), (1, 1))
    r = canonicalize((1,), (1,))
    assert dwha_compose(p, q) == Elem.basis(r)
    assert dwha_cocompose(r) == TensorElem([((r, r), 1)])
    assert dwha_cocompose(r).coefficient((p, q)) == 0


def test_letter_maps_commute_with_the_action():
    p = canonicalize((1, 2, 1), (2, 1))
    w = (5, 7, 5)
    phi = {5: 1, 7: 1}
    assert subst_action(p, w) == Elem.basis((7, 5))
    assert subst_action(p, tuple(phi[x] for x in w)) == Elem.basis((1, 1))
    # merging letters completes the pattern of a word p kills
    assert subst_action(p, (1, 2, 3)) == Elem.zero()
    assert subst_action(p, apply_letter_map((1, 2, 1), (1, 2, 3))) == Elem.basis((2, 1))


def test_pattern_homogeneity():
    report = check_pattern_homogeneity(3, CAP)
    assert report.passed
    assert report.cases_run > 0
