import pytest
from hypothesis import given, strategies as st

from freemod import Elem, TensorElem
from hopf import antipode, check_antipode, check_bialgebra, check_dual_pair, check_hopf_morphism
from mpr import mpr2_def, mpr_def
from nsq import BasisMismatchError, DescentSet, InvalidDescentSetError, NotInDescentAlgebraError, NsymmElem, \
    QsymmElem, check_basis_round_trips, check_biorthogonality, check_descent_class_sizes, check_distributivity, \
    check_embedding_agreement, check_embedding_injective, check_pi_i_adjunction, check_product_rule, \
    check_ribbon_product, check_second_mul_generators, check_solomon_closure, check_wronski_symmetry, \
    comp_of_desc, descent_class, desc_of_comp, desc_of_perm, duality_pairing, embed_i, f_basis, i_map, kronecker, \
    nsymm_comul, nsymm_def, nsymm_second_mul, pi_map, project_pi, qsymm_def, qsymm_f_def, ribbon_product, \
    s_to_z, solve_descent_algebra

compositions = st.lists(st.integers(min_value=1, max_value=3), max_size=3).map(tuple)


def test_descent_set_of_a_permutation():
    D = desc_of_perm((3, 2, 5, 7, 1, 4, 6))
    assert D == DescentSet.of({1, 4}, 7)
    assert comp_of_desc(D) == (1, 3, 3)
    assert D.render() == "{1,4} ⊂ {1..6}"


def test_descent_set_validation():
    with pytest.raises(InvalidDescentSetError):
        DescentSet.of({3}, 3)
    assert DescentSet.of(set(), 1).render() == "{} (m=1)"


@given(compositions)
def test_composition_descent_round_trip(alpha):
    assert comp_of_desc(desc_of_comp(alpha)) == alpha


def test_fundamental_basis_examples():
    assert f_basis((3,)) == Elem({(3,): 1, (2, 1): 1, (1, 2): 1, (1, 1, 1): 1})
    assert f_basis((1, 2)) == Elem({(1, 2): 1, (1, 1, 1): 1})
    assert f_basis((1, 1, 1)) == Elem.basis((1, 1, 1))


def test_antipode_of_a_generator():
    H = nsymm_def()
    assert antipode(H, Elem.basis((1,))) == Elem.basis((1,), -1)
    assert antipode(H, Elem.basis((2,))) == Elem({(1, 1): 1, (2,): -1})
    assert antipode(H, Elem.basis((1, 1))) == Elem.basis((1, 1))


def test_wronski_and_coproduct():
    assert s_to_z((2,)) == Elem({(1, 1): 1, (2,): -1})
    assert nsymm_comul((2,)) == TensorElem({((), (2,)): 1, ((1,), (1,)): 1, ((2,), ()): 1})


def test_tagged_elements_refuse_mixed_bases():
    with pytest.raises(BasisMismatchError):
        NsymmElem.basis_elem('Z', (1,)) + NsymmElem.basis_elem('S', (1,))
    with pytest.raises(BasisMismatchError):
        NsymmElem.basis_elem('M', (1,))


def test_ribbon_multiplication():
    product = NsymmElem.basis_elem('R', (1,)) * NsymmElem.basis_elem('R', (2,))
    assert product.basis == 'R'
    assert product.elem == ribbon_product((1,), (2,)) == Elem({(1, 2): 1, (3,): 1})


def test_quasisymmetric_product_in_the_monomial_basis():
    product = QsymmElem.basis_elem('M', (2,)) * QsymmElem.basis_elem('M', (1, 5, 3))
    assert len(product.elem) == 7


@pytest.mark.parametrize("make", [nsymm_def, qsymm_def, qsymm_f_def])
def test_are_hopf(make):
    assert check_bialgebra(make(), 4).passed
    assert check_antipode(make(), 4).passed


def test_duality():
    assert check_dual_pair(nsymm_def(), qsymm_def(), kronecker, 4).passed
    assert check_biorthogonality(4).passed
    assert duality_pairing(NsymmElem.basis_elem('R', (1, 2)), QsymmElem.basis_elem('F', (1, 2))) == 1


def test_biorthogonality_needs_the_s_pairing():
    report = check_biorthogonality(3, convention="Z")
    assert not report.passed
    assert report.witness == [(2,), (2,)]


def test_embedding_examples():
    assert embed_i(NsymmElem.basis_elem('S', (2,))) == Elem.basis((1, 2))
    assert embed_i(NsymmElem.basis_elem('R', (1, 1))) == Elem.basis((2, 1))
    assert project_pi((3, 2, 5, 7, 1, 4, 6)) == QsymmElem.basis_elem('F', (1, 3, 3))
    assert pi_map((2, 1)) == Elem.basis((1, 1))


def test_descent_algebra_solving():
    D = DescentSet.of({1}, 3)
    ribbons = solve_descent_algebra(Elem((perm, 2) for perm in descent_class(D)))
    assert ribbons == NsymmElem('R', Elem.basis((1, 2), 2))
    with pytest.raises(NotInDescentAlgebraError):
        solve_descent_algebra(Elem.basis(descent_class(D)[0]))


def test_second_product_on_generators():
    s3 = NsymmElem.basis_elem('S', (3,))
    assert nsymm_second_mul(s3, s3) == s3
    assert nsymm_second_mul(NsymmElem.basis_elem('S', (1,)), NsymmElem.basis_elem('S', (2,))).elem == Elem.zero()


def test_embedding_and_projection_are_hopf_maps():
    assert check_hopf_morphism(i_map, nsymm_def(), mpr2_def(), 4).passed
    assert check_hopf_morphism(pi_map, mpr_def(), qsymm_def(), 4).passed


def test_descent_algebra_checks():
    assert check_product_rule(5).passed
    assert check_descent_class_sizes(5).passed
    assert check_solomon_closure(3).passed
    assert check_second_mul_generators(3).passed


def test_distributivity_holds_on_one_side_only():
    assert check_distributivity("left", 4).passed
    report = check_distributivity("right", 4)
    assert not report.passed
    assert sum(report.witness[0]) == 3
    with pytest.raises(ValueError):
        check_distributivity("middle", 2)


def test_basis_and_embedding_checks():
    assert check_basis_round_trips(4).passed
    assert check_ribbon_product(4).passed
    assert check_embedding_injective(4).passed
    assert check_embedding_agreement(4).passed
    assert check_pi_i_adjunction(3).passed
    assert check_wronski_symmetry(4).passed
