import pytest

from freemod import Elem, TensorElem
from hopf import comul
from mpr import mpr_comul
from shuffle_lie import OutOfRangeError, action_endo, check_coconvolution, check_convolution_identity, \
    coconv_component, convolution, liehopf_def, perm_action, subword_coproduct, unit_endo


def test_coproduct_of_a_monomial():
    assert subword_coproduct((1, 1, 3)) == TensorElem({
        ((), (1, 1, 3)): 1, ((1,), (1, 3)): 2, ((3,), (1, 1)): 1,
        ((1, 1), (3,)): 1, ((1, 3), (1,)): 2, ((1, 1, 3), ()): 1})
    assert len(comul(liehopf_def(), Elem.basis((1, 1, 3)))) == 6


def test_permutation_action():
    assert perm_action((3, 1, 4, 5, 2), (10, 20, 30, 40, 50)) == Elem.basis((30, 10, 40, 50, 20))
    assert perm_action((1, 2), (1,)) == Elem.zero()


def test_endomorphisms_are_bounded():
    f = unit_endo(2)
    assert f(()) == Elem.basis(())
    with pytest.raises(OutOfRangeError):
        f((1, 2))


def test_convolution_with_unit_is_identity():
    ident = action_endo(Elem({(): 1, (1,): 1, (1, 2): 1}), 4)
    conv = convolution(ident, unit_endo(4))
    assert conv((1, 3)) == Elem.basis((1, 3))


def test_worked_coconvolution_component():
    assert coconv_component((3, 1, 4, 5, 2), 2, 3) == TensorElem({((2, 1), (2, 3, 1)): 1})


def test_coconvolution_components_sum_to_the_coproduct():
    perm = (3, 1, 4, 5, 2)
    total = TensorElem.zero()
    for m in range(6):
        total = total + coconv_component(perm, m, 5 - m)
    assert total == mpr_comul(perm)


def test_component_size_mismatch():
    with pytest.raises(ValueError):
        coconv_component((1, 2), 1, 2)


def test_convolution_identity_small():
    assert check_convolution_identity(3, 2).passed


def test_coconvolution_check():
    assert check_coconvolution(4).passed
