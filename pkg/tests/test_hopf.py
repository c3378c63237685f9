import pytest

from freemod import Elem, TensorElem
from hopf import EnumerationCapError, HopfDef, Report, antipode, antipode_of_key, check_antipode, check_bialgebra, \
    check_dual_pair, check_hopf_morphism, enumerate_basis
from dwha import dwha_def
from shuffle_lie import kronecker, liehopf_def, shuffle_def
from words import compositions_up_to, cuts, weight


def test_enumeration_requires_a_cap_for_infinite_rank():
    with pytest.raises(EnumerationCapError):
        enumerate_basis(dwha_def(), 2)
    assert enumerate_basis(dwha_def(), 1, (1, 1))


def test_enumeration_order():
    keys = enumerate_basis(shuffle_def(), 2)
    assert keys == [(), (1,), (2,), (1, 1)]


@pytest.mark.parametrize("make", [shuffle_def, liehopf_def])
def test_word_algebras_are_hopf(make):
    H = make()
    assert check_bialgebra(H, 5).passed
    assert check_antipode(H, 5).passed


def test_antipode_of_generator_in_liehopf():
    assert antipode_of_key(liehopf_def(), (3,)) == Elem.basis((3,), -1)
    assert antipode(liehopf_def(), Elem.basis((1, 2))) == Elem.basis((2, 1))


def test_liehopf_and_shuffle_are_dual():
    assert check_dual_pair(liehopf_def(), shuffle_def(), kronecker, 4).passed


def _broken_def():
    """Concatenation with the cut coproduct is not a bialgebra"""
    return HopfDef(name='broken', degree=weight, enumerate=lambda bound, cap: compositions_up_to(bound),
                   product=lambda a, b: Elem.basis(a + b),
                   coproduct=lambda w: TensorElem((pair, 1) for pair in cuts(w)), unit=())


def test_bialgebra_failure_carries_a_counterexample():
    report = check_bialgebra(_broken_def(), 3)
    assert not report.passed
    assert report.counterexample["law"] == "Hopf compatibility"
    assert report.witness == [(1,), (1,)]
    assert "FAIL" in report.render()
    assert report.to_dict()["counterexample"]["law"] == "Hopf compatibility"


def test_morphism_check_reports_witness():
    identity = lambda w: Elem.basis(w)
    assert check_hopf_morphism(identity, shuffle_def(), shuffle_def(), 4).passed
    report = check_hopf_morphism(identity, shuffle_def(), liehopf_def(), 3, halves="coalgebra")
    assert not report.passed
    assert report.witness == [(1, 1)]


def test_unknown_halves_raise():
    with pytest.raises(ValueError):
        check_hopf_morphism(lambda w: Elem.basis(w), shuffle_def(), shuffle_def(), 2, halves="neither")


def test_report_merge_keeps_first_failure():
    first = Report(suite="a", subject="x")
    second = Report(suite="b", subject="x", cases_run=3)
    second.record_failure("law", [(1,)], 1, 2)
    assert not first.merge(second)
    assert first.cases_run == 3
    assert first.counterexample["law"] == "law"
