"""Exhaustive runs at the full verification bounds"""
import pytest

from dwha import check_second_structure
from hopf import check_antipode, check_bialgebra
from registry import get_algebra
from shuffle_lie import check_coconvolution, check_convolution_identity
from suites import SuiteOptions, all_passed, run_suite
from wha import check_wha_oracle

pytestmark = pytest.mark.slow

DWHA_CAP = (3, 3)


def _failures(reports):
    return "\n".join(report.render() for report in reports if not report.passed)


@pytest.mark.parametrize("name", ['shuffle', 'liehopf', 'nsymm', 'qsymm', 'mpr', 'mpr2', 'wha'])
def test_hopf_algebras_up_to_degree_five(name):
    H = get_algebra(name).hopf()
    assert check_bialgebra(H, 5).passed
    assert check_antipode(H, 5).passed


def test_incisive_cut_coalgebra_up_to_weight_five():
    report = check_bialgebra(get_algebra("icc").hopf(), 5)
    assert report.passed
    assert report.cases_run > 0


@pytest.mark.parametrize("name", ['dwha', 'dwha2'])
def test_double_word_algebras_at_the_enumeration_caps(name):
    H = get_algebra(name).hopf()
    assert check_bialgebra(H, 3, DWHA_CAP, 3).passed
    assert check_antipode(H, 3, DWHA_CAP).passed


def test_dualities():
    reports = run_suite("dual-pair")
    assert all_passed(reports), _failures(reports)


def test_morphisms():
    reports = run_suite("morphism")
    assert all_passed(reports), _failures(reports)


def test_convolution_identity():
    assert check_convolution_identity(5, 3).passed
    assert check_coconvolution(5).passed


def test_descent_combinatorics():
    reports = (run_suite("descent-theorem", SuiteOptions(n=6))
               + run_suite("solomon", SuiteOptions(bound=4))
               + run_suite("distributivity", SuiteOptions(bound=4)))
    assert all_passed(reports), _failures(reports)


def test_cross_implementation_oracles():
    report = check_wha_oracle(500, 8, 2004)
    assert report.passed
    assert report.cases_run == 1000
    assert check_second_structure(3, DWHA_CAP).passed


def test_oracle_suite():
    reports = run_suite("oracle")
    assert all_passed(reports), _failures(reports)


def test_worked_examples():
    reports = run_suite("regression")
    assert all_passed(reports), _failures(reports)
