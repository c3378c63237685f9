import json

import pytest

from dwha import canonicalize
from freemod import Elem, TensorElem
from hopf import Report
from mpr import NotAPermutationError
from registry import ALGEBRAS, MAPS, PAIRINGS, OperandKindError, UnknownNameError, get_algebra, get_map
from report_storage import list_saved_runs, load_reports, save_reports
from suites import SUITES, SuiteOptions, UnknownSuiteError, all_passed, expect_failure, run_suite


def test_registry_covers_every_algebra():
    for name in ('shuffle', 'liehopf', 'mpr', 'mpr2', 'wha', 'dwha', 'nsymm', 'qsymm', 'icc'):
        assert name in ALGEBRAS
    for entry in MAPS.values():
        assert entry.source in ALGEBRAS and entry.target in ALGEBRAS
    for entry in PAIRINGS.values():
        assert entry.left in ALGEBRAS and entry.right in ALGEBRAS
    with pytest.raises(UnknownNameError):
        get_algebra("nope")
    with pytest.raises(UnknownNameError):
        get_map("nope")


def test_operands_are_checked_against_the_algebra():
    perm = Elem.basis((2, 1))
    assert get_algebra("mpr").validate(perm) == perm
    with pytest.raises(NotAPermutationError):
        get_algebra("mpr2").validate(Elem.basis((1, 1)))
    with pytest.raises(OperandKindError):
        get_algebra("dwha").validate(perm)
    with pytest.raises(OperandKindError):
        get_algebra("wha").validate(Elem.basis(canonicalize((1,), (1,))))
    with pytest.raises(OperandKindError):
        get_algebra("nsymm").validate(TensorElem([(((1,), (2,)), 1)]))


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope")


def test_expected_failure_wrapper():
    failed = Report(suite="s", subject="x")
    failed.record_failure("law", [(1, 1)], 1, 2)
    assert expect_failure(failed, "known", witness=[(1, 1)]).passed
    assert not expect_failure(failed, "known", witness=[(2,)]).passed
    assert not expect_failure(Report(suite="s", subject="x"), "known").passed


def test_worked_examples():
    reports = run_suite("regression")
    assert all_passed(reports), reports[0].render()


def test_standardization_witness():
    (report,) = run_suite("morphism", SuiteOptions(map="st", halves="coalgebra"))
    assert not report.passed
    assert report.witness == [(1, 1)]


def test_single_algebra_suites():
    assert all_passed(run_suite("bialgebra", SuiteOptions(algebra="mpr", bound=3)))
    assert all_passed(run_suite("antipode", SuiteOptions(algebra="nsymm", bound=3)))
    assert all_passed(run_suite("bialgebra", SuiteOptions(algebra="dwha", bound=2, cap=(2, 2))))


def test_distributivity_suite_records_the_right_counterexample():
    reports = run_suite("distributivity", SuiteOptions(bound=3))
    assert all_passed(reports)
    assert any("counterexample" in note for note in reports[1].notes)


def test_small_descent_theorem():
    assert all_passed(run_suite("descent-theorem", SuiteOptions(n=4)))


def test_dual_pair_by_name():
    assert all_passed(run_suite("dual-pair", SuiteOptions(pairing="mpr2-mpr", bound=3)))


def test_every_suite_is_registered():
    assert set(SUITES) == {'bialgebra', 'antipode', 'dual-pair', 'self-duality', 'morphism', 'descent-theorem',
                           'solomon', 'distributivity', 'convolution', 'oracle', 'regression'}


def test_saved_reports(tmp_path):
    report = Report(suite="s", subject="x", cases_run=2)
    path = save_reports("regression", [report], folder=str(tmp_path))
    record = load_reports(path)
    assert record["passed"] is True
    assert record["reports"][0]["cases_run"] == 2
    assert list_saved_runs(str(tmp_path), "regression") == [path]
    json.dumps(record)
