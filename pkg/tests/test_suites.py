import pytest

from src.collectors.case_collector import CaseCollector
from src.suites import SUITES, CrossedSuite, ResidueSuite, SymbolsSuite
from src.suites.common import shifted
from src.scalars.exact import ExactScalar
from src.scalars.series import EpsSeries
from src.symbols.builders import rho
from src.symbols.shape import FoliationShape


def small_config(**counts):
    return {"seed": 7, "counts": counts}

def test_case_ids_are_deterministic():
    first = SymbolsSuite(small_config(associativity=4)).cases()
    second = SymbolsSuite(small_config(associativity=4)).cases()

    assert [case.case_id for case in first] == [f"symbols.associativity.{i:04d}" for i in range(4)]
    assert [case.inputs for case in first] == [case.inputs for case in second]
    assert [case.inputs["shape"] for case in first] == ["1,0", "1,1", "2,1", "1,0"]

def test_checks_without_shapes():
    cases = SymbolsSuite(small_config(clifford=2, field_axioms=1)).cases()
    assert [case.check for case in cases] == ["clifford", "clifford", "field_axioms"]
    assert all(case.inputs["shape"] is None for case in cases)

def test_oracle_cases_are_capped_by_moments():
    suite = ResidueSuite(small_config(oracle=100))
    assert len(suite.cases()) == 36

def test_small_symbols_run_passes():
    suite = SymbolsSuite(small_config(field_axioms=3, clifford=3, associativity=2,
                                      documents=2))
    report = CaseCollector([suite]).collect_reports()[0]

    assert report.cases_run == 10
    assert report.passed, [failure.to_dict() for failure in report.failures]

def test_inject_fault_fails_every_case():
    config = small_config(field_axioms=3, associativity=2)
    config["inject_fault"] = True
    report = CaseCollector([SymbolsSuite(config)]).collect_reports()[0]

    assert len(report.failures) == 5
    assert all(failure.error_type is None for failure in report.failures)

def test_oracle_discrepancies_are_recorded():
    suite = ResidueSuite(small_config(oracle=2))
    report = CaseCollector([suite]).collect_reports()[0]

    assert report.passed
    assert [record.case_id for record in report.discrepancies] == [
        "residue.oracle.0000", "residue.oracle.0001"]
    assert report.discrepancies[0].exact == ExactScalar.coerce(2).render()

def test_shifted_values(line):
    assert shifted(True) is False
    assert shifted(2) == 3
    assert shifted(EpsSeries.one(2)) == EpsSeries.one(2) * 2
    assert shifted(rho(line)) == rho(line).scale(2)
    with pytest.raises(TypeError):
        shifted("text")

@pytest.mark.integration
@pytest.mark.parametrize("name", sorted(SUITES))
def test_suites_pass_at_small_scale(mock_config, name):
    suite = SUITES[name](mock_config.get_suite_config(name))
    report = CaseCollector([suite]).collect_reports()[0]

    assert report.cases_run > 0
    assert report.passed, [failure.to_dict() for failure in report.failures]

def test_winding_cases_compare_signed_indices():
    suite = CrossedSuite(small_config(winding=5))
    report = CaseCollector([suite]).collect_reports()[0]
    assert report.passed, [failure.to_dict() for failure in report.failures]

    config = small_config(winding=5)
    config["inject_fault"] = True
    report = CaseCollector([CrossedSuite(config)]).collect_reports()[0]
    assert len(report.failures) == 5

def test_crossed_shapes_meet_every_group():
    suite = CrossedSuite(small_config(automorphism=9))
    groups = {}
    for case in suite.cases():
        shape = FoliationShape.parse(case.inputs["shape"])
        groups.setdefault(case.inputs["shape"], set()).add(
            id(suite.group(shape, case.inputs["index"])))

    assert sorted(groups) == ["1,0", "1,1", "2,1"]
    assert all(len(seen) == 3 for seen in groups.values())
