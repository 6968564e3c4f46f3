import pytest

from fiscal_composition.validation.report import CATALOG, TestReport, TestResult, emit_report


def test_catalog_has_42_unique_ids():
    assert len(CATALOG) == 42 == len(set(CATALOG))


def test_unknown_and_duplicate_ids():
    with pytest.raises(ValueError):
        TestResult("DET-22", "x", True)
    report = TestReport([TestResult("DET-01", "x", True)])
    with pytest.raises(ValueError):
        report.add(TestResult("DET-01", "y", False))


def test_empty_report_and_bad_format():
    with pytest.raises(ValueError):
        emit_report(TestReport())
    with pytest.raises(ValueError):
        emit_report(TestReport([TestResult("SYM-01", "x", True)]), "json")


def test_single_entry_table():
    text = emit_report(TestReport([TestResult("SYM-01", "Linear aggregation sufficiency", True, "ok")]))
    lines = text.splitlines()
    assert sum(1 for l in lines if l.startswith("SYM-01")) == 1
    assert lines[-1].split() == ["Total", "1", "1"]


def test_full_report_summary_and_csv():
    report = TestReport(TestResult(i, "n", i != "MC-03", "d, with comma") for i in CATALOG)
    assert not report.all_passed and report.n_passed == 41
    assert [n for _, n, _ in report.family_summary()] == [21, 10, 1, 4, 6]
    table = emit_report(report, "table")
    assert table.splitlines()[-1].split() == ["Total", "42", "41"]
    csv_text = emit_report(report, "csv")
    assert '"d, with comma"' in csv_text
    assert csv_text.rstrip("\n").splitlines()[-1] == "Total,42,41"
    assert report["MC-03"].passed is False
