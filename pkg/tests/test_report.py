# tests/test_report.py

import json

import pytest

from hamspec.models import ExceptionEntry, Verdict, VerificationReport, merge_reports


def report(n, **fields):
    return VerificationReport(check_id="lemmaG2", n=(n, n), **fields)


def test_finalize_settles_verdicts():
    assert report(5).finalize().verdict is Verdict.PASS
    assert report(5, violations=["D~{"]).finalize().verdict is Verdict.FAIL
    assert report(5, completed=False).finalize().verdict is Verdict.PARTIAL


def test_failed_required_fact_fails_the_report():
    r = report(5)
    r.add_fact("gap", 0.1, 0.2, ">")
    r.finalize()
    assert r.verdict is Verdict.FAIL
    assert r.violations == ["fact:gap"]


def test_informational_fact_does_not_fail():
    r = report(5)
    fact = r.add_fact("comparison", 1.0, 2.0, ">", required=False)
    assert not fact.holds
    assert r.finalize().passed


def test_merge_is_associative():
    a = report(5, scanned=10, exceptions=[ExceptionEntry(graph6="DF{", family="G2(5)")])
    b = report(6, scanned=20, notes=["x"])
    c = report(7, scanned=5, exceptions=[ExceptionEntry(graph6="DF{", family="G2(5)", occurrences=2)])
    left = merge_reports(merge_reports(a, b), c)
    right = merge_reports(a, merge_reports(b, c))
    assert left.to_dict() == right.to_dict()
    assert left.n == (5, 7)
    assert left.scanned == 35
    assert left.exceptions[0].occurrences == 3


def test_merge_rejects_different_checks():
    with pytest.raises(ValueError):
        merge_reports(report(5), VerificationReport(check_id="theorem1", n=(5, 5)))


def test_json_without_timing():
    r = report(5, elapsed_ms=12.5).finalize()
    data = json.loads(r.to_json(include_timing=False))
    assert "elapsed_ms" not in data
    assert list(data)[:3] == ["check_id", "n", "scanned"]
    assert data["verdict"] == "PASS"
