"""The curated examples must self-check cleanly and report a stable shape."""

import pytest

from gradedrings import GALLERY_IDS, run_all, run_gallery


def test_all_items_pass():
    reports = run_all()
    assert len(reports) == 10  # 4 plain + 2 parametrized over three primes
    for r in reports:
        assert r.passed
        assert r.checks
        assert r.narrative


@pytest.mark.parametrize("item", GALLERY_IDS)
def test_each_item_individually(item):
    for report in run_gallery(item):
        assert report.passed


def test_parametrized_items_accept_explicit_p():
    reports = run_gallery("torsion_nilradical", p=3)
    assert len(reports) == 1
    assert "p=3" in reports[0].id


def test_bad_ids_and_parameters_are_rejected():
    with pytest.raises(ValueError):
        run_gallery("unknown_item")
    with pytest.raises(ValueError):
        run_gallery("torsion_nilradical", p=7)
    with pytest.raises(ValueError):
        run_gallery("deligne", p=3)


def test_report_json_shape():
    report = run_gallery("mccoy_z6")[0]
    data = report.to_json()
    assert set(data) == {"id", "title", "narrative", "checks", "passed"}
    assert data["passed"] is True
    for check in data["checks"]:
        assert set(check) == {"name", "ok", "expected", "got"}
