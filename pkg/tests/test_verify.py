import json

from orbipolya.cycleindex import AS_PRINTED
from orbipolya.verify import DEVIATION, FAIL, PASS, Bounds, random_groups, run_suite


def test_cyclic_suite_up_to_twelve():
    report = run_suite("cyclic", Bounds(max_n=12))
    assert report.ok
    assert report.counts()[FAIL] == 0 and report.counts()[PASS] > 0


def test_printed_dihedral_reports_deviation_at_three():
    report = run_suite("dihedral", Bounds(max_n=9, variant=AS_PRINTED))
    assert report.ok
    devs = [c for c in report.checks if c.status == DEVIATION]
    at3 = [c for c in devs if c.instance == "n=3"]
    assert at3 and "1/2*x1^3 + x3" in at3[0].detail


def test_oracle_suite_default_bounds():
    report = run_suite("oracle", Bounds(max_degree=4, max_colors=3))
    assert report.ok


def test_report_serialises():
    report = run_suite("symmetric", Bounds(max_n=4))
    d = json.loads(json.dumps(report.to_dict()))
    assert d["ok"] is True
    assert set(d["summary"]) == {"pass", "fail", "documented deviation", "skipped"}
    assert all({"check", "instance", "anchor", "status"} <= set(c) for c in d["checks"])


def test_random_groups_are_reproducible():
    a = [label for label, _ in random_groups(5, 5, seed=7)]
    b = [label for label, _ in random_groups(5, 5, seed=7)]
    assert a == b


def test_out_of_bounds_cases_are_reported_as_skipped():
    report = run_suite("counting", Bounds(max_degree=5, max_colors=3))
    skipped = [c for c in report.checks if c.status == "skipped"]
    assert report.ok and skipped
    assert all(c.detail for c in skipped)
