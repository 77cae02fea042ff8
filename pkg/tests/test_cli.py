import json

import pytest

from orbipolya.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["orbi-index", "--group", "C:3"], "1/3*x1^3 + 8/3*x3"),
        (["index", "--group", "C:1"], "x1"),
        (["necklaces", "--orbi", "-p", "3", "-r", "2"], "8"),
        (["necklaces", "-p", "3", "-r", "2"], "4"),
        (["count", "--group", "S:3", "-r", "2", "--orbi"], "10"),
        (["count", "--group", "C:3", "-r", "2"], "4"),
        (["coeffs", "--group", "C:2", "-r", "2", "--orbi"], "2*x1^2 + x1*x2 + 2*x2^2"),
        (["coeffs", "--group", "C:2", "--exponents", "2,0", "--orbi"], "2"),
        (["cycles", "--group", "S:2", "-r", "1", "-n", "2"], "5"),
        (["cycles", "--group", "S:2", "-r", "1", "-n", "2", "--quotient", "plain", "--cycles", "plain"], "1"),
        (["cohomology-dim", "-n", "3", "-b", "2"], "10"),
        (["orbi-index", "--group", "S:3", "--closed-form"], "1/6*x1^3 + 3/2*x1*x2 + 4/3*x3"),
        (["index", "--group", "G:5:(1 2 3)(4 5),(1 2)"],
         "1/12*x1^5 + 1/3*x1^3*x2 + 1/6*x1^2*x3 + 1/4*x1*x2^2 + 1/6*x2*x3"),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == expected


def test_json_and_latex(capsys):
    _, out, _ = run(capsys, "necklaces", "--orbi", "-p", "3", "-r", "2", "--format", "json")
    assert json.loads(out) == {"value": "8"}
    _, out, _ = run(capsys, "orbi-index", "--group", "C:3", "--format", "json")
    assert json.loads(out)["terms"][1] == {"coeff": "8/3", "exps": {"3": 1}}
    _, out, _ = run(capsys, "orbi-index", "--group", "C:3", "--format", "latex")
    assert out == r"\frac{1}{3} x_{1}^{3} + \frac{8}{3} x_{3}"


def test_printed_variant_warns(capsys):
    code, out, err = run(capsys, "orbi-index", "--group", "D:3", "--closed-form", "--variant", "printed")
    assert code == 0
    assert "1/2*x1^3 + x3" in err
    code, _, _ = run(capsys, "orbi-index", "--group", "D:5", "--closed-form")
    assert code == 0


def test_exponent_sum_warning(capsys):
    code, out, err = run(capsys, "coeffs", "--group", "C:3", "--exponents", "1,1")
    assert code == 0 and out == "0" and "degree" in err


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["index", "--group", "X:3"], "--group"),
        (["index", "--group", "D:2"], "--group"),
        (["necklaces", "-p", "4", "-r", "2"], "-p"),
        (["necklaces", "-p", "0", "-r", "2"], "-p"),
        (["count", "--group", "C:3"], "--colors"),
        (["coeffs", "--group", "C:3"], "--colors"),
        (["coeffs", "--group", "C:3", "--exponents", "a,b"], "--exponents"),
        (["index", "--group", "G:3:(1 2)", "--closed-form"], "--closed-form"),
        (["index", "--group", "C:3", "--format", "xml"], "--format"),
        (["verify", "--max-degree", "9"], "--max-degree"),
    ],
)
def test_usage_errors_exit_one(capsys, argv, flag):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    _, err = capsys.readouterr()
    assert code == 1
    assert flag in err


def test_no_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cyclic", "--max", "5")
    report = json.loads(out)
    assert code == 0
    assert report["suite"] == "cyclic"
    assert report["summary"]["fail"] == 0
    assert all(c["status"] in ("pass", "documented deviation", "skipped") for c in report["checks"])


def test_verify_printed_dihedral_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dihedral", "--max", "5", "--variant", "printed")
    report = json.loads(out)
    assert code == 0
    assert report["summary"]["documented deviation"] > 0


def test_verify_failure_exits_two(capsys, monkeypatch):
    from orbipolya import cycleindex

    monkeypatch.setattr(cycleindex, "_dihedral_corrected", lambda n: cycleindex.cycle_index_dihedral(n))
    code, out, err = run(capsys, "verify", "--suite", "dihedral", "--max", "4")
    assert code == 2
    assert "n=3" in err
    assert json.loads(out)["summary"]["fail"] > 0


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "oracle", "--max", "3", "--max-degree", "3")
    second = run(capsys, "verify", "--suite", "oracle", "--max", "3", "--max-degree", "3")
    assert first == second
