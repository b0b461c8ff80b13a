import json

import pytest

from betaring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_evalz_example(capsys):
    code, out, _ = run(capsys, "evalz", "--class", "S2:S2", "--r", "3")
    assert code == 0
    assert out.strip() == "6"


def test_catalog_dump(capsys):
    code, out, _ = run(capsys, "catalog", "--ambient", "S3")
    assert code == 0
    assert "4 subgroup classes" in out
    assert "C3" in out


def test_catalog_json_schema(capsys):
    code, out, _ = run(capsys, "--json", "catalog", "--ambient", "S3")
    data = json.loads(out)
    assert data["descriptor"] == "S3"
    assert len(data["classes"]) == 4
    assert data["marks_matrix"][0] == [6, 0, 0, 0]
    assert {"index", "label", "generators", "order", "norm_order", "ptype", "marks"} <= set(
        data["classes"][0]
    )


def test_marks_table(capsys):
    code, out, _ = run(capsys, "--json", "marks", "--ambient", "S2")
    assert json.loads(out)["matrix"] == [[2, 0], [1, 1]]


def test_psik_n2(capsys):
    code, out, _ = run(capsys, "--json", "psiK", "--n", "2")
    data = json.loads(out)
    assert data["entries"][0]["beta_coeffs"] == [1, 0]
    assert data["entries"][1]["beta_coeffs"] == [-1, 2]


def test_prod_star_diag_lin(capsys):
    code, out, _ = run(capsys, "prod", "--left", "S1:e", "--right", "S1:e")
    assert code == 0 and "S2:e" in out
    code, out, _ = run(capsys, "star", "--left", "S2:S2", "--right", "S2:S2")
    assert code == 0 and "S4:" in out
    code, out, _ = run(capsys, "--json", "diag", "--class", "S2:e")
    assert sum(t["coeff"] for t in json.loads(out)) == 4
    code, out, _ = run(capsys, "lin", "--psi", "2")
    assert out.strip() == "p[2]"


def test_evalg(capsys):
    code, out, _ = run(capsys, "evalg", "--class", "S2:S2", "--group", "C3")
    assert code == 0
    assert "2*[G/e]" in out


def test_witt_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "witt", "--op", "mul", "--a", "1,0", "--b", "1,0")
    data = json.loads(out)
    assert data["result"]["coeffs"] == [[1, 1], [1, 1]]


def test_check_suite_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "mod2")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out.replace("0 failing", "")


def test_check_adams_n1(capsys):
    code, out, _ = run(capsys, "check", "adams", "--n", "1")
    assert code == 0


def test_unknown_class_is_a_computation_error(capsys):
    code, out, err = run(capsys, "evalz", "--class", "S2:bogus", "--r", "1")
    assert code == 1
    assert "error" in err


def test_json_error_object(capsys):
    code, out, _ = run(capsys, "--json", "evalz", "--class", "S2:bogus", "--r", "1")
    assert code == 1
    assert "error" in json.loads(out)


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["evalz", "--r", "1"])
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    _, first, _ = run(capsys, "--json", "catalog", "--ambient", "S4")
    _, second, _ = run(capsys, "--json", "catalog", "--ambient", "S4")
    assert first == second
