"""CLI surface: golden sessions, exit codes, round trips, oracle parity."""

from __future__ import annotations

import json

from maxplus import MaxMatrix, Maxpolynomial, parse_scalar
from maxplus.cli import main

SYM_B_TEXT = '{"rows": 2, "cols": 2, "data": [["0", "10"], ["10", "0"]]}'
SUM_TOTAL_GRID = "6 5 0 0\n5 0 3 2\n0 2 0 0\n0 3 0 0"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_roots(capsys):
    code, out, _ = run_cli(capsys, "poly", "roots", "4, 4, 0")
    assert code == 0
    assert out == "(4, 0)\n"


def test_poly_conv(capsys):
    code, out, _ = run_cli(capsys, "poly", "conv", "--k", "2", "2, 2, 0", "20, 0, 0")
    assert code == 0
    assert out.splitlines()[0] == "20, 2, 0"


def test_poly_roots_null_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "poly", "roots", "-inf")
    assert code == 3
    assert "null polynomial" in err


def test_poly_parse_error(capsys):
    code, _, err = run_cli(capsys, "poly", "roots", "4, spam, 0")
    assert code == 2
    assert "parse error" in err


def test_poly_other_subcommands(capsys):
    assert run_cli(capsys, "poly", "fcf", "8, 7, 5, 3, 0")[1] == "true\n"
    assert run_cli(capsys, "poly", "fcf", "1, 0, 0")[1] == "false\n"
    code, out, _ = run_cli(capsys, "poly", "concavify", "1, 0, 0")
    assert out.splitlines()[0] == "1, 1/2, 0"
    code, out, _ = run_cli(capsys, "poly", "derive", "--k", "1", "1, 0, -1")
    assert out.splitlines()[0] == "0, -1"
    code, out, _ = run_cli(capsys, "poly", "add", "1, 0, -1", "0, 0, 0")
    assert out.splitlines()[0] == "1, 0, 0"
    code, out, _ = run_cli(capsys, "poly", "mul", "1, 0, -1", "0, 0, 0")
    assert out.splitlines()[0] == "1, 1, 1, 0, -1"
    code, out, _ = run_cli(capsys, "poly", "hadamard", "4, 4, 0", "3, 1, 0")
    assert out.splitlines()[0] == "7, 5, 0"
    code, out, _ = run_cli(capsys, "poly", "eval", "4, 4, 0", "4")
    assert out == "8\n"
    code, out, _ = run_cli(capsys, "poly", "eval", "4, 4, 0", "-inf")
    assert out == "4\n"


def test_poly_hadamard_degree_mismatch_exit_code(capsys):
    code, _, err = run_cli(capsys, "poly", "hadamard", "1, 0", "1, 0, 0")
    assert code == 3
    assert "domain error" in err


def test_matrix_fullcharpoly(capsys, tmp_path):
    mat = tmp_path / "B.mat"
    mat.write_text(SYM_B_TEXT)
    code, out, _ = run_cli(capsys, "matrix", "fullcharpoly", str(mat))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "20, 10, 0"
    assert lines[1] == "monomial: x^2 (+) 10x (+) 20"
    assert lines[2] == "factored: (x (+) 10)^2"


def test_matrix_pd_check(capsys):
    code, out, _ = run_cli(capsys, "matrix", "pd-check", SYM_B_TEXT)
    assert code == 0
    assert out == "false\n"


def test_matrix_eta(capsys):
    code, out, _ = run_cli(capsys, "matrix", "eta", "--k", "3", SUM_TOTAL_GRID)
    assert code == 0
    assert out == "12\n"


def test_matrix_misc(capsys):
    assert run_cli(capsys, "matrix", "permanent", SYM_B_TEXT)[1] == "20\n"
    assert run_cli(capsys, "matrix", "delta", "--k", "1", SYM_B_TEXT)[1] == "0\n"
    assert run_cli(capsys, "matrix", "norm", SYM_B_TEXT)[1] == "10\n"
    assert run_cli(capsys, "matrix", "nu", SYM_B_TEXT)[1] == "10\n"
    code, out, _ = run_cli(capsys, "matrix", "charpoly", SYM_B_TEXT)
    assert out.splitlines()[0] == "20, 0, 0"
    code, out, _ = run_cli(capsys, "matrix", "grampoly", SYM_B_TEXT)
    assert out.splitlines()[0] == "20, 10, 0"


def test_matrix_partitions(capsys):
    worked_b = MaxMatrix(
        [[0, 0, -2, 2], [-2, 1, -1, -1], [-1, 0, -3, -1], [-1, -2, -1, 0]]
    )
    code, out, _ = run_cli(capsys, "matrix", "partitions", worked_b.format_json())
    assert code == 0
    assert out.splitlines() == ["{1,3},{2,4}", "{1},{2,4},{3}"]


def test_matrix_shape_error(capsys):
    code, _, err = run_cli(capsys, "matrix", "permanent", "1 2 3\n4 5 6")
    assert code == 3
    assert "square" in err


def test_oracle_byte_identity(capsys):
    cases = [
        ("matrix", "permanent", SYM_B_TEXT),
        ("matrix", "eta", "--k", "1", SYM_B_TEXT),
        ("matrix", "eta", "--k", "3", SUM_TOTAL_GRID),
        ("matrix", "delta", "--k", "2", SYM_B_TEXT),
        ("matrix", "charpoly", SUM_TOTAL_GRID),
        ("matrix", "fullcharpoly", SUM_TOTAL_GRID),
        ("matrix", "nu", SUM_TOTAL_GRID),
        ("poly", "roots", "1, 0, 0"),
    ]
    for argv in cases:
        code_fast, out_fast, _ = run_cli(capsys, *argv)
        code_slow, out_slow, _ = run_cli(capsys, *argv, "--oracle")
        assert code_fast == code_slow == 0
        assert out_fast == out_slow, f"oracle output differs for {argv}"


def test_cli_round_trips(capsys):
    code, out, _ = run_cli(capsys, "matrix", "fullcharpoly", SYM_B_TEXT)
    reparsed = Maxpolynomial.parse(out.splitlines()[0])
    assert reparsed == Maxpolynomial([20, 10, 0])
    code, out, _ = run_cli(capsys, "matrix", "permanent", SYM_B_TEXT)
    assert parse_scalar(out.strip()).value == 20


def test_json_output(capsys):
    code, out, _ = run_cli(capsys, "matrix", "fullcharpoly", "--json", SYM_B_TEXT)
    doc = json.loads(out)
    assert doc["result_coeffs"] == ["20", "10", "0"]
    assert doc["fcf"] is True
    assert doc["roots"] == ["10", "10"]
    code, out, _ = run_cli(capsys, "poly", "eval", "--json", "4, 4, 0", "4")
    assert json.loads(out)["result"] == "8"
    code, out, _ = run_cli(
        capsys, "matrix", "partitions", "--json", '{"rows": 1, "cols": 1, "data": [["0"]]}'
    )
    assert json.loads(out) == {
        "inputs": ['{"rows": 1, "cols": 1, "data": [["0"]]}'],
        "partitions": ["{1}"],
        "truncated": False,
    }


def test_conv_subcommands(capsys, tmp_path):
    a = tmp_path / "A.mat"
    b = tmp_path / "B.mat"
    a.write_text('{"rows": 2, "cols": 2, "data": [["2", "-inf"], ["-inf", "0"]]}')
    b.write_text(SYM_B_TEXT)
    code, out, _ = run_cli(capsys, "conv", "additive", str(a), str(b))
    assert code == 0
    assert out.splitlines()[0] == "20, 10, 0"
    code, out, _ = run_cli(capsys, "conv", "maxrow", str(a), str(b))
    assert out.splitlines()[0] == "20, 10, 0"
    code, out, _ = run_cli(capsys, "conv", "hadamard", str(a), str(b))
    assert out.splitlines()[0] == "22, 12, 0"
    code, out, _ = run_cli(capsys, "conv", "multi", str(a), str(b))
    assert out.splitlines()[0] == "20, 10, 0"
    code, _, err = run_cli(capsys, "conv", "pd", str(a), str(b))
    assert code == 3
    assert "principally dominant" in err
    bprime = tmp_path / "Bp.mat"
    bprime.write_text('{"rows": 2, "cols": 2, "data": [["10", "0"], ["0", "10"]]}')
    code, out, _ = run_cli(capsys, "conv", "pd", str(a), str(bprime))
    assert out.splitlines()[0] == "20, 10, 0"


def test_conv_certificate(capsys):
    a_text = '{"rows": 2, "cols": 2, "data": [["2", "-inf"], ["-inf", "0"]]}'
    code, out, _ = run_cli(
        capsys, "conv", "additive", "--certificate", "--json", a_text, SYM_B_TEXT
    )
    doc = json.loads(out)
    assert doc["result_coeffs"] == ["20", "10", "0"]
    assert set(doc["certificate"]) == {"x^0", "x^1", "x^2"}
    assert doc["certificate"]["x^1"] is not None


def test_conv_orient(capsys):
    a = MaxMatrix([[2, 0, 3, -1], [0, 0, 1, 1], [-2, 2, 2, 1], [2, -1, 1, 1]])
    b = MaxMatrix([[0, 0, -2, 2], [-2, 1, -1, -1], [-1, 0, -3, -1], [-1, -2, -1, 0]])
    code, out, _ = run_cli(capsys, "conv", "orient", a.format_json(), b.format_json())
    assert code == 0
    assert out.splitlines() == ["P0: (2 3 1 4)", "Q0: (3 4 2 1)"]


def test_conv_cap_exit_code(capsys):
    from maxplus import gen_matrix

    big1 = gen_matrix(6, seed=1).format_json()
    big2 = gen_matrix(6, seed=2).format_json()
    code, _, err = run_cli(capsys, "conv", "additive", big1, big2)
    assert code == 4
    assert "cap exceeded" in err


def test_verify_cli(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "additive", "--n", "2", "--trials", "10", "--seed", "7"
    )
    assert code == 0
    assert "10/10 pass" in out
    code, out, _ = run_cli(
        capsys, "verify", "fcf-concavity", "--n", "4", "--trials", "25", "--seed", "1"
    )
    assert code == 0
    assert "25/25 pass" in out


def test_verify_negative_control_cli(capsys):
    code, out, _ = run_cli(capsys, "verify", "pd", "--negative-control")
    assert code == 1
    assert "20, 2, 0" in out
    assert "NOT violated" in out
