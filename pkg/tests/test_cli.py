import json

import pytest

from shadowbasis.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_schensted_running_example(capsys):
    code, out, _ = run(capsys, "schensted", "5,1,3,6,7,2,4")
    assert code == 0
    assert out.splitlines()[0] == "P: 1,2,4,7 / 3,6 / 5"
    assert "shadow rows agree with insertion: True" in out


def test_schensted_identity(capsys):
    code, out, _ = run(capsys, "schensted", "1,2,3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["P"] == data["Q"] == [[1, 2, 3]]


def test_schensted_colored(capsys):
    code, out, _ = run(capsys, "schensted", "2^1,5^0,3^0,1^0,6^0,4^1")
    assert code == 0
    assert "shadow monomial: x[1,2]*x[3,5]^2*x[4,3]^2*x[6,4]" in out


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "schensted", "1,x")
    assert code == 2 and "column 3" in err


def test_usage_error(capsys):
    assert run(capsys, "hilbert", "--n", "-1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--n", "4", "--r", "2")
    assert code == 3 and "cap" in err
    assert run(capsys, "hilbert", "--n", "6", "--r", "3", "--path", "enumerate", "--cap", "1000")[0] == 3


def test_hilbert_b3_reports_reference_mismatch(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "3", "--r", "2", "--path", "both", "--format", "json")
    data = json.loads(out)
    assert code == 1
    assert data["paths_agree"]
    assert [s["text"] for s in data["series"]] == ["1 + 9*q + 22*q^2 + 15*q^3 + q^4"] * 2
    assert [p["category"] for p in data["problems"]] == ["reference_mismatch"]
    assert data["reference"]["differences"] == [{"degree": 3, "computed": 15, "reference": 9}]


def test_hilbert_without_reference(capsys):
    code, out, _ = run(capsys, "hilbert", "--n", "3", "--r", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["d,fast", "0,1", "1,4", "2,1", "3,0"]


def test_analyze_b9(capsys):
    code, out, _ = run(capsys, "analyze", "--n", "9", "--r", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["violations_k"] == [3]
    assert data["violations_q"] == [15]
    assert data["unimodal"]


def test_strata_csv(capsys):
    code, out, _ = run(capsys, "strata", "--n", "2", "--r", "2")
    assert code == 0
    assert out.splitlines()[0] == "k,num_lambdas,sum_dim_sq,hilbert_coeff,match"
    assert all(line.endswith("true") for line in out.splitlines()[1:])


def test_verify_b1(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1", "--r", "2")
    assert code == 0 and out.splitlines()[-1] == "all: pass"


def test_histogram_file(tmp_path, capsys):
    path = tmp_path / "a10.csv"
    code, out, _ = run(capsys, "histogram", "--kind", "a", "--n", "10", "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert lines[0] == "k,count" and len(lines) == 11


def test_histogram_bad_directory(tmp_path, capsys):
    code, _, err = run(capsys, "histogram", "--kind", "a", "--n", "3", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 2 and "no" in err


def test_chartable_json(capsys):
    code, out, _ = run(capsys, "chartable", "--n", "2", "--r", "2")
    data = json.loads(out)
    assert code == 0 and data["orthogonal"] and len(data["labels"]) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ("hilbert", "--n", "4", "--r", "3", "--format", "json"),
        ("verify", "--n", "2", "--r", "3", "--seed", "11", "--format", "json"),
        ("analyze", "--n", "12", "--r", "3"),
    ],
)
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
