import io
import json
from pathlib import Path

import jsonschema
import pytest

from sequency import dumps_sgn, loads_sgn, ordered_threshold, power_residue
from sequency.cli import main

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"
ORD5_SQUARED = [0, 9, 10, 19, 20, 1, 8, 11, 18, 21, 2, 7, 12, 17, 22, 3, 6, 13, 16, 23, 4, 5, 14, 15, 24]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


@pytest.fixture
def ord5(tmp_path):
    p = tmp_path / "ord5.sgn"
    p.write_text(dumps_sgn(ordered_threshold(5)))
    return p


def test_count_ordered_with_oracle():
    code, out, _ = run("count", "--n", "3", "--what", "ordered", "--oracle")
    assert code == 0
    data = json.loads(out)
    assert (data["formula_value"], data["oracle_value"], data["agree"]) == ("16", "16", True)
    jsonschema.validate(data, schema("count_report"))


@pytest.mark.parametrize("what", ["ordered", "complete", "chains", "per-sequency", "grid-check"])
def test_count_outputs_validate(what):
    code, out, _ = run("count", "--n", "4", "--what", what, "--oracle")
    jsonschema.validate(json.loads(out), schema("count_report"))
    assert code == (2 if what == "grid-check" else 0)


def test_grid_check_exit_codes():
    assert run("count", "--n", "1", "--what", "grid-check")[0] == 0
    code, out, _ = run("count", "--n", "3", "--what", "grid-check")
    assert code == 2
    assert json.loads(out) == {"n": 3, "what": "grid-check", "lhs": "2", "rhs": "9", "agree": False}


def test_big_integers_are_decimal_strings():
    _, out, _ = run("count", "--n", "40", "--what", "complete")
    value = json.loads(out)["formula_value"]
    assert isinstance(value, str) and len(value) > 100


def test_oversized_oracle_is_an_error():
    code, out, err = run("count", "--n", "5", "--what", "complete", "--oracle")
    assert code == 1
    assert out == ""
    assert "n <= 4" in err


def test_walsh_check():
    assert run("walsh-check", "--n", "8") == (0, "match\n", "")
    code, out, _ = run("walsh-check", "--n", "16", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("walsh_check"))
    assert data["golden_match"] is None and data["match"]


def test_walsh_check_rejects_non_power_of_two():
    code, _, err = run("walsh-check", "--n", "6")
    assert code == 1 and "power-of-two" in err


def test_tensor_verify_ord5_squared(ord5):
    code, out, _ = run("tensor", "--a", str(ord5), "--b", str(ord5), "--mode", "verify")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("tensor_report"))
    assert data["all_agree"]
    assert [c["actual"] for c in data["columns"]] == ORD5_SQUARED
    assert [c["predicted"] for c in data["columns"]] == ORD5_SQUARED
    assert data["columns"][6]["digits"] == [1, 1]


def test_tensor_power_predict_and_expand(ord5):
    code, out, _ = run("tensor", "--a", str(ord5), "--power", "2", "--mode", "predict")
    assert code == 0
    assert [c["predicted"] for c in json.loads(out)["columns"]] == ORD5_SQUARED
    code, out, _ = run("tensor", "--a", str(ord5), "--mode", "expand", "--format", "text")
    assert code == 0
    assert loads_sgn(out).n == 25


def test_tensor_large_power_is_sampled(ord5):
    code, out, _ = run("tensor", "--a", str(ord5), "--power", "5", "--mode", "verify", "--seed", "3")
    data = json.loads(out)
    assert code == 0
    assert data["sampled"] and len(data["columns"]) == 64 and data["all_agree"]


def test_tensor_rejects_power_with_b(ord5):
    code, _, err = run("tensor", "--a", str(ord5), "--b", str(ord5), "--power", "3", "--mode", "predict")
    assert code == 1 and "--power" in err


def test_generate_formats():
    code, out, _ = run("generate", "--kind", "power-residue", "--n", "5")
    assert code == 0 and loads_sgn(out) == power_residue(5)
    code, out, _ = run("generate", "--kind", "walsh-sequency", "--n", "8", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("generate"))
    assert data["profile"] == list(range(8)) and data["orthogonal"]
    _, out, _ = run("generate", "--kind", "threshold", "--n", "3", "--format", "pbm")
    assert out.splitlines()[:2] == ["P1", "3 3"]
    _, out, _ = run("generate", "--kind", "threshold", "--n", "2", "--format", "csv")
    assert out == "1,1\n1,-1\n"


def test_generate_rejects_bad_size():
    code, _, err = run("generate", "--kind", "threshold", "--n", "1")
    assert code == 1 and err


def test_classify(tmp_path):
    p = tmp_path / "pr8.sgn"
    p.write_text(dumps_sgn(power_residue(8)))
    code, out, _ = run("classify", "--input", str(p))
    data = json.loads(out)
    jsonschema.validate(data, schema("classification"))
    assert code == 0
    assert data["duplicates"] == {"0": [0, 2, 4, 6], "7": [1, 3, 5, 7]}
    code, out, _ = run("classify", "--input", str(p), "--format", "text")
    assert "sequency 7: columns [1, 3, 5, 7]" in out


def test_classify_real(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("2 3\n4 -5\n")
    code, out, _ = run("classify", "--input", str(p), "--real")
    assert code == 0 and json.loads(out)["ordered"]


def test_malformed_input_reports_position(tmp_path):
    p = tmp_path / "bad.sgn"
    p.write_text("++\n+*\n")
    code, out, err = run("classify", "--input", str(p))
    assert code == 1 and out == ""
    assert "line 2, column 2" in err


def test_missing_file_is_exit_one(tmp_path):
    code, _, err = run("classify", "--input", str(tmp_path / "nope.sgn"))
    assert code == 1 and err


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--n", "3", "--what", "ordered", "--bogus"],
        ["frobnicate"],
        [],
        ["generate", "--kind", "paley", "--n", "4"],
    ],
)
def test_usage_errors_exit_one(argv):
    code, _, err = run(*argv)
    assert code == 1 and err.startswith("error:")


def test_output_is_deterministic(ord5):
    argv = ["tensor", "--a", str(ord5), "--power", "4", "--mode", "verify", "--sample", "20", "--seed", "9"]
    assert run(*argv) == run(*argv)
    assert run("count", "--n", "12", "--what", "chains", "--oracle") == run(
        "count", "--n", "12", "--what", "chains", "--oracle"
    )
