import csv
import io as _io
import json
import os
from fractions import Fraction

import pytest

from cubicparam import io
from cubicparam.cli import main
from cubicparam.parser import parse_expr
from cubicparam.surface import XVARS

DATA = os.path.join(os.path.dirname(__file__), "data")
FERMAT = os.path.join(DATA, "fermat.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def param_file(tmp_path, capsys):
    out = tmp_path / "phi.json"
    code, _, _ = run(capsys, "parametrize", FERMAT, "--out", str(out))
    assert code == 0
    return out


def test_parametrize_writes_result(param_file):
    data = json.loads(param_file.read_text())
    assert data["degree"] == 3
    assert data["field_of_definition"] == "Q"
    assert data["verification"]["ok"]
    assert data["plane"] == "x0 + x2"


def test_parametrize_is_deterministic(tmp_path, capsys, param_file):
    again = tmp_path / "again.json"
    run(capsys, "parametrize", FERMAT, "--out", str(again))
    assert again.read_bytes() == param_file.read_bytes()


def test_parametrize_to_stdout_with_plane_override(capsys):
    code, out, _ = run(capsys, "parametrize", FERMAT, "--plane", "x0 + x2")
    assert code == 0
    assert json.loads(out)["plane"] == "x0 + x2"


def test_generic_plane_override(capsys):
    code, out, _ = run(capsys, "parametrize", FERMAT, "--plane", "x0 + 2*x1 + 3*x2 + 5*x3")
    data = json.loads(out)
    assert data["verification"]["checks"]["identity"]["ok"]
    assert data["degree"] == data["verification"]["checks"]["degree"]["predicted"]
    assert code == 0


def test_verify_round_trip(capsys, param_file):
    code, out, _ = run(capsys, "verify", str(param_file), FERMAT)
    assert code == 0 and json.loads(out)["ok"]


def test_verify_detects_tampering(tmp_path, capsys, param_file):
    data = json.loads(param_file.read_text())
    data["phi"][1] = data["phi"][1] + " + y0^3"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(bad), FERMAT)
    assert code == 2
    assert "identity" in json.loads(out)["failed"]


def test_sample_csv(tmp_path, capsys, param_file):
    out = tmp_path / "points.csv"
    code, _, _ = run(capsys, "sample", str(param_file), "--grid", "5", "--out", str(out))
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert list(rows[0]) == io.CSV_COLUMNS
    origin = next(r for r in rows if r["y1"] == "0" and r["y2"] == "0")
    assert (origin["x1"], origin["x2"], origin["x3"]) == ("0", "-1", "0")
    f = parse_expr("x0^3 + x1^3 + x2^3 + x3^3", XVARS)
    for r in rows:
        x = [Fraction(r[k]) for k in ("x1", "x2", "x3")]
        assert f.evaluate([1, *x]) == 0
        assert float(r["x1_float"]) == pytest.approx(float(x[0]))
    assert len(rows) <= 25


def test_lines_ff_summary(capsys):
    code, out, _ = run(capsys, "lines-ff", FERMAT, "--prime", "7")
    assert code == 0
    assert out.strip() == "lines: 27, transversals(l1,l2): 5"


def test_lines_ff_json(capsys):
    code, out, _ = run(capsys, "lines-ff", FERMAT, "--prime", "13", "--root", "3", "--json")
    rep = json.loads(out)
    assert rep["root"] == 3 and rep["lines"] == 27


def test_lines_ff_bad_prime(capsys):
    code, _, err = run(capsys, "lines-ff", FERMAT, "--prime", "5")
    assert code == 3
    assert json.loads(err)["error"]["code"] == "non_split_prime"
    code, _, err = run(capsys, "lines-ff", FERMAT, "--prime", "37")
    assert code == 3


def test_cubic_space(capsys):
    code, out, _ = run(capsys, "cubic-space", FERMAT)
    data = json.loads(out)
    assert code == 0 and data["dimension"] == 10 and len(data["basis"]) == 10


def test_screen(capsys):
    code, out, _ = run(capsys, "screen", FERMAT)
    assert code == 0 and not json.loads(out)["singular"]


def _problem(tmp_path, **kw):
    base = json.loads(open(FERMAT).read())
    base.update(kw)
    p = tmp_path / "prob.json"
    p.write_text(json.dumps(base))
    return str(p)


def test_non_skew_lines_exit_3(tmp_path, capsys):
    base = json.loads(open(FERMAT).read())
    path = _problem(tmp_path, lines={"l1": base["lines"]["l1"], "l2": base["lines"]["m"]},
                    plane=None, chart=None)
    code, _, err = run(capsys, "parametrize", path)
    assert code == 3
    assert json.loads(err)["error"]["code"] == "lines_not_skew"


def test_parse_error_exit_4(tmp_path, capsys):
    code, _, err = run(capsys, "parametrize", _problem(tmp_path, surface="x0^(3)"))
    assert code == 4
    e = json.loads(err)["error"]
    assert e["code"] == "parse_error" and e["position"] == 3


def test_unknown_symbol_exit_4(tmp_path, capsys):
    code, _, err = run(capsys, "parametrize", _problem(tmp_path, surface="x0^3 + q^3"))
    assert code == 4
    assert json.loads(err)["error"]["code"] == "unknown_symbol"


def test_missing_file_exit_3(capsys):
    code, _, err = run(capsys, "parametrize", "/nonexistent/problem.json")
    assert code == 3


def test_invalid_json_exit_3(tmp_path, capsys):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, _, _ = run(capsys, "parametrize", str(p))
    assert code == 3


def test_problem_file_line_forms():
    prob = io.load_problem({"field": [1, 1, 1], "surface": "x0^3 + x1^3 + x2^3 + x3^3",
                            "lines": {"a": [["1", "-w^2", 0, 0], [0, 0, "-w", 1]],
                                      "b": {"points": [[1, 0, -1, 0], [0, -1, 0, 1]]}}})
    ref = io.load_problem(FERMAT)
    assert prob.lines["a"].same_as(ref.lines["l1"])
    assert prob.lines["b"].same_as(ref.lines["m"])


def test_field_spec_validation():
    from cubicparam.errors import InputError, ReducibleMinPoly
    with pytest.raises(InputError):
        io.parse_field([2, 1, 1])
    with pytest.raises(ReducibleMinPoly):
        io.parse_field([1, 0, -1])


def test_csv_writer_format():
    buf = _io.StringIO()
    io.write_samples_csv([{"y1": Fraction(0), "y2": Fraction(1), "x1": Fraction(1, 8),
                           "x2": Fraction(-9, 8), "x3": Fraction(3, 4)}], buf)
    assert buf.getvalue().splitlines()[1] == "0,1,1/8,-9/8,3/4,0.125,-1.125,0.75"
