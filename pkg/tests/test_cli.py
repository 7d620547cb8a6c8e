import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from cuspidal import cli, suites
from cuspidal.configuration import validate_normalize
from cuspidal.io import parse_config

DATA = Path(__file__).parent / "data"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main([str(a) for a in argv])
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.strip() else None
    return code, doc, captured.err


def test_form_on_p5_with_the_given_dual(capsys):
    code, _, _ = run(capsys, "form", DATA / "p5.json", "--gale", DATA / "p5_gale.json")
    assert code == 0
    cli.main(["form", str(DATA / "p5.json"), "--gale", str(DATA / "p5_gale.json")])
    assert capsys.readouterr().out.strip() == \
        '{"vars":2,"terms":[{"exp":[1,1],"coeff":"4"},{"exp":[2,0],"coeff":"-4"}]}'


def test_form_with_canonical_dual(capsys):
    code, doc, _ = run(capsys, "form", DATA / "segment.json")
    assert code == 0 and doc == {"vars": 1, "terms": [{"exp": [1], "coeff": "2"}]}


def test_form_declines_codimension_zero(capsys):
    code, doc, _ = run(capsys, "form", DATA / "triangle_affine.json")
    assert code == 0
    assert doc == {"codimension": 0, "message": "codimension zero: no discriminant parameters"}


def test_form_rejects_a_wrong_gale_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": [[1,0],[0,1],[0,0],[0,0],[0,0]]}')
    code, doc, err = run(capsys, "form", DATA / "p5.json", "--gale", bad)
    assert code == 2 and doc is None and "Gale dual" in err


def test_validate_round_trip(capsys):
    code, doc, _ = run(capsys, "validate", DATA / "triangle_affine.json")
    assert code == 0 and doc["matrix"][0] == [1, 1, 1] and (doc["n"], doc["N"], doc["m"]) == (2, 3, 0)
    again = parse_config(json.dumps({"matrix": doc["matrix"], "homogenize": doc["homogenize"]}))
    original = parse_config((DATA / "triangle_affine.json").read_text())
    assert again == original


def test_validate_reads_standard_input(capsys, monkeypatch):
    text = (DATA / "segment.json").read_text()
    code, doc, _ = run(capsys, "validate", stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and doc["matrix"] == [[1, 1, 1], [0, 1, 2]]
    code, doc, _ = run(capsys, "validate", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == 0


@pytest.mark.parametrize("name", ["not_homogeneous.json", "rank_deficient.json"])
def test_invalid_configurations_exit_two(capsys, name):
    code, doc, err = run(capsys, "validate", DATA / name)
    assert code == 2 and doc is None and err.startswith("error:")


def test_parse_errors_report_a_location(capsys, monkeypatch):
    code, _, err = run(capsys, "validate", stdin='{"matrix": [[1,1],', monkeypatch=monkeypatch)
    assert code == 2 and "<stdin>:1:19" in err
    code, _, err = run(capsys, "validate", stdin='{"matrix": [[1,"x"]]}', monkeypatch=monkeypatch)
    assert code == 2 and "matrix[0][1]" in err


def test_missing_file_is_an_input_error(capsys, tmp_path):
    code, _, _ = run(capsys, "validate", tmp_path / "missing.json")
    assert code == 2


def test_gale(capsys):
    code, doc, _ = run(capsys, "gale", DATA / "segment.json")
    assert code == 0 and doc == {"matrix": [[1], [-2], [1]]}


def test_classify(capsys):
    code, doc, _ = run(capsys, "classify", DATA / "pyramid.json")
    assert code == 0 and doc == {"dual_defective": True, "witness": None, "consistent": True}
    code, doc, _ = run(capsys, "classify", DATA / "p5.json")
    assert code == 0 and not doc["dual_defective"] and doc["witness"]["base_point"] == 0


def test_conic(capsys):
    code, doc, _ = run(capsys, "conic", DATA / "hyperbola.json")
    assert code == 0 and doc["class"] == "hyperbola" and doc["signature"] == [1, 1, 0]
    code, doc, _ = run(capsys, "conic", DATA / "parabola.json")
    assert code == 0 and doc["class"] == "ellipse" and doc["oracle"] == "ellipse"
    code, _, _ = run(capsys, "conic", DATA / "segment.json")
    assert code == 2


def test_conic_disagreement_exits_one(capsys, monkeypatch):
    monkeypatch.setattr("cuspidal.bivariate.oracle_agrees", lambda kind, oracle: False)
    code, doc, _ = run(capsys, "conic", DATA / "hyperbola.json")
    assert code == 1 and doc["agree"] is False


def test_hessian_check(capsys):
    code, doc, _ = run(capsys, "hessian-check", DATA / "p5.json", "--gale", DATA / "p5_gale.json")
    assert code == 0 and doc["equal"] is True
    assert doc["cuspidal_form"] == doc["hessian_form"]


def test_verify(capsys):
    code, doc, _ = run(capsys, "verify", "--suite", "hessian", "--seed", 7, "--count", 20, "--workers", 1)
    assert code == 0 and doc["failures"] == [] and doc["instances"] >= 20


def test_verify_failure_exits_one(capsys, monkeypatch):
    broken = suites.Suite(suites.gen_g4_vanish, lambda inst: ([suites._failure(0, 1)], {}))
    monkeypatch.setitem(suites.SUITES, "g4-vanish", broken)
    code, doc, _ = run(capsys, "verify", "--suite", "g4-vanish", "--count", 3, "--workers", 1)
    assert code == 1 and len(doc["failures"]) == 3
    assert [f["index"] for f in doc["failures"]] == [0, 1, 2]


@pytest.mark.parametrize("argv", [["frobnicate"], [], ["verify", "--suite", "nope"]])
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cuspidal", "gale", str(DATA / "segment.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"matrix": [[1], [-2], [1]]}


def test_homogenized_input_matches_library():
    A = parse_config((DATA / "triangle_affine.json").read_text())
    assert A == validate_normalize(A.matrix)
