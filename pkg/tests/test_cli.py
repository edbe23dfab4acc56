import json

import pytest

from odolab.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_scale_validate_ok(write, capsys):
    path = write("s.json", {"scale": [2, 4, 8, 16]})
    code, out, _ = run(capsys, "scale", "validate", path)
    assert code == 0
    assert json.loads(out) == {"lcm": "2^4", "scale": [2, 4, 8, 16]}


def test_scale_validate_divisibility_error(write, capsys):
    path = write("bad.json", {"scale": [2, 3]})
    code, out, _ = run(capsys, "scale", "validate", path)
    assert code == 1
    assert json.loads(out)["error"] == "DivisibilityViolation"


def test_scale_validate_not_increasing(write, capsys):
    path = write("bad.json", {"scale": [2, 2]})
    code, out, _ = run(capsys, "scale", "validate", path)
    assert code == 1
    assert json.loads(out)["error"] == "NotIncreasing"


def test_usage_error_exit_code(capsys):
    assert run(capsys, "scale")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "scale", "validate", str(tmp_path / "nope.json"))
    assert code == 2
    assert "error:" in err


def test_k0_decompose_worked_example(write, capsys):
    scale = write("s.json", {"scale": [2, 4, 8, 16]})
    f = write("f.json", {"level": 2, "values": [1, 0, 1, 0]})
    code, out, _ = run(capsys, "k0", "decompose", f, "--scale", scale)
    assert code == 0
    assert out == '{"coeffs": {"0": 1, "1": -1}}\n'


def test_cohomology_solve_worked_example(write, capsys):
    scale = write("s.json", {"scale": [2, 4, 8, 16]})
    f = write("f.json", {"level": 2, "values": [3, -1, -1, -1]})
    code, out, _ = run(capsys, "cohomology", "solve", f, "--scale", scale)
    assert code == 0
    doc = json.loads(out)
    assert doc["level"] == 2
    assert doc["values"] == [["-3/2", "0"], ["3/2", "0"], ["1/2", "0"],
                             ["-1/2", "0"]]


def test_cohomology_solve_nonzero_mean(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [1, 0]})
    code, out, _ = run(capsys, "cohomology", "solve", f, "--scale", scale)
    assert code == 1
    assert json.loads(out)["error"] == "NonzeroMean"


def test_tolerance_env_override(write, capsys, monkeypatch):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [1e-6, 0.0]})
    assert run(capsys, "cohomology", "solve", f, "--scale", scale)[0] == 1
    monkeypatch.setenv("ODOLAB_TOLERANCE", "1e-3")
    assert run(capsys, "cohomology", "solve", f, "--scale", scale)[0] == 0


def test_khom_index_document(write, capsys):
    scale = write("s.json", {"scale": [2, 4, 8, 16]})
    phi = write("phi.json", {"coeffs": {"1": 1, "0": -2}})
    proj = write("p.json", {"level": 2, "values": [0, 1, 0, 1]})
    code, out, _ = run(capsys, "khom", "index", phi, proj, "--scale", scale)
    assert code == 0
    assert json.loads(out) == {"agree": True, "index": 1, "pairing": 1}


def test_khom_index_rejects_non_projection(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    phi = write("phi.json", {"coeffs": {"1": 1}})
    proj = write("p.json", {"level": 1, "values": [2, 0]})
    code, out, _ = run(capsys, "khom", "index", phi, proj, "--scale", scale)
    assert code == 1
    assert json.loads(out)["error"] == "NotAProjection"


def test_k0_pair(write, capsys):
    scale = write("s.json", {"scale": [2, 4, 8, 16]})
    phi = write("phi.json", {"coeffs": {"1": 1}})
    f = write("f.json", {"level": 2, "values": [1, 0, 1, 0]})
    code, out, _ = run(capsys, "k0", "pair", phi, f, "--scale", scale)
    assert code == 0
    assert json.loads(out) == {"pairing": -1}


def test_fn_fourier_and_norm(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    spec = write("spec.json", {"scale": [2, 4], "l": ["2", "4"]})
    f = write("f.json", {"level": 1, "values": [1, 0]})
    code, out, _ = run(capsys, "fn", "fourier", f, "--scale", scale)
    assert code == 0
    doc = json.loads(out)
    assert doc["coeffs"][0] == {"im": 0.0, "k": 0, "re": 0.5, "s": 1}
    code, out, _ = run(capsys, "fn", "norm", f, "--spec", spec, "--N", "1")
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["rd_norm"] - 1.5) <= 1e-12
    assert abs(doc["sup_norm"] - 1.0) <= 1e-12


def test_fn_exp(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [0, 0]})
    code, out, _ = run(capsys, "fn", "exp", f, "--scale", scale, "--n", "3")
    assert code == 0
    assert json.loads(out)["values"] == [[1.0, 0.0], [1.0, 0.0]]


def test_fn_exp_not_real(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [["0", "1"], ["0", "0"]]})
    code, out, _ = run(capsys, "fn", "exp", f, "--scale", scale, "--n", "1")
    assert code == 1
    assert json.loads(out)["error"] == "NotRealValued"


def test_length_verify_and_classify(write, capsys):
    good = write("good.json", [
        {"k": 0, "s": 1, "value": "1"},
        {"k": 1, "s": 2, "value": "2"},
        {"k": 1, "s": 4, "value": "4"},
        {"k": 3, "s": 4, "value": "4"},
    ])
    code, out, _ = run(capsys, "length", "verify", good)
    assert code == 0
    doc = json.loads(out)
    assert doc["normalization"] and doc["non_archimedean"]
    code, out, _ = run(capsys, "length", "classify", good)
    assert code == 0
    assert json.loads(out) == {"l": ["2", "4"], "scale": [2, 4]}


def test_length_classify_axiom_violation(write, capsys):
    bad = write("bad.json", [
        {"k": 0, "s": 1, "value": "1"},
        {"k": 1, "s": 2, "value": "4"},
        {"k": 1, "s": 4, "value": "2"},
        {"k": 3, "s": 4, "value": "2"},
    ])
    code, out, _ = run(capsys, "length", "verify", bad)
    assert code == 0
    doc = json.loads(out)
    assert not doc["non_archimedean"]
    assert "non_archimedean" in doc["witnesses"]
    code, out, _ = run(capsys, "length", "classify", bad)
    assert code == 1
    assert json.loads(out)["error"] == "AxiomViolation"


def test_spectral_bound_document(write, capsys):
    spec = write("spec.json", {"scale": [2, 4, 8, 16], "l": [2, 4, 8, 16]})
    f = write("f.json", {"level": 2,
                         "values": [["1", "0"], ["0", "1"], ["-1", "0"],
                                    ["0", "-1"]]})
    code, out, _ = run(capsys, "spectral", "bound", f, "--spec", spec,
                       "--Y", "256")
    assert code == 0
    doc = json.loads(out)
    assert doc["bound"] == 8.0
    assert doc["within"] is True


def test_byte_identical_reruns(write, capsys):
    scale = write("s.json", {"scale": [3, 6, 12]})
    f = write("f.json", {"level": 2, "values": [[0.125, -1.5]] * 6})
    first = run(capsys, "fn", "fourier", f, "--scale", scale)
    second = run(capsys, "fn", "fourier", f, "--scale", scale)
    assert first == second


def test_output_flag_writes_file(write, capsys, tmp_path):
    scale = write("s.json", {"scale": [2, 4]})
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "scale", "validate", scale,
                       "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {"lcm": "2^2", "scale": [2, 4]}


def test_mode_flag_coerces_to_float(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [1, 0]})
    code, out, _ = run(capsys, "cohomology", "solve", f, "--scale", scale,
                       "--mode", "float", "--method", "fourier")
    assert code == 1  # still mean obstructed
    code, out, _ = run(capsys, "fn", "exp", f, "--scale", scale, "--n", "0",
                       "--mode", "float")
    assert code == 0


def test_mode_exact_on_float_file_is_usage_error(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [0.5, 0.0]})
    code, _, err = run(capsys, "fn", "exp", f, "--scale", scale, "--n", "1",
                       "--mode", "exact")
    assert code == 2
    assert "exact" in err


def test_level_flag_promotes_and_overflows(write, capsys):
    scale = write("s.json", {"scale": [2, 4]})
    f = write("f.json", {"level": 1, "values": [1, 0]})
    code, out, _ = run(capsys, "k0", "decompose", f, "--scale", scale,
                       "--level", "2")
    assert code == 0
    assert json.loads(out) == {"coeffs": {"0": 1, "1": -1}}
    code, out, _ = run(capsys, "k0", "decompose", f, "--scale", scale,
                       "--level", "3")
    assert code == 1
    assert json.loads(out)["error"] == "LevelOverflow"


def test_selftest_runs_clean(capsys):
    code, out, err = run(capsys, "selftest")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert "axiom-witness" in doc["suites"]
    assert "pass" in err
