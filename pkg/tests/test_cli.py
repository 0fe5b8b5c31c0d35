"""Command-line surface: exit codes, determinism, and document round trips."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from logbundle import serialize as ser
from logbundle.cli import main
from logbundle.poly import MultiPoly

from conftest import EXAMPLE_A_FORMS


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def arrangement_file(tmp_path):
    forms = [[str(c) for c in f] for f in EXAMPLE_A_FORMS]
    return write_json(tmp_path, "arr.json", {"n": 2, "m": 5, "forms": forms})


@pytest.fixture
def points_file(tmp_path):
    pts = [[str(c) for c in f] for f in EXAMPLE_A_FORMS]
    return write_json(tmp_path, "pts.json", {"points": pts})


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_outputs_are_byte_identical(capsys, arrangement_file):
    code1, out1 = run_cli(capsys, ["tensor", arrangement_file])
    code2, out2 = run_cli(capsys, ["tensor", arrangement_file])
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.endswith("\n")


def test_tensor_document_round_trips(capsys, arrangement_file):
    code, out = run_cli(capsys, ["tensor", arrangement_file])
    assert code == 0
    doc = json.loads(out)
    t = ser.parse_tensor(doc)
    assert t.dim_i == 2 and t.dim_w == 4
    assert ser.dumps(ser.tensor_record(t)) == out


def test_arrangement_document_round_trips(capsys, arrangement_file):
    code, out = run_cli(capsys, ["associate", arrangement_file])
    assert code == 0
    doc = json.loads(out)
    a = ser.parse_arrangement(doc)
    assert (a.n, a.m) == (1, 5)
    assert ser.dumps(ser.arrangement_record(a)) == out


def test_jumping_curve_poly_round_trips(capsys, points_file):
    code, out = run_cli(capsys, ["jumping-curve", points_file])
    assert code == 0
    doc = json.loads(out)
    curve = ser.parse_poly(doc["curve"])
    expect = MultiPoly(3, {(1, 1, 0): 3, (1, 0, 1): -4, (0, 1, 1): 1})
    assert curve == expect or curve == expect.scale(-1)
    assert doc["curve"]["rendered"] == curve.render()


def test_pretty_is_same_data(capsys, arrangement_file):
    _, plain = run_cli(capsys, ["tensor", arrangement_file])
    _, pretty = run_cli(capsys, ["tensor", arrangement_file, "--pretty"])
    assert plain != pretty
    assert json.loads(plain) == json.loads(pretty)


def test_out_file_matches_stdout(capsys, tmp_path, arrangement_file):
    target = tmp_path / "doc.json"
    code, out = run_cli(capsys, ["chern", "--n", "2", "--m", "6", "--out", str(target)])
    assert code == 0
    assert target.read_text(encoding="utf-8") == out
    assert json.loads(out)["c"] == [3, 6]


def test_gp_check_reports_offending_indices(capsys, tmp_path):
    bad = write_json(tmp_path, "bad.json", {
        "points": [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]]
    })
    code, out = run_cli(capsys, ["gp-check", bad])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "GeneralPositionError"
    assert doc["error"]["indices"] == [0, 1, 2]


def test_domain_error_exit_code(capsys, tmp_path):
    # too few forms for an arrangement
    arr = write_json(tmp_path, "small.json", {
        "forms": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    })
    code, out = run_cli(capsys, ["tensor", arr])
    assert code == 1
    assert "error" in json.loads(out)


def test_malformed_input_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, out = run_cli(capsys, ["tensor", str(path)])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "MalformedInput"
    missing_key = write_json(tmp_path, "nokey.json", {"rows": []})
    code, out = run_cli(capsys, ["tensor", missing_key])
    assert code == 2
    code, out = run_cli(capsys, ["tensor", str(tmp_path / "absent.json")])
    assert code == 2


def test_float_entries_are_domain_errors(capsys, tmp_path):
    arr = write_json(tmp_path, "floats.json", {
        "forms": [[1.5, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]]
    })
    code, out = run_cli(capsys, ["tensor", arr])
    assert code == 1
    assert json.loads(out)["error"]["type"] == "LogBundleError"


def test_membership_and_jump_agree(capsys, tmp_path, arrangement_file, points_file):
    _, tensor_out = run_cli(capsys, ["tensor", arrangement_file])
    tensor_file = write_json(tmp_path, "tensor.json", json.loads(tensor_out))
    # the dual flat of this line is the point (1:3:9), on the jumping conic
    line = write_json(tmp_path, "line.json", {
        "points": [["-3", "1", "0"], ["-9", "0", "1"]]
    })
    code, out = run_cli(capsys, ["jump-test", tensor_file, line])
    assert code == 0
    doc = json.loads(out)
    assert doc["jumping"] is True
    assert doc["generic_type"] == [1, 1]
    flat = write_json(tmp_path, "flat.json", {
        "forms": [["3", "-1", "0"], ["9", "0", "-1"]]
    })
    code, out = run_cli(capsys, ["membership", points_file, flat])
    assert code == 0
    doc = json.loads(out)
    assert doc["member"] is True
    assert doc["determinant"] == "0"


def test_plot_writes_a_file(capsys, tmp_path, points_file):
    target = tmp_path / "curve.png"
    code, out = run_cli(capsys, ["jumping-curve", points_file, "--plot", str(target)])
    assert code == 0
    assert json.loads(out)["plot"] == str(target)
    assert target.stat().st_size > 0


def test_schwarzenberger_and_iso(capsys, tmp_path):
    _, s_out = run_cli(capsys, ["schwarzenberger", "--n", "2", "--m", "5"])
    s_file = write_json(tmp_path, "schw.json", json.loads(s_out))
    code, out = run_cli(capsys, ["iso", s_file, s_file])
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "iso"
    assert doc["hom_dim"] == 1
    assert doc["g_i"] is not None


def test_subprocess_entry_point(tmp_path, arrangement_file):
    proc = subprocess.run(
        [
            sys.executable,
            "-c",
            "from logbundle.cli import main; import sys; sys.exit(main(sys.argv[1:]))",
            "chern",
            "--n",
            "2",
            "--m",
            "5",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["c"] == [2, 3]
