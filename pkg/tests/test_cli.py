"""Command-line interface: artifacts, round-trips and exit codes."""

import json

import pytest

from orbsp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_counts(capsys):
    code, out, _ = run(capsys, "counts", "--example", "hexagon1orb4")
    assert code == 0
    assert json.loads(out)["e"] == 5


def test_artifact_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "flip", "--example", "annulus11", "--arc", "0")
    assert code == 0
    path = tmp_path / "flipped.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "flip", "--surface", str(path), "--arc", "0")
    assert code == 0
    assert json.loads(out2)["surface"] == json.loads(out)["surface"]


def test_validate_and_input_errors(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", "--example", "torus1orb1")
    assert code == 0 and json.loads(out)["valid"]
    code, _, err = run(capsys, "counts", "--example", "nope")
    assert code == 2 and "error" in json.loads(err)
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "counts", "--surface", str(bad))
    assert code == 2 and "error" in json.loads(err)


def test_bad_coloring_is_an_input_error(capsys):
    code, _, err = run(capsys, "potential", "--example", "hexagoncore4",
                       "--xi", "3,0,0")
    assert code == 2 and "error" in json.loads(err)


def test_flipgraph_disk(capsys):
    code, out, _ = run(capsys, "flipgraph", "--example", "hexagon1orb4",
                       "--quotient", "--limit", "1000")
    assert code == 0
    rec = json.loads(out)
    assert rec["components"] == 1 and not rec["overflow"]
    assert rec["vertices"] == 252


def test_jacdim_and_center(capsys):
    code, out, _ = run(capsys, "jacdim", "--example", "annulus11")
    assert code == 0
    assert json.loads(out) == {"dim": 8, "certified": True}
    code, out, _ = run(capsys, "center", "--example", "annulus11")
    assert code == 0
    assert json.loads(out) == {"center_dim": 2}


def test_verify_main_theorem(capsys):
    code, out, _ = run(capsys, "verify-main-theorem", "--config", "2",
                       "--p", "5")
    assert code == 0 and out.startswith("PASS")


def test_verify_all_subset(capsys):
    code, out, _ = run(capsys, "verify-all", "--criteria", "3", "7")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("criterion")]
    assert len(lines) == 2 and all("PASS" in ln for ln in lines)
