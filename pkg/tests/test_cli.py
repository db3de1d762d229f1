"""CLI behaviour: output shape, determinism, exit codes."""

import json
from pathlib import Path

import jsonschema

from alcove.cli import main

SCHEMA = json.loads((Path(__file__).parent.parent / "schemas" / "cli.schema.json")
                    .read_text())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


def test_info_a2_json(capsys):
    doc = run_json(capsys, "info", "A2")
    assert doc["result"]["center"] == [3]
    assert doc["result"]["num_roots"] == 6


def test_info_text_and_json_agree(capsys):
    doc = run_json(capsys, "moduli", "A1", "--level", "2")
    code, out, _ = run(capsys, "moduli", "A1", "--level", "2")
    assert code == 0
    assert str(doc["result"]["burnside_count"]) in out
    assert doc["result"]["burnside_count"] == 4


def test_deterministic_bytes(capsys):
    _, out1, _ = run(capsys, "types", "B3", "--format", "json")
    _, out2, _ = run(capsys, "types", "B3", "--format", "json")
    assert out1 == out2


def test_chains_g2(capsys):
    doc = run_json(capsys, "chains", "G2")
    assert doc["result"]["m"] == 3
    assert len(doc["result"]["chain"]) == 3


def test_chains_component_steps_flag(capsys):
    doc = run_json(capsys, "chains", "B3", "--component-steps")
    assert doc["result"]["component_steps"] is True


def test_moduli_direct(capsys):
    doc = run_json(capsys, "moduli", "A2", "--level", "2", "--direct")
    assert doc["result"]["burnside_count"] == 5
    assert doc["result"]["direct_count"] == 5


def test_centralizer_pair(capsys):
    doc = run_json(capsys, "centralizer", "G2", "--points", "0,1/2;1/2,-1/2")
    assert doc["result"]["component_group"] == [2]
    assert doc["result"]["torus_rank"] == 2


def test_centralizer_single(capsys):
    doc = run_json(capsys, "centralizer", "A2", "--points", "0,1/3")
    assert doc["result"]["factors"] == ["A1"]
    assert doc["result"]["torus_rank"] == 1
    assert doc["result"]["component_group"] == []


def test_bds_f4(capsys):
    doc = run_json(capsys, "bds", "F4")
    got = sorted(" x ".join(s["factors"]) for s in doc["result"]["subsystems"])
    assert got == ["A1 x C3", "A2 x A2", "B4"]


def test_types_a2(capsys):
    doc = run_json(capsys, "types", "A2")
    assert doc["result"]["count"] == 3


def test_fold(capsys):
    doc = run_json(capsys, "fold", "A5", "--k", "3")
    assert doc["result"]["factors"] == ["A1", "A1", "A1"]
    assert doc["result"]["torus_rank"] == 2


def test_cpair(capsys):
    doc = run_json(capsys, "cpair", "A3", "--center", "2")
    assert doc["result"]["cpair"]["dim"] == 1
    doc = run_json(capsys, "cpair", "A3", "--center", "0")
    assert doc["result"]["cpair"]["dim"] == 3


def test_invalid_type_exit_2(capsys):
    code, _, err = run(capsys, "info", "Q9")
    assert code == 2 and "Q9" in err


def test_invalid_points_exit_2(capsys):
    code, _, err = run(capsys, "centralizer", "A2", "--points", "0.5,0")
    assert code == 2 and "decimal" in err
    code, _, err = run(capsys, "centralizer", "A2", "--points", "1/3")
    assert code == 2


def test_invalid_fold_exit_2(capsys):
    code, _, err = run(capsys, "fold", "A4", "--k", "3")
    assert code == 2


def test_invalid_center_exit_2(capsys):
    code, _, err = run(capsys, "cpair", "G2", "--center", "1")
    assert code == 2


def test_cap_exit_3(capsys):
    code, _, err = run(capsys, "moduli", "B4", "--level", "2", "--max-weyl", "10")
    assert code == 3 and "cap" in err


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "moduli", "A2", "--level", "4", "--direct",
                       "--budget", "10")
    assert code == 3
