import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from spinlogic.cli import main

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("SPINLOGIC_UPDATE_GOLDEN") == "1"


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def check_golden(name, text):
    path = GOLDEN / name
    if UPDATE:
        path.write_text(text)
    assert text == path.read_text()


CASES = [
    ("gate_nand.txt", ["gate", "NAND", "--c1", "1", "--c2", "1", "--c12", "1"], None),
    ("gate_xor.json", ["gate", "XOR", "--json", "-"], None),
    ("gate_copy.txt", ["gate", "COPY"], None),
    ("adder_2_nand.net", ["adder", "--bits", "2", "--variant", "all-nand"], None),
    ("adder_4_std.net", ["adder", "--bits", "4", "--variant", "standard"], None),
    ("ha_nand.json", ["compile"], "adder_ha_nand.net"),
    ("verify_2_std.txt", ["verify"], "rc2_std.json"),
    ("orbit.txt", ["orbit"], None),
    ("stab_xor.txt", ["stab", "XOR"], None),
    ("stab_1110.txt", ["stab", "1110"], None),
    ("graph_4_nand.txt", ["graph", "--metrics"], "rc4_nand.json"),
    ("graph_ha.dot", ["graph", "--dot", "-"], "ha_nand.json"),
    ("graph_ha_graph.json", ["graph", "--json", "-"], "ha_nand.json"),
    ("solve_fa.txt", ["solve", "--clamp", "A=1", "--clamp", "B=1", "--clamp", "Cin=1",
                      "--seed", "4"], "fa_std.json"),
]


@pytest.mark.parametrize("golden,argv,stdin_file", CASES, ids=[c[0] for c in CASES])
def test_golden(golden, argv, stdin_file, monkeypatch, capsys):
    stdin = (GOLDEN / stdin_file).read_text() if stdin_file else ""
    code, out, err = run(argv, stdin, monkeypatch, capsys)
    assert code == 0, err
    check_golden(golden, out)


def test_compile_is_byte_stable(monkeypatch, capsys):
    net = (GOLDEN / "adder_ha_nand.net").read_text()
    first = run(["compile"], net, monkeypatch, capsys)[1]
    second = run(["compile"], net, monkeypatch, capsys)[1]
    assert first == second == (GOLDEN / "ha_nand.json").read_text()


def test_gate_json_to_file(tmp_path, monkeypatch, capsys):
    out = tmp_path / "h.json"
    code, text, _ = run(["gate", "AND", "--json", str(out)], "", monkeypatch, capsys)
    assert code == 0
    assert "ground energy -3, 4 ground states: 000 010 100 111" in text
    assert json.loads(out.read_text())["n_spins"] == 3


def test_compile_with_params_and_clamps(tmp_path, monkeypatch, capsys):
    dest = tmp_path / "c.json"
    code, _, _ = run(["compile", str(GOLDEN / "adder_ha_nand.net"), "--c1", "2",
                      "--clamp", "A0=1", "--out", str(dest)], "", monkeypatch, capsys)
    assert code == 0
    data = json.loads(dest.read_text())
    assert data["clamps"] == {"A0": 1}
    assert data["ground_energy_expected"] == -20.0
    code, out, _ = run(["verify", str(dest)], "", monkeypatch, capsys)
    assert code == 0 and out.startswith("PASS")


def test_verify_accepts_bare_netlist(monkeypatch, capsys):
    code, out, _ = run(["verify", "--cap", "20"], (GOLDEN / "adder_2_nand.net").read_text(),
                       monkeypatch, capsys)
    assert code == 0 and out.startswith("PASS")


def test_verify_failure_exit_code(monkeypatch, capsys):
    data = json.loads((GOLDEN / "ha_nand.json").read_text())
    data["terms"] = [t for t in data["terms"] if t["spins"] != [0, 1]]
    code, out, err = run(["verify"], json.dumps(data), monkeypatch, capsys)
    assert code == 1
    assert out.startswith("FAIL")
    assert err.startswith("error: mismatch:")


@pytest.mark.parametrize("argv,stdin,category", [
    (["gate", "MUX"], "", "lookup"),
    (["gate", "NAND", "--c1", "-1"], "", "parameter"),
    (["gate", "XOR", "--c2", "0.4"], "", "parameter"),
    (["compile"], "INPUT a\nOUTPUT q\nFOO a -> q\n", "syntax"),
    (["compile"], "INPUT a b\nOUTPUT q\nNAND a -> q\n", "arity"),
    (["compile"], "INPUT a b\nOUTPUT q r\nNAND a b -> q\n", "undeclared"),
    (["compile", "--clamp", "a=2"], "INPUT a b\nOUTPUT q\nNAND a b -> q\n", "usage"),
    (["stab", "101"], "", "lookup"),
    (["verify", "--cap", "10"], None, "capacity"),
    (["graph"], "INPUT a\nOUTPUT q\nNOT a -> q\n", None),
    (["compile", "/nonexistent/file.net"], "", "io"),
])
def test_error_lines(argv, stdin, category, monkeypatch, capsys):
    if stdin is None:
        stdin = (GOLDEN / "rc4_nand.json").read_text()
    code, out, err = run(argv, stdin, monkeypatch, capsys)
    if category is None:
        assert code == 0
        return
    assert code == 2
    lines = err.strip().split("\n")
    assert len(lines) == 1
    assert lines[0].startswith(f"error: {category}: ")


def test_solve_config_file(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"sweeps": 400, "restarts": 3, "seed": 11}))
    fa = (GOLDEN / "fa_std.json").read_text()
    code, out, _ = run(["solve", "--config", str(cfg), "--clamp", "A=0", "--clamp", "B=1",
                        "--clamp", "Cin=1"], fa, monkeypatch, capsys)
    assert code == 0
    assert "success=yes" in out
    assert "outputs: S=0 Cout=1" in out


def test_shell_pipeline():
    cmd = (f"{sys.executable} -m spinlogic.cli adder --bits 4 --variant all-nand"
           f" | {sys.executable} -m spinlogic.cli compile"
           f" | {sys.executable} -m spinlogic.cli graph")
    res = subprocess.run(cmd, shell=True, capture_output=True, text=True, check=True)
    assert res.stdout.startswith("nodes 46\tedges 86\t")
    assert "mean D 0.0831" in res.stdout
