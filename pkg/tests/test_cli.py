import json
import subprocess
import sys

import pydot
import pytest

from realhurwitz.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_real_both(capsys):
    code, out, _ = call(capsys, "real", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "+", "--method", "both")
    assert (code, out) == (0, "oracle=1 tropical=1 OK")


def test_real_default_is_tropical(capsys):
    code, out, _ = call(capsys, "real", "-g", "0", "-l", "2,2,1,1", "-m", "3,3", "--signs", "++")
    assert (code, out) == (0, "tropical=2")


def test_real_json(capsys):
    code, out, _ = call(capsys, "--json", "real", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "-",
                        "--method", "both")
    data = json.loads(out)
    assert code == 0
    assert data == {"g": 0, "lambda": "3", "mu": "1,1,1", "signs": "-",
                    "oracle": "1", "tropical": "1", "agree": True}


def test_complex(capsys):
    assert call(capsys, "complex", "-g", "0", "-l", "3", "-m", "1,1,1")[:2] == (0, "complex=1/3")


def test_enhanced(capsys):
    assert call(capsys, "enhanced", "-g", "0", "-l", "3", "-m", "1,1,1")[:2] == (0, "E=1 classes=1")


def test_fixed_target(capsys):
    assert call(capsys, "fixed-target", "-d", "5")[:2] == (0, "N=5 expected=5")
    code, out, _ = call(capsys, "--json", "fixed-target", "-d", "7")
    assert code == 0 and json.loads(out) == {"d": 7, "N": 49, "expected": 49}


def test_export_json_and_dot(capsys, tmp_path):
    code, out, _ = call(capsys, "export", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "+")
    assert code == 0
    (cover,) = json.loads(out)
    assert len(cover["edges"]) == 5
    path = tmp_path / "c.dot"
    code, out, _ = call(capsys, "export", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "+",
                        "--format", "dot", "--out", str(path))
    assert code == 0 and out == f"wrote 1 classes to {path}"
    assert pydot.graph_from_dot_data(path.read_text())


@pytest.mark.parametrize("argv", [
    ["real", "-g", "0", "-l", "3,x", "-m", "1,1,1", "--signs", "+"],
    ["real", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "+*"],
    ["real", "-g", "0", "-l", "3", "-m", "1,1,1", "--signs", "++"],
    ["real", "-g", "0", "-l", "3", "-m", "1,1"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


@pytest.mark.parametrize("argv", [
    ["real", "-g", "0", "-l", "3", "-m", "3", "--signs", "+"],
    ["complex", "-g", "0", "-l", "3", "-m", "2,1"],
    ["fixed-target", "-d", "4"],
    ["complex", "-g", "0", "-l", "3", "-m", "1,1"],
])
def test_degenerate_input(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 3 and "error" in err


def test_verify_small(capsys, monkeypatch):
    import realhurwitz.battery as battery

    # keep the heavier fixed-size criteria out of this smoke test
    nonvanishing, blocks = battery.check_nonvanishing, battery.check_block_family
    monkeypatch.setattr(battery, "check_nonvanishing", lambda: nonvanishing(max_d=4, max_r=2))
    monkeypatch.setattr(battery, "check_block_family", lambda: blocks(max_m=7, max_enumerated=5))
    code, out, _ = call(capsys, "verify", "--max-d", "4", "--max-r", "2")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 8 and all(line.startswith("PASS ") for line in lines)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "realhurwitz", "complex", "-g", "0", "-l", "5", "-m", "1,1,1,1,1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "complex=1"
