import json
import subprocess
import sys

from quiverhom.cli import main
from quiverhom.fixtures import FIXTURE_TEXTS


def _json_lines(capsys):
    return [json.loads(l) for l in capsys.readouterr().out.splitlines() if l.strip()]


def test_profile_json(capsys):
    assert main(["profile", "--fixture", "ex572", "--depth", "3", "--json"]) == 0
    rows = _json_lines(capsys)
    assert rows[0]["command"] == "profile"
    assert [r["fd"] for r in rows[1:]] == [["1", "1", "2"], ["1", "1", "2"]]


def test_profile_table(capsys):
    assert main(["profile", "--fixture", "A3"]) == 0
    assert "left" in capsys.readouterr().out


def test_algebra_file(tmp_path, capsys):
    path = tmp_path / "alg.txt"
    path.write_text(FIXTURE_TEXTS["ex57"])
    assert main(["check", "--algebra", str(path), "--cond", "ln", "--l", "2", "--n", "2",
                 "--json"]) == 0
    verdicts = {r["params"]["side"]: r["verdict"] for r in _json_lines(capsys)[1:]}
    assert verdicts == {"left": "holds", "op": "fails"}


def test_module_commands(capsys):
    for cmd in (["grade"], ["resolve", "--length", "2"], ["tr"], ["ext"]):
        assert main(cmd + ["--fixture", "ex572", "--standard", "simple:3", "--json"]) == 0
    assert main(["approx", "--fixture", "nakayama", "--kind", "cotorsion", "--i", "2", "--j", "2",
                 "--standard", "simple:1", "--json"]) == 0
    assert main(["cotorsion-verify", "--fixture", "nakayama", "--i", "1", "--j", "2",
                 "--json"]) == 0


def test_exit_codes(tmp_path, capsys):
    # usage errors exit 2
    assert main(["profile"]) == 2
    assert main(["profile", "--fixture", "nope"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("vertices 1\narrow a: 1 -> 2\n")
    assert main(["profile", "--algebra", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    # a refused hypothesis exits 3
    assert main(["approx", "--fixture", "ex57", "--kind", "coresolution", "--i", "1",
                 "--standard", "simple:1"]) == 3


def test_selftest_is_byte_identical():
    cmd = [sys.executable, "-m", "quiverhom", "selftest", "--json", "--only", "1", "2", "8"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
