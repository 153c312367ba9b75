import json
import subprocess
import sys

import pytest

from qstrange.cli import main
from qstrange.corpus import DEGENERATE
from qstrange.selftest import fixture_path, move_fixture_paths


def run(*argv):
    return main([str(a) for a in argv])


def test_analyze_ok(tmp_path, capsys):
    report, svg = tmp_path / "r.json", tmp_path / "k2.svg"
    assert run("analyze", fixture_path("k2.json"), "--report", report, "--svg", svg) == 0
    out = capsys.readouterr().out
    assert "St           1" in out and "observation: I_q integral" in out
    doc = json.loads(report.read_text())
    assert doc["st"] == 1 and doc["tool"]["name"] == "qstrange"
    assert all(doc["cross_checks"].values())
    assert svg.read_text().startswith("<svg")


def test_report_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("corpus", "random", "--seed", 3, "--doubles", 6, "--out", tmp_path / "c.json")
    for path in (a, b):
        assert run("analyze", tmp_path / "c.json", "--report", path) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("kind", DEGENERATE)
def test_degenerate_exit_code(kind, capsys):
    assert run("analyze", fixture_path(f"degenerate_{kind}.json")) == 2
    assert "genericity violation" in capsys.readouterr().err


def test_input_errors(tmp_path, capsys):
    assert run("analyze", tmp_path / "missing.json") == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [[0, 0], [1, 0]]}')
    assert run("analyze", bad) == 1
    assert run("corpus", "random", "--seed", 1, "--doubles", 50) == 1
    assert run("corpus", "make", "--family", "flower", "--param", 5, "--resolution", 32) == 1
    with pytest.raises(SystemExit) as exc:
        run("analyze")
    assert exc.value.code == 2  # argparse usage error


def test_analyze_rebase(capsys, tmp_path):
    run("corpus", "make", "--family", "flower", "--param", 1, "--out", tmp_path / "k2.json")
    doc = json.loads((tmp_path / "k2.json").read_text())
    doc["base_index"] = 32  # the middle of the small inner loop
    (tmp_path / "off.json").write_text(json.dumps(doc))
    assert run("analyze", tmp_path / "off.json") == 1
    assert "BaseNotExterior" in capsys.readouterr().err
    assert run("analyze", tmp_path / "off.json", "--rebase-exterior") == 0


def test_corpus_make_to_stdout(capsys):
    assert run("corpus", "make", "--family", "circle", "--resolution", 16) == 0
    assert len(json.loads(capsys.readouterr().out)["vertices"]) == 16


def test_verify_move(tmp_path, capsys):
    for path in move_fixture_paths():
        assert run("verify-move", path, "--report", tmp_path / "m.json") == 0
    assert json.loads((tmp_path / "m.json").read_text())["pass"] is True


def test_verify_move_mismatch(tmp_path):
    doc = json.loads(move_fixture_paths()[0].read_text())
    doc["ind_param"] += 5
    (tmp_path / "p.json").write_text(json.dumps(doc))
    assert run("verify-move", tmp_path / "p.json") == 4


def test_selftest(capsys):
    assert run("selftest", "--curves", 0) == 0
    assert run("selftest", "--curves", 4, "--seed", 2) == 0
    assert "rows pass" in capsys.readouterr().out


def test_selftest_tight_tolerance_fails(capsys):
    # route differences are a few ulps, so an absurdly tight eps_coeff must trip
    assert run("selftest", "--curves", 4, "--eps-coeff", 1e-17) == 3
    assert "FAIL" in capsys.readouterr().out


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "qstrange.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("qstrange ")
