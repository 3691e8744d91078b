import io
import json
import subprocess
import sys

import pytest

from terdragon.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_gen_delta_extract_pipeline(capsys, monkeypatch):
    assert run(["gen", "--lambda", "+"], capsys) == (0, "+-\n")
    code, out = run(["gen", "--lambda", "+-"], capsys)
    assert run(["delta"], capsys, out, monkeypatch) == (0, "-+\n")
    assert run(["extract"], capsys, out, monkeypatch) == (0, "+-\n")


def test_gen_file_round_trip(tmp_path, capsys):
    f = tmp_path / "t.json"
    assert main(["gen", "--lambda", "-+-", "--json", "--out", str(f)]) == 0
    code, out = run(["extract", f.read_text()], capsys)
    assert (code, out) == (0, "-+-\n")


def test_usage_errors(capsys):
    assert main(["gen", "--lambda", "+x"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    assert main(["cover", "--lambda", "+-", "--chain", "0,0;1,0;0,1"]) == 2


def test_extract_failure_exit_code(capsys):
    assert main(["extract", "++++++"]) == 1


def test_classify(capsys):
    code, out = run(["classify", "--lambda", "alternating:-1", "--pseq", "M"], capsys)
    assert code == 0 and json.loads(out)["case"] == "ThreeSeparated"
    code, out = run(["classify", "--lambda", "constant:+1", "--chain", "0,0"], capsys)
    assert json.loads(out)["case"] == "ThreeStar"
    code, out = run(["classify", "--lambda", "constant:+1", "--pseq", "I"], capsys)
    assert code == 1 and json.loads(out)["case"] == "InconsistentInput"


def test_frontier_check(capsys):
    code, out = run(["frontier", "--lambda", "+", "--check"], capsys)
    assert code == 0 and json.loads(out)["check"]["ok"]


def test_cover_render_liso(tmp_path, capsys):
    patch = tmp_path / "p.json"
    svg = tmp_path / "p.svg"
    code, out = run(["cover", "--lambda", "+-+", "--chain", "0,0;0,0;0,0;0,0", "--radius", "30",
                     "--star", "+", "--out", str(patch), "--svg", str(svg)], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["validation"]["covering_ok"] and rep["symmetry"]["invariant"]
    assert svg.read_text().startswith("<?xml")
    code, out = run(["render", "--patch", str(patch)], capsys)
    assert code == 0 and out == svg.read_text()
    code, out = run(["liso", "--n", "1", "--x", "0,0", "--y", "0,0", "--patch", str(patch)], capsys)
    assert code == 0 and json.loads(out)["witness"] == [0, 0]


def test_render_figure_is_stable(capsys):
    _, a = run(["render", "--figure"], capsys)
    _, b = run(["render", "--figure"], capsys)
    assert a == b and a.count("<path") == 4


def test_verify_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "coverage", "--n", "2", "--report", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["pass"] and rep["minima"]["2"]["min_k"] >= 2


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "terdragon.cli", "gen", "--lambda", "-"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "-+\n"


def test_sign_arguments_with_leading_minus(capsys):
    assert run(["gen", "--lambda", "--"], capsys) == (0, "-+--++-+\n")
    code, out = run(["gen", "--lambda", "-+-"], capsys)
    assert run(["extract", out.strip()], capsys) == (0, "-+-\n")
    assert run(["delta", "-+", "--json"], capsys)[0] == 0
    assert run(["gen", "--lambda", "-"], capsys) == (0, "-+\n")


def test_star_minus_choice(capsys):
    code, out = run(["cover", "--lambda", "+-+", "--star", "-", "--radius", "30"], capsys)
    assert code == 0
    assert json.loads(out)["symmetry"]["invariant"]
